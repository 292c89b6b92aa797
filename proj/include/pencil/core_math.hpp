#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pencil {

using Vector = std::vector<double>;

// A Vector whose entries are strictly positive and sum to 1 within 1e-9.
// Produced by softmax(); consumed by the loss functions.
using ProbVector = Vector;

/// Row-major dense matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Numerically stable softmax: subtracts the max entry before exponentiating,
/// so the result is invariant under adding a constant to all inputs. Shifted
/// exponents are floored at -700 so every output entry stays strictly positive.
/// Throws std::invalid_argument on empty or non-finite input.
ProbVector softmax(std::span<const double> v);
inline ProbVector softmax(const Vector& v) { return softmax(std::span<const double>(v)); }

/// log(max(p, eps)). Guards every log term in the losses against p -> 0.
/// Throws std::invalid_argument if eps <= 0.
double log_clamped(double p, double eps = 1e-12);

/// Index of the largest entry; the smallest index wins ties.
/// Throws std::invalid_argument on an empty vector.
std::size_t argmax_tiebreak(std::span<const double> v);
inline std::size_t argmax_tiebreak(const Vector& v) { return argmax_tiebreak(std::span<const double>(v)); }

bool all_finite(std::span<const double> v);

/// True if v sums to 1 within tol and every entry is strictly positive.
bool is_prob_vector(std::span<const double> v, double tol = 1e-9);

/// xoshiro256** (Blackman & Vigna), seeded through splitmix64. The raw stream
/// and every derived draw below are defined purely in terms of 64-bit integer
/// arithmetic and IEEE doubles, so identical seeds give identical sequences on
/// any conforming platform. Streams are single-owner: never share one instance
/// across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller; consumes two uniforms per pair,
    /// the spare value is cached.
    double normal();

    /// Unbiased uniform integer in [0, n); rejection sampling. n must be > 0.
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace pencil
