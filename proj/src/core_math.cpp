#include "pencil/core_math.hpp"

#include <cmath>
#include <stdexcept>

namespace pencil {

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

bool is_prob_vector(std::span<const double> v, double tol) {
    if (v.empty()) return false;
    double sum = 0.0;
    for (double x : v) {
        if (!(x > 0.0)) return false;
        sum += x;
    }
    return std::abs(sum - 1.0) <= tol;
}

ProbVector softmax(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("softmax: empty input");
    if (!all_finite(v)) throw std::invalid_argument("softmax: non-finite input");

    double max_val = v[0];
    for (double x : v) max_val = std::max(max_val, x);

    // exp underflows to 0 below roughly -745; flooring the shifted exponent
    // keeps every entry strictly positive.
    ProbVector out(v.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        out[j] = std::exp(std::max(v[j] - max_val, -700.0));
        sum += out[j];
    }
    for (double& x : out) x /= sum;
    return out;
}

double log_clamped(double p, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("log_clamped: eps must be > 0");
    return std::log(std::max(p, eps));
}

std::size_t argmax_tiebreak(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("argmax_tiebreak: empty input");
    std::size_t best = 0;
    for (std::size_t j = 1; j < v.size(); ++j) {
        if (v[j] > v[best]) best = j;
    }
    return best;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    // Mix the stream id into the seed so (seed, 0), (seed, 1), ... give
    // unrelated substreams.
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 is kept away from 0 so the log stays finite.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be > 0");
    const std::uint64_t threshold = (0ULL - n) % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % n;
    }
}

} // namespace pencil
