#pragma once

#include "pencil/core_math.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pencil {

/// Feature vectors with noisy labels and (optionally) the hidden true labels.
/// True labels are never shown to the training loop; they exist only so the
/// metrics can count recovered labels. Immutable after construction.
struct Dataset {
    Matrix features;                // n x d
    std::vector<int> noisy_labels;  // n entries in [0, class_count)
    std::vector<int> true_labels;   // empty when unknown, else n entries
    int class_count = 0;

    std::size_t size() const { return noisy_labels.size(); }
    std::size_t dim() const { return features.cols(); }
    bool has_true_labels() const { return !true_labels.empty(); }
};

enum class NoiseKind { symmetric, asymmetric_circular, asymmetric_pairs };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::symmetric;
    double rate = 0.0;
    // source -> target flips, used only by asymmetric_pairs. A bidirectional
    // confusion (a <-> b) is expressed by listing both directions.
    std::vector<std::pair<int, int>> pair_map;
};

/// c isotropic Gaussian clusters with centers pairwise >= separation apart,
/// balanced class counts (+-1, assigned round-robin). The dataset is clean at
/// creation: true_labels == noisy_labels. Throws std::invalid_argument on bad
/// arguments and std::runtime_error if center placement keeps failing.
Dataset make_blobs(std::size_t n, int c, std::size_t d, double separation, double sigma,
                   std::uint64_t seed);

/// Each label is independently kept with probability 1-r, otherwise replaced
/// by a uniform draw over all c classes -- the draw may land on the true
/// class, so the expected corrupted fraction is r(c-1)/c. Features and
/// true_labels are untouched. Single pass over the original labels.
Dataset inject_symmetric(const Dataset& ds, double rate, std::uint64_t seed);

/// Circular mode flips each label to (label+1) mod c with probability r;
/// pairs mode flips each listed source class to its target with probability r
/// and leaves unlisted classes alone. Single pass over the original labels:
/// a label flipped by this call is never flipped again within the same call,
/// so a bidirectional pair map cannot bounce a label back.
Dataset inject_asymmetric(const Dataset& ds, const NoiseSpec& spec, std::uint64_t seed);

Dataset inject_noise(const Dataset& ds, const NoiseSpec& spec, std::uint64_t seed);

/// CSV with header f0,...,f{d-1},noisy_label[,true_label]; features printed
/// with 17 significant digits so they round-trip bit-exactly.
void save_dataset(const Dataset& ds, const std::string& path);

/// Loads the CSV written by save_dataset. With expected_classes == 0 the
/// class count is inferred as max(label)+1 (at least 2); otherwise any label
/// >= expected_classes raises ValidationError. Malformed rows raise
/// ParseError naming the line.
Dataset load_dataset(const std::string& path, int expected_classes = 0);

/// Seeded shuffle, then a disjoint (train, test) partition with sizes within
/// +-1 of the requested fractions. Fractions must be positive and sum to 1.
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, double test_fraction,
                                  std::uint64_t seed);

} // namespace pencil
