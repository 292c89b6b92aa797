#include "pencil/dataset.hpp"

#include "pencil/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pencil {

namespace {

double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
    }
    return s;
}

void validate_labels(const std::vector<int>& labels, int c, const char* what) {
    for (int y : labels) {
        if (y < 0 || y >= c)
            throw ValidationError(std::string(what) + ": label " + std::to_string(y) +
                                  " out of range [0, " + std::to_string(c) + ")");
    }
}

} // namespace

Dataset make_blobs(std::size_t n, int c, std::size_t d, double separation, double sigma,
                   std::uint64_t seed) {
    if (c < 2) throw std::invalid_argument("make_blobs: need at least 2 classes");
    if (n < static_cast<std::size_t>(c)) throw std::invalid_argument("make_blobs: n must be >= c");
    if (d < 1) throw std::invalid_argument("make_blobs: d must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("make_blobs: sigma must be > 0");
    if (!(separation >= 0.0)) throw std::invalid_argument("make_blobs: separation must be >= 0");

    Rng rng(seed);

    // Rejection-sample centers in a box sized so that c spheres of radius
    // separation/2 fit comfortably.
    const double per_axis = std::ceil(std::pow(static_cast<double>(c), 1.0 / static_cast<double>(d)));
    const double side = std::max(separation, 1.0) * (per_axis + 1.0) * 1.5;
    const double min_d2 = separation * separation;

    Matrix centers(static_cast<std::size_t>(c), d);
    const int max_attempts = 1000 * c;
    int placed = 0;
    for (int attempt = 0; placed < c; ++attempt) {
        if (attempt >= max_attempts)
            throw std::runtime_error("make_blobs: failed to place cluster centers at the requested "
                                     "separation after " + std::to_string(max_attempts) + " attempts");
        Vector candidate(d);
        for (double& x : candidate) x = rng.uniform(0.0, side);
        bool ok = true;
        for (int k = 0; k < placed && ok; ++k) {
            if (dist2(centers.row(k), candidate) < min_d2) ok = false;
        }
        if (ok) {
            std::copy(candidate.begin(), candidate.end(), centers.row(placed).begin());
            ++placed;
        }
    }

    Dataset ds;
    ds.class_count = c;
    ds.features = Matrix(n, d);
    ds.noisy_labels.resize(n);
    ds.true_labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int label = static_cast<int>(i % static_cast<std::size_t>(c));
        ds.noisy_labels[i] = label;
        ds.true_labels[i] = label;
        auto row = ds.features.row(i);
        auto center = centers.row(label);
        for (std::size_t k = 0; k < d; ++k) row[k] = center[k] + sigma * rng.normal();
    }
    return ds;
}

Dataset inject_symmetric(const Dataset& ds, double rate, std::uint64_t seed) {
    if (!(rate >= 0.0 && rate <= 1.0))
        throw std::invalid_argument("inject_symmetric: rate must be in [0, 1]");
    if (!ds.has_true_labels())
        throw std::invalid_argument("inject_symmetric: dataset has no true labels");

    Dataset out = ds;
    Rng rng(seed);
    const auto c = static_cast<std::uint64_t>(ds.class_count);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (rng.uniform() < rate)
            out.noisy_labels[i] = static_cast<int>(rng.below(c));
    }
    return out;
}

Dataset inject_asymmetric(const Dataset& ds, const NoiseSpec& spec, std::uint64_t seed) {
    if (spec.kind == NoiseKind::symmetric)
        throw std::invalid_argument("inject_asymmetric: spec.kind must be asymmetric");
    if (!(spec.rate >= 0.0 && spec.rate <= 1.0))
        throw std::invalid_argument("inject_asymmetric: rate must be in [0, 1]");
    if (spec.kind == NoiseKind::asymmetric_pairs && spec.pair_map.empty())
        throw std::invalid_argument("inject_asymmetric: pairs mode requires a pair map");
    for (auto [src, dst] : spec.pair_map) {
        if (src < 0 || src >= ds.class_count || dst < 0 || dst >= ds.class_count)
            throw std::invalid_argument("inject_asymmetric: pair map references an invalid class");
    }

    Dataset out = ds;
    Rng rng(seed);
    const int c = ds.class_count;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int original = ds.noisy_labels[i];
        if (spec.kind == NoiseKind::asymmetric_circular) {
            if (rng.uniform() < spec.rate) out.noisy_labels[i] = (original + 1) % c;
        } else {
            auto it = std::find_if(spec.pair_map.begin(), spec.pair_map.end(),
                                   [&](const auto& p) { return p.first == original; });
            if (it != spec.pair_map.end() && rng.uniform() < spec.rate)
                out.noisy_labels[i] = it->second;
        }
    }
    return out;
}

Dataset inject_noise(const Dataset& ds, const NoiseSpec& spec, std::uint64_t seed) {
    if (spec.kind == NoiseKind::symmetric) return inject_symmetric(ds, spec.rate, seed);
    return inject_asymmetric(ds, spec, seed);
}

void save_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_dataset: cannot open " + path + " for writing");

    const std::size_t d = ds.dim();
    for (std::size_t k = 0; k < d; ++k) out << 'f' << k << ',';
    out << "noisy_label";
    if (ds.has_true_labels()) out << ",true_label";
    out << '\n';

    char buf[64];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        auto row = ds.features.row(i);
        for (std::size_t k = 0; k < d; ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", row[k]);
            out << buf << ',';
        }
        out << ds.noisy_labels[i];
        if (ds.has_true_labels()) out << ',' << ds.true_labels[i];
        out << '\n';
    }
    if (!out) throw std::runtime_error("save_dataset: write failed for " + path);
}

Dataset load_dataset(const std::string& path, int expected_classes) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_dataset: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ":1: empty file");

    // Header: f0,...,f{d-1},noisy_label[,true_label]
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) header.push_back(cell);
    }
    std::size_t d = 0;
    while (d < header.size() && header[d] == "f" + std::to_string(d)) ++d;
    const bool has_true = d + 2 == header.size() && header[d + 1] == "true_label";
    if (d == 0 || header[d] != "noisy_label" || (d + 1 != header.size() && !has_true))
        throw ParseError(path + ":1: malformed header '" + line + "'");

    Dataset ds;
    std::vector<double> features;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != header.size())
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(cells.size()));
        try {
            std::size_t pos = 0;
            for (std::size_t k = 0; k < d; ++k) {
                features.push_back(std::stod(cells[k], &pos));
                if (pos != cells[k].size()) throw std::invalid_argument(cells[k]);
            }
            ds.noisy_labels.push_back(std::stoi(cells[d], &pos));
            if (pos != cells[d].size()) throw std::invalid_argument(cells[d]);
            if (has_true) {
                ds.true_labels.push_back(std::stoi(cells[d + 1], &pos));
                if (pos != cells[d + 1].size()) throw std::invalid_argument(cells[d + 1]);
            }
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": malformed value in '" +
                             line + "'");
        }
    }
    if (ds.noisy_labels.empty()) throw ParseError(path + ": no data rows");

    const std::size_t n = ds.noisy_labels.size();
    ds.features = Matrix(n, d);
    std::copy(features.begin(), features.end(), ds.features.data().begin());

    if (expected_classes > 0) {
        ds.class_count = expected_classes;
    } else {
        int max_label = 0;
        for (int y : ds.noisy_labels) max_label = std::max(max_label, y);
        for (int y : ds.true_labels) max_label = std::max(max_label, y);
        ds.class_count = std::max(max_label + 1, 2);
    }
    validate_labels(ds.noisy_labels, ds.class_count, "load_dataset(noisy)");
    validate_labels(ds.true_labels, ds.class_count, "load_dataset(true)");
    for (double x : ds.features.data())
        if (!std::isfinite(x)) throw ValidationError("load_dataset: non-finite feature value");
    return ds;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, double test_fraction,
                                  std::uint64_t seed) {
    if (!(train_fraction > 0.0) || !(test_fraction > 0.0) ||
        std::abs(train_fraction + test_fraction - 1.0) > 1e-9)
        throw std::invalid_argument("split: fractions must be positive and sum to 1");

    const std::size_t n = ds.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    const auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));

    auto take = [&](std::size_t begin, std::size_t end) {
        Dataset part;
        part.class_count = ds.class_count;
        part.features = Matrix(end - begin, ds.dim());
        part.noisy_labels.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t src = order[i];
            auto dst_row = part.features.row(i - begin);
            auto src_row = ds.features.row(src);
            std::copy(src_row.begin(), src_row.end(), dst_row.begin());
            part.noisy_labels.push_back(ds.noisy_labels[src]);
            if (ds.has_true_labels()) part.true_labels.push_back(ds.true_labels[src]);
        }
        return part;
    };
    return {take(0, n_train), take(n_train, n)};
}

} // namespace pencil
