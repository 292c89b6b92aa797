#include "doctest.h"

#include "pencil/core_math.hpp"

#include <cmath>
#include <numeric>

using namespace pencil;

TEST_CASE("softmax of zeros is uniform") {
    Vector v(10, 0.0);
    ProbVector p = softmax(v);
    for (double x : p) CHECK(x == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("softmax peak matches direct evaluation of exp(10)/(exp(10)+9)") {
    Vector v(10, 0.0);
    v[1] = 10.0;
    ProbVector p = softmax(v);
    const double peak = std::exp(10.0) / (std::exp(10.0) + 9.0);
    const double rest = 1.0 / (std::exp(10.0) + 9.0);
    CHECK(p[1] == doctest::Approx(peak).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.99959156751739184).epsilon(1e-12));
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j != 1) CHECK(p[j] == doctest::Approx(rest).epsilon(1e-14));
    }
    CHECK(p[0] == doctest::Approx(4.5381386956461724e-05).epsilon(1e-12));
}

TEST_CASE("softmax is invariant under a constant shift, bit for bit") {
    Vector v = {0.0, 10.0, -3.0, 2.5};
    Vector shifted = v;
    for (double& x : shifted) x += 100.0;
    ProbVector a = softmax(v);
    ProbVector b = softmax(shifted);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == b[j]);
}

TEST_CASE("softmax rejects non-finite input") {
    Vector v = {0.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(softmax(v), std::invalid_argument);
    Vector w = {std::nan(""), 1.0};
    CHECK_THROWS_AS(softmax(w), std::invalid_argument);
    CHECK_THROWS_AS(softmax(Vector{}), std::invalid_argument);
}

TEST_CASE("softmax sums to one for 1e4 random inputs in [-50,50]") {
    Rng rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = 1 + rng.below(20);
        Vector v(n);
        for (double& x : v) x = rng.uniform(-50.0, 50.0);
        ProbVector p = softmax(v);
        CHECK(is_prob_vector(p));
        double sum = std::accumulate(p.begin(), p.end(), 0.0);
        CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
}

TEST_CASE("softmax is permutation-equivariant and preserves the argmax") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.below(10);
        Vector v(n);
        for (double& x : v) x = rng.uniform(-30.0, 30.0);

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);

        Vector pv(n);
        for (std::size_t j = 0; j < n; ++j) pv[j] = v[perm[j]];

        ProbVector sp = softmax(pv);
        ProbVector s = softmax(v);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(sp[j] == doctest::Approx(s[perm[j]]).epsilon(1e-12));

        CHECK(argmax_tiebreak(softmax(v)) == argmax_tiebreak(v));
    }
}

TEST_CASE("log_clamped") {
    CHECK(log_clamped(1.0) == 0.0);
    CHECK(log_clamped(0.0, 1e-12) == doctest::Approx(-27.631021115928548).epsilon(1e-12));
    CHECK(log_clamped(0.0, 1e-12) == std::log(1e-12));
    CHECK(log_clamped(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(log_clamped(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(log_clamped(0.5, -1e-3), std::invalid_argument);
}

TEST_CASE("argmax_tiebreak picks the smallest winning index") {
    CHECK(argmax_tiebreak(Vector{0.2, 0.5, 0.3}) == 1);
    CHECK(argmax_tiebreak(Vector{0.5, 0.5}) == 0);
    CHECK(argmax_tiebreak(Vector{-1.0, -3.0, -1.0}) == 0);
    CHECK(argmax_tiebreak(Vector{4.0}) == 0);
    CHECK_THROWS_AS(argmax_tiebreak(Vector{}), std::invalid_argument);
}

TEST_CASE("rng streams are reproducible and seed-sensitive") {
    Rng a(123456789ULL);
    Rng b(123456789ULL);
    bool identical = true;
    for (int i = 0; i < 1000; ++i) {
        if (a.next_u64() != b.next_u64()) identical = false;
    }
    CHECK(identical);

    Rng c(123456789ULL);
    Rng d(123456790ULL);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        if (c.next_u64() != d.next_u64()) differs = true;
    }
    CHECK(differs);

    Rng e(11, 0);
    Rng f(11, 1);
    bool stream_differs = false;
    for (int i = 0; i < 1000; ++i) {
        if (e.next_u64() != f.next_u64()) stream_differs = true;
    }
    CHECK(stream_differs);
}

TEST_CASE("rng uniform mean over 1e6 draws is 0.5 within 0.002") {
    Rng rng(2024);
    double sum = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) <= 0.002);
}

TEST_CASE("rng below is within range and roughly uniform") {
    Rng rng(5);
    std::vector<int> counts(10, 0);
    for (int i = 0; i < 100000; ++i) counts[rng.below(10)]++;
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
}

TEST_CASE("rng normal has sane first two moments") {
    Rng rng(99);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = rng.normal();
        sum += x;
        sq += x * x;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sq / n - 1.0) < 0.02);
}
