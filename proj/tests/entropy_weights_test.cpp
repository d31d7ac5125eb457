#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "opsr/entropy_weights.hpp"
#include "oracles.hpp"

using namespace opsr;

namespace {

FactorMatrix matrix_from(const std::vector<std::array<double, 3>>& rows) {
    FactorMatrix m;
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.rows.push_back({"s" + std::to_string(i), rows[i][0], rows[i][1], rows[i][2]});
    m.x_max = m.l_max = 1.0;
    return m;
}

std::vector<std::array<double, 3>> random_rows(std::mt19937& rng, std::size_t m) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::array<double, 3>> rows(m);
    for (auto& r : rows)
        for (auto& v : r) v = unit(rng);
    return rows;
}

}  // namespace

TEST_CASE("column_normalize") {
    const FactorMatrix m = matrix_from({{1, 2, 0.5}, {3, 2, 0.5}});
    const NormalizedMatrix n = column_normalize(m);
    CHECK(n.y[0][0] == doctest::Approx(0.25));
    CHECK(n.y[1][0] == doctest::Approx(0.75));
    CHECK(n.y[0][1] == doctest::Approx(0.5));
    CHECK(n.y[0][2] == doctest::Approx(0.5));
    for (int j = 0; j < 3; ++j) {
        CHECK_FALSE(n.degenerate[j]);
        CHECK(n.y[0][j] + n.y[1][j] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("column_normalize flags a zero column") {
    const NormalizedMatrix n = column_normalize(matrix_from({{0, 1, 1}, {0, 1, 1}}));
    CHECK(n.degenerate[0]);
    CHECK_FALSE(n.degenerate[1]);
}

TEST_CASE("entropy_coefficient") {
    CHECK(entropy_coefficient(2) == doctest::Approx(1.4426950408889634).epsilon(1e-12));
    CHECK(entropy_coefficient(8) == doctest::Approx(0.4808983469629878).epsilon(1e-12));
    CHECK_THROWS_AS(static_cast<void>(entropy_coefficient(1)), LotError);
    CHECK_THROWS_AS(static_cast<void>(entropy_coefficient(0)), LotError);
}

TEST_CASE("column_entropy: uniform is 1, one-hot is 0") {
    for (std::size_t m : {2, 4, 8, 16, 64}) {
        const double k = entropy_coefficient(m);
        std::vector<double> uniform(m, 1.0 / static_cast<double>(m));
        CHECK(column_entropy(uniform, k) == doctest::Approx(1.0).epsilon(1e-12));
        std::vector<double> one_hot(m, 0.0);
        one_hot[0] = 1.0;
        CHECK(column_entropy(one_hot, k) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("column_entropy: direct formula value") {
    const std::vector<double> col{0.25, 0.75};
    // -(0.25 ln 0.25 + 0.75 ln 0.75) / ln 2
    CHECK(column_entropy(col, entropy_coefficient(2)) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("entropy_weights reproduces the published weights from h") {
    bool fallback = true;
    const WeightVector w = weights_from_utilities({0.025, 0.094, 0.028}, &fallback);
    CHECK_FALSE(fallback);
    CHECK(std::abs(w.w1 - 0.17) <= 0.005);
    CHECK(std::abs(w.w2 - 0.64) <= 0.005);
    CHECK(std::abs(w.w3 - 0.19) <= 0.005);
    CHECK(w.w1 + w.w2 + w.w3 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entropy_weights: all-uniform columns fall back to equal weights") {
    const EntropyReport r = entropy_weights(matrix_from({{0.5, 0.2, 1}, {0.5, 0.2, 1}}));
    CHECK(r.fallback);
    CHECK(r.w.w1 == doctest::Approx(1.0 / 3.0));
    CHECK(r.w.w2 == doctest::Approx(1.0 / 3.0));
    CHECK(r.w.w3 == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("entropy_weights rejects fewer than two rows") {
    CHECK_THROWS_AS(static_cast<void>(entropy_weights(matrix_from({{1, 1, 1}}))), LotError);
}

TEST_CASE("entropy_weights matches the brute-force oracle on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rows = random_rows(rng, 8);
        const EntropyReport r = entropy_weights(matrix_from(rows));
        const test::OracleWeights o = test::oracle_entropy(rows);
        for (int j = 0; j < 3; ++j) {
            CHECK(r.e[j] == doctest::Approx(o.e[j]).epsilon(1e-12));
            CHECK(r.h[j] == doctest::Approx(1.0 - r.e[j]).epsilon(1e-12));
            CHECK(r.e[j] >= 0.0);
            CHECK(r.e[j] <= 1.0);
        }
        CHECK(r.w.w1 == doctest::Approx(o.w[0]).epsilon(1e-12));
        CHECK(r.w.w2 == doctest::Approx(o.w[1]).epsilon(1e-12));
        CHECK(r.w.w3 == doctest::Approx(o.w[2]).epsilon(1e-12));
        CHECK(r.w.w1 + r.w.w2 + r.w.w3 == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r.w.w1 >= 0.0);
        CHECK(r.w.w2 >= 0.0);
        CHECK(r.w.w3 >= 0.0);
    }
}

TEST_CASE("entropy_weights is invariant under row permutation") {
    std::mt19937 rng(31);
    auto rows = random_rows(rng, 10);
    const EntropyReport before = entropy_weights(matrix_from(rows));
    std::shuffle(rows.begin(), rows.end(), rng);
    const EntropyReport after = entropy_weights(matrix_from(rows));
    for (int j = 0; j < 3; ++j) CHECK(after.e[j] == doctest::Approx(before.e[j]).epsilon(1e-12));
    CHECK(after.w.w1 == doctest::Approx(before.w.w1).epsilon(1e-12));
}

TEST_CASE("proportion normalization is scale-invariant per column") {
    std::mt19937 rng(47);
    auto rows = random_rows(rng, 8);
    const EntropyReport before = entropy_weights(matrix_from(rows));
    for (auto& r : rows) r[1] *= 0.37;  // rescale the L column
    const EntropyReport after = entropy_weights(matrix_from(rows));
    for (int j = 0; j < 3; ++j) CHECK(after.e[j] == doctest::Approx(before.e[j]).epsilon(1e-12));
    CHECK(after.w.w1 == doctest::Approx(before.w.w1).epsilon(1e-12));
    CHECK(after.w.w2 == doctest::Approx(before.w.w2).epsilon(1e-12));
    CHECK(after.w.w3 == doctest::Approx(before.w.w3).epsilon(1e-12));
}

TEST_CASE("row duplication: entropy recomputation matches the direct formula") {
    std::mt19937 rng(53);
    auto rows = random_rows(rng, 5);
    auto doubled = rows;
    doubled.insert(doubled.end(), rows.begin(), rows.end());
    const EntropyReport r = entropy_weights(matrix_from(doubled));
    const test::OracleWeights o = test::oracle_entropy(doubled);
    for (int j = 0; j < 3; ++j) CHECK(r.e[j] == doctest::Approx(o.e[j]).epsilon(1e-12));
}
