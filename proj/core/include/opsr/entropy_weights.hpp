#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "opsr/factors.hpp"

namespace opsr {

struct WeightVector {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;
};

struct NormalizedMatrix {
    std::vector<std::array<double, 3>> y;  // rows; each column sums to 1
    std::array<bool, 3> degenerate{};      // column had zero sum
};

struct EntropyReport {
    double k = 0.0;
    std::array<double, 3> e{};  // information entropy per factor
    std::array<double, 3> h{};  // information utility, h = 1 - e
    WeightVector w;
    bool fallback = false;  // equal weights used (degenerate input)
};

/// Column-wise proportion normalization: y_ij = x_ij / sum_i x_ij.
/// A zero-sum column is flagged degenerate and left as zeros.
NormalizedMatrix column_normalize(const FactorMatrix& matrix);

/// k = 1 / ln(m). Throws LotError for m < 2.
double entropy_coefficient(std::size_t m);

/// e_j = -k * sum(y ln y) with 0 ln 0 := 0, clamped to [0,1].
double column_entropy(std::span<const double> column, double k);

/// w_j = h_j / sum(h). Falls back to equal weights when sum(h) is zero.
WeightVector weights_from_utilities(const std::array<double, 3>& h, bool* fallback = nullptr);

/// Full entropy weighting chain over a fuzzy-normalized factor matrix.
/// Requires at least 2 rows; all-uniform or degenerate-column inputs fall
/// back to equal weights with the report flagged.
EntropyReport entropy_weights(const FactorMatrix& matrix);

}  // namespace opsr
