#include "opsr/entropy_weights.hpp"

#include <algorithm>
#include <cmath>

namespace opsr {

NormalizedMatrix column_normalize(const FactorMatrix& matrix) {
    NormalizedMatrix out;
    out.y.resize(matrix.rows.size());
    std::array<double, 3> sums{};
    for (const auto& row : matrix.rows) {
        sums[0] += row.x;
        sums[1] += row.l;
        sums[2] += row.s;
    }
    for (std::size_t j = 0; j < 3; ++j) out.degenerate[j] = !(sums[j] > 0.0);
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        const std::array<double, 3> raw{matrix.rows[i].x, matrix.rows[i].l, matrix.rows[i].s};
        for (std::size_t j = 0; j < 3; ++j)
            out.y[i][j] = out.degenerate[j] ? 0.0 : raw[j] / sums[j];
    }
    return out;
}

double entropy_coefficient(std::size_t m) {
    if (m < 2) throw LotError("entropy coefficient undefined for fewer than 2 samples");
    return 1.0 / std::log(static_cast<double>(m));
}

double column_entropy(std::span<const double> column, double k) {
    double sum = 0.0;
    for (double y : column) {
        if (y > 0.0) sum += y * std::log(y);  // 0 ln 0 := 0
    }
    return std::clamp(-k * sum, 0.0, 1.0);
}

WeightVector weights_from_utilities(const std::array<double, 3>& h, bool* fallback) {
    const double total = h[0] + h[1] + h[2];
    if (fallback != nullptr) *fallback = !(total > 0.0);
    if (!(total > 0.0)) return WeightVector{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return WeightVector{h[0] / total, h[1] / total, h[2] / total};
}

EntropyReport entropy_weights(const FactorMatrix& matrix) {
    const std::size_t m = matrix.rows.size();
    EntropyReport report;
    report.k = entropy_coefficient(m);

    const NormalizedMatrix norm = column_normalize(matrix);
    bool degenerate_column = false;
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<double> column(m);
        for (std::size_t i = 0; i < m; ++i) column[i] = norm.y[i][j];
        report.e[j] = norm.degenerate[j] ? 1.0 : column_entropy(column, report.k);
        report.h[j] = 1.0 - report.e[j];
        degenerate_column = degenerate_column || norm.degenerate[j];
    }

    bool zero_utility = false;
    report.w = weights_from_utilities(report.h, &zero_utility);
    report.fallback = zero_utility || degenerate_column;
    if (report.fallback) report.w = WeightVector{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return report;
}

}  // namespace opsr
