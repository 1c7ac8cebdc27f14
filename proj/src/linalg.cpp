#include "qgalois/linalg.hpp"

namespace qgalois {

std::vector<int> rref(CMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Cyclotomic inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Cyclotomic f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(CMat m) { return static_cast<int>(rref(m).size()); }

std::optional<CVec> solve(CMat a, CVec b) {
    if (a.empty()) return CVec{};
    const size_t rows = a.size(), cols = a[0].size();
    const int order = b.empty() ? a[0][0].order() : b[0].order();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    CVec x(cols, Cyclotomic::zero(order));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

std::vector<CVec> nullspace(CMat a, int cols, int order) {
    std::vector<CVec> basis;
    if (cols == 0) return basis;
    if (a.empty()) a.push_back(CVec(cols, Cyclotomic::zero(order)));
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        CVec v(cols, Cyclotomic::zero(order));
        v[free_col] = Cyclotomic::one(order);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qgalois
