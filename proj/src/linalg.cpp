#include "ffrep/linalg.hpp"

#include <algorithm>

namespace ffrep::linalg {

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        BaseElem inv = m[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            BaseElem factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = m[i][j] - factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

bool solve(const Mat& A, const Vec& b, Vec& x, const BaseFieldPtr& field) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    Mat aug = A;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    x.assign(cols, BaseElem::zero(field));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return false;  // pivot in the rhs column
        x[pivots[r]] = aug[r][cols];
    }
    return true;
}

Mat nullspace(Mat A, std::size_t cols, const BaseFieldPtr& field) {
    auto pivots = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(cols, BaseElem::zero(field));
        v[j] = BaseElem::one(field);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -A[r][j];
        basis.push_back(std::move(v));
    }
    rref(basis);  // canonicalize
    return basis;
}

}  // namespace ffrep::linalg
