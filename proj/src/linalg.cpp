#include "singpack/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace singpack {

std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) { p = i; break; }
        }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int matrix_rank(RationalMatrix m) {
    return static_cast<int>(rref(m).size());
}

std::vector<RationalVec> kernel_basis(RationalMatrix m) {
    if (m.empty()) return {};
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RationalVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVec v(cols, Rational(0));
        v[f] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalVec mat_vec(const RationalMatrix& m, const RationalVec& x) {
    RationalVec out;
    out.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != x.size())
            throw std::invalid_argument("mat_vec: dimension mismatch");
        Rational s(0);
        for (size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace singpack
