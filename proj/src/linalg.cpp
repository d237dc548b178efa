#include "ptg/linalg.hpp"

#include <algorithm>

#include "ptg/errors.hpp"

namespace ptg {

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw usage_error("DimensionMismatch", "dot of vectors with different lengths");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw usage_error("DimensionMismatch", "adding vectors with different lengths");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw usage_error("DimensionMismatch", "subtracting vectors with different lengths");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Rat& s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec r(n);
    r[i] = 1;
    return r;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw usage_error("DimensionMismatch", "ragged rows in matrix construction");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m.at(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        const Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m.at(i, c)) == 0) continue;
            const Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref(copy).size();
}

std::size_t rank_of(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_rows(vectors));
}

std::size_t affine_rank(const std::vector<Vec>& points) {
    if (points.size() <= 1) return 0;
    std::vector<Vec> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    return rank_of(diffs);
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Matrix red = m;
    const std::vector<std::size_t> pivots = rref(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols());
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size())
        throw usage_error("DimensionMismatch", "solve_linear: rhs length != row count");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t c : pivots) {
        if (c == a.cols()) return {SolveKind::Inconsistent, {}, {}};
    }

    Vec particular(a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        particular[pivots[k]] = aug.at(k, a.cols());
        is_pivot[pivots[k]] = true;
    }
    if (pivots.size() == a.cols()) return {SolveKind::Unique, std::move(particular), {}};

    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(a.cols());
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -aug.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return {SolveKind::Space, std::move(particular), std::move(basis)};
}

int det_sign(Matrix m) {
    if (m.rows() != m.cols()) throw usage_error("DimensionMismatch", "det of non-square matrix");
    int s = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m.at(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            s = -s;
        }
        if (sgn(m.at(c, c)) < 0) s = -s;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m.at(i, c)) == 0) continue;
            const Rat f = m.at(i, c) / m.at(c, c);
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return s;
}

int orientation(const std::vector<Vec>& points) {
    if (points.empty()) throw usage_error("DimensionMismatch", "orientation of empty point set");
    const std::size_t d = points[0].size();
    if (points.size() != d + 1)
        throw usage_error("DimensionMismatch", "orientation needs exactly d+1 points in R^d");
    Matrix m(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        if (points[i].size() != d)
            throw usage_error("DimensionMismatch", "orientation: inconsistent point dimension");
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = points[i][j];
        m.at(i, d) = 1;
    }
    return det_sign(std::move(m));
}

}  // namespace ptg
