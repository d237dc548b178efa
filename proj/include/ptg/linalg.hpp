#pragma once

#include <cstddef>
#include <vector>

#include "ptg/rational.hpp"

namespace ptg {

// ---- vector helpers -------------------------------------------------------

Rat dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rat& s);
bool vec_is_zero(const Vec& a);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

// ---- exact dense matrix ---------------------------------------------------

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// In-place reduced row echelon form. Returns the pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(const Matrix& m);

// Rank of the span of a set of vectors.
std::size_t rank_of(const std::vector<Vec>& vectors);

// Affine rank of a point set = dimension of its affine hull. Empty input has
// affine rank -1 by convention; we return 0 for empty/singleton and the
// dimension of the difference span plus nothing otherwise (a full-dimensional
// set in R^d has affine rank d).
std::size_t affine_rank(const std::vector<Vec>& points);

// Basis of the kernel {x : m x = 0}.
std::vector<Vec> kernel_basis(const Matrix& m);

// ---- linear solving -------------------------------------------------------

enum class SolveKind { Unique, Space, Inconsistent };

struct LinearSolution {
    SolveKind kind;
    Vec particular;          // valid unless Inconsistent
    std::vector<Vec> basis;  // homogeneous basis; empty when Unique
};

// Exact Gaussian elimination for A x = b.
LinearSolution solve_linear(const Matrix& a, const Vec& b);

// ---- predicates -----------------------------------------------------------

// Sign of det[(p_0,1); ...; (p_d,1)] for d+1 points in R^d. Zero iff the
// points are affinely dependent.
int orientation(const std::vector<Vec>& points);

// Sign of the determinant of a square matrix.
int det_sign(Matrix m);

}  // namespace ptg
