#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gkm/error.hpp"

namespace gkm {

using Rat = mpq_class;

/// Parses "p", "-p" or "p/q"; throws ParseError on malformed input or a zero
/// denominator.
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

/// Dense matrix over the exact rationals. Everything the geometric checks
/// need stays exact: kernels, ranks, characteristic polynomials, subspace
/// arithmetic.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    static QMat identity(size_t n);
    static QMat from_rows(const std::vector<std::vector<Rat>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    QMat operator*(const QMat& other) const;
    QMat operator+(const QMat& other) const;
    QMat operator-(const QMat& other) const;
    QMat scaled(const Rat& k) const;
    QMat transpose() const;
    Rat trace() const;
    bool is_zero() const;
    bool operator==(const QMat& other) const = default;

    /// [this | other] side by side; row counts must match.
    QMat hcat(const QMat& other) const;
    /// [this; other] stacked; column counts must match.
    QMat vcat(const QMat& other) const;
    QMat column(size_t c) const;

    size_t rank() const;
    /// Columns forming a basis of the column space.
    QMat column_space_basis() const;
    /// Columns forming a basis of the nullspace.
    QMat kernel_basis() const;
    QMat inverse() const;

    /// Coefficients c of det(x I - this), c[k] the coefficient of x^k,
    /// c[n] = 1.
    std::vector<Rat> charpoly() const;

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// span(cols of A) superset of span(cols of M)?
bool subspace_contains(const QMat& a, const QMat& m);
/// Basis of span(A) intersect span(B).
QMat subspace_intersection(const QMat& a, const QMat& b);
/// Full-rank matrix Q with Q B = 0 whose rows span the functionals vanishing
/// on span(B); Q has (rows(B) - rank(B)) rows.
QMat left_annihilator(const QMat& b);

// Polynomials over Q, coefficients indexed by degree.
std::vector<Rat> poly_derivative(const std::vector<Rat>& p);
std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b);
bool poly_squarefree(const std::vector<Rat>& p);
Rat poly_eval(const std::vector<Rat>& p, const Rat& x);

/// All rational roots with multiplicities plus the degree of the rootless
/// remainder (0 means the polynomial splits over Q).
struct RationalRoots {
    std::vector<std::pair<Rat, size_t>> roots;
    size_t remaining_degree = 0;
};
RationalRoots rational_roots(std::vector<Rat> p);

} // namespace gkm
