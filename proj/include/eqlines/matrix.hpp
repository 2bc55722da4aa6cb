#pragma once

#include "eqlines/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace eqlines {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_symmetric() const;
    bool is_zero() const;
    RationalMatrix transpose() const;
    RationalMatrix inverse() const;

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    RationalMatrix& operator*=(const Rational& s);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Exact positive-semidefiniteness test by symmetric Gaussian elimination:
/// a zero pivot forces its whole remaining row to vanish.
bool is_psd_exact(const RationalMatrix& m);

/// Leading principal minors det(M[0..i, 0..i]) for i = 0..n-1.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Exact rank.
std::size_t rank(const RationalMatrix& m);

/// Expresses a family of symmetric matrices on their joint column space:
/// returns a full-column-rank basis B and matrices C_i with M_i = B C_i B^T.
/// PSD-ness of any combination sum w_i M_i is equivalent to PSD-ness of
/// sum w_i C_i.
struct RangeReduction {
    RationalMatrix basis;
    std::vector<RationalMatrix> reduced;
};
RangeReduction reduce_to_range(std::span<const RationalMatrix> mats);

}  // namespace eqlines
