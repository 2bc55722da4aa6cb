#include "eqlines/matrix.hpp"

#include <sstream>

namespace eqlines {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RationalMatrix::inverse: not square");
    std::size_t n = rows_;
    RationalMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("RationalMatrix::inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    for (auto& v : a_) v *= s;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

bool is_psd_exact(const RationalMatrix& m) {
    if (!m.is_symmetric()) return false;
    RationalMatrix a = m;
    std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        int s = a(k, k).sign();
        if (s < 0) return false;
        if (s == 0) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a(k, j).is_zero()) return false;
            continue;
        }
        Rational inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rational f = a(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
    std::size_t n = m.rows();
    std::vector<Rational> minors;
    RationalMatrix a = m;
    Rational det = 1;
    bool singular = false;
    for (std::size_t k = 0; k < n; ++k) {
        // Without pivoting, the k-th pivot is minor_k / minor_{k-1}.
        if (singular || a(k, k).is_zero()) {
            // Fall back to a direct determinant for the remaining minors.
            for (std::size_t r = k; r < n; ++r) {
                RationalMatrix sub(r + 1, r + 1);
                for (std::size_t i = 0; i <= r; ++i)
                    for (std::size_t j = 0; j <= r; ++j) sub(i, j) = m(i, j);
                Rational d = 1;
                for (std::size_t c = 0; c <= r; ++c) {
                    std::size_t p = c;
                    while (p <= r && sub(p, c).is_zero()) ++p;
                    if (p > r) {
                        d = 0;
                        break;
                    }
                    if (p != c) {
                        for (std::size_t j = 0; j <= r; ++j) std::swap(sub(p, j), sub(c, j));
                        d = -d;
                    }
                    d *= sub(c, c);
                    Rational inv = sub(c, c).inverse();
                    for (std::size_t i = c + 1; i <= r; ++i) {
                        Rational f = sub(i, c) * inv;
                        for (std::size_t j = c; j <= r; ++j) sub(i, j) -= f * sub(c, j);
                    }
                }
                minors.push_back(d);
            }
            return minors;
        }
        det *= a(k, k);
        minors.push_back(det);
        Rational inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return minors;
}

namespace {

/// Pivot columns of the reduced row echelon form.
std::vector<std::size_t> pivot_columns(RationalMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rational inv = a(row, col).inverse();
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            if (a(i, col).is_zero()) continue;
            Rational f = a(i, col) * inv;
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return pivot_columns(m).size(); }

RangeReduction reduce_to_range(std::span<const RationalMatrix> mats) {
    if (mats.empty()) throw std::invalid_argument("reduce_to_range: empty family");
    std::size_t n = mats[0].rows();
    RationalMatrix stacked(n, n * mats.size());
    for (std::size_t m = 0; m < mats.size(); ++m) {
        if (mats[m].rows() != n || mats[m].cols() != n || !mats[m].is_symmetric())
            throw std::invalid_argument("reduce_to_range: expected symmetric matrices of equal size");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(i, m * n + j) = mats[m](i, j);
    }
    auto pivots = pivot_columns(stacked);
    RangeReduction out;
    if (pivots.empty()) {
        // Every matrix vanishes: PSD-ness is trivial, keep a 0x0 reduction.
        out.basis = RationalMatrix(n, 0);
        out.reduced.assign(mats.size(), RationalMatrix(0, 0));
        return out;
    }
    out.basis = RationalMatrix(n, pivots.size());
    for (std::size_t c = 0; c < pivots.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) out.basis(i, c) = stacked(i, pivots[c]);
    RationalMatrix bt = out.basis.transpose();
    RationalMatrix pinv = (bt * out.basis).inverse() * bt;
    RationalMatrix pinv_t = pinv.transpose();
    for (const auto& m : mats) {
        RationalMatrix c = pinv * m * pinv_t;
        if (out.basis * c * bt != m) throw std::logic_error("reduce_to_range: reconstruction failed");
        out.reduced.push_back(std::move(c));
    }
    return out;
}

}  // namespace eqlines
