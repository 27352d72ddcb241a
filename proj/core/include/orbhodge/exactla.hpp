#pragma once

// Exact arithmetic over Q and Q(i), dense matrices and elimination.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbhodge {

/// Arbitrary-precision rational. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational &q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Integer-valued test; returns the value when it is one.
std::optional<long> as_integer(const Rational &q);

/// A number re + im*i with rational parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(Rational re) : re_(std::move(re)) {} // NOLINT: implicit from Q
    GaussRational(long re) : re_(re) {}                 // NOLINT
    GaussRational(int re) : re_(re) {}                  // NOLINT
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational &operator+=(const GaussRational &o);
    GaussRational &operator-=(const GaussRational &o);
    GaussRational &operator*=(const GaussRational &o);
    GaussRational &operator/=(const GaussRational &o);

    friend GaussRational operator+(GaussRational a, const GaussRational &b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational &b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational &b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational &b) { return a /= b; }
    friend bool operator==(const GaussRational &a, const GaussRational &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// i^k for any integer k.
GaussRational i_power(long k);

/// Canonical text: "3", "-1/2", "i", "-2i", "1+i", "1/2-3/4i".
std::string to_string(const GaussRational &z);

/// Inverse of to_string; also accepts forms like "2*i", "i/2" is not accepted.
GaussRational parse_gauss(std::string_view text);

/// Dense row-major matrix over Q(i).
class QiMatrix {
public:
    QiMatrix() = default;
    QiMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QiMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows);

    static QiMatrix identity(std::size_t n);
    static QiMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Column vector.
    static QiMatrix vector(std::initializer_list<GaussRational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussRational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussRational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QiMatrix column(std::size_t c) const;
    QiMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const QiMatrix &b);

    bool is_zero() const;
    bool is_real() const;

    QiMatrix &operator+=(const QiMatrix &o);
    QiMatrix &operator-=(const QiMatrix &o);
    QiMatrix &operator*=(const GaussRational &s);

    friend QiMatrix operator+(QiMatrix a, const QiMatrix &b) { return a += b; }
    friend QiMatrix operator-(QiMatrix a, const QiMatrix &b) { return a -= b; }
    friend QiMatrix operator*(QiMatrix a, const GaussRational &s) { return a *= s; }
    friend QiMatrix operator*(const GaussRational &s, QiMatrix a) { return a *= s; }
    friend QiMatrix operator*(const QiMatrix &a, const QiMatrix &b);
    friend QiMatrix operator-(const QiMatrix &a) { return a * GaussRational(-1); }
    friend bool operator==(const QiMatrix &a, const QiMatrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussRational> data_;
};

QiMatrix transpose(const QiMatrix &m);
QiMatrix conjugate(const QiMatrix &m);
/// Conjugate transpose.
QiMatrix adjoint(const QiMatrix &m);
QiMatrix power(const QiMatrix &m, unsigned k);
QiMatrix hstack(const QiMatrix &a, const QiMatrix &b);
QiMatrix vstack(const QiMatrix &a, const QiMatrix &b);
/// Block-diagonal sum.
QiMatrix direct_sum(const QiMatrix &a, const QiMatrix &b);
QiMatrix select_columns(const QiMatrix &m, const std::vector<std::size_t> &cols);

/// Exponential of a nilpotent matrix as a terminating series. Throws if the
/// series does not terminate within dim+1 terms.
QiMatrix exp_nilpotent(const QiMatrix &m);

struct EchelonForm {
    QiMatrix reduced;                 ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

EchelonForm row_echelon(QiMatrix m);

std::size_t rank(const QiMatrix &m);

/// Solves a * x = b. Empty when inconsistent; otherwise one solution.
std::optional<QiMatrix> solve(const QiMatrix &a, const QiMatrix &b);

std::optional<QiMatrix> inverse(const QiMatrix &m);

GaussRational determinant(const QiMatrix &m);

bool is_hermitian(const QiMatrix &h);

/// 1-based index of the first leading principal minor that is not > 0, or
/// nullopt when all are positive. Throws NotHermitianError.
std::optional<std::size_t> first_nonpositive_leading_minor(const QiMatrix &h);

/// Exact positive-definiteness by leading principal minors.
bool is_positive_definite_hermitian(const QiMatrix &h);

} // namespace orbhodge
