#include "orbhodge/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace orbhodge {

std::string to_string(const Rational &q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::optional<long> as_integer(const Rational &q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

GaussRational &GaussRational::operator+=(const GaussRational &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational &GaussRational::operator-=(const GaussRational &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational &GaussRational::operator*=(const GaussRational &o) {
    if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational &GaussRational::operator/=(const GaussRational &o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussRational i_power(long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
    }
}

std::string to_string(const GaussRational &z) {
    if (z.is_real()) return to_string(z.re());
    std::string im;
    if (z.im() == 1) im = "i";
    else if (z.im() == -1) im = "-i";
    else im = to_string(z.im()) + "i";
    if (sgn(z.re()) == 0) return im;
    return to_string(z.re()) + (sgn(z.im()) > 0 ? "+" : "") + im;
}

GaussRational parse_gauss(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty number");
    if (s.back() != 'i') return {parse_rational(s), Rational(0)};
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_text = split == std::string::npos ? s : s.substr(split);
    Rational im;
    if (im_text.empty() || im_text == "+") im = 1;
    else if (im_text == "-") im = -1;
    else im = parse_rational(im_text);
    Rational re = re_text.empty() ? Rational(0) : parse_rational(re_text);
    return {re, im};
}

QiMatrix::QiMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

QiMatrix QiMatrix::identity(std::size_t n) {
    QiMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

QiMatrix QiMatrix::vector(std::initializer_list<GaussRational> entries) {
    QiMatrix m(entries.size(), 1);
    std::size_t r = 0;
    for (const auto &e : entries) m(r++, 0) = e;
    return m;
}

QiMatrix QiMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

QiMatrix QiMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    QiMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void QiMatrix::set_block(std::size_t r0, std::size_t c0, const QiMatrix &b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool QiMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const GaussRational &z) { return z.is_zero(); });
}

bool QiMatrix::is_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const GaussRational &z) { return z.is_real(); });
}

QiMatrix &QiMatrix::operator+=(const QiMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

QiMatrix &QiMatrix::operator-=(const QiMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

QiMatrix &QiMatrix::operator*=(const GaussRational &s) {
    for (auto &z : data_) z *= s;
    return *this;
}

QiMatrix operator*(const QiMatrix &a, const QiMatrix &b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    QiMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GaussRational &x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t col = 0; col < b.cols(); ++col)
                if (!b(k, col).is_zero()) c(r, col) += x * b(k, col);
        }
    return c;
}

QiMatrix transpose(const QiMatrix &m) {
    QiMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

QiMatrix conjugate(const QiMatrix &m) {
    QiMatrix t(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(r, c) = m(r, c).conj();
    return t;
}

QiMatrix adjoint(const QiMatrix &m) { return conjugate(transpose(m)); }

QiMatrix power(const QiMatrix &m, unsigned k) {
    if (!m.is_square()) throw DimensionError("power of a non-square matrix");
    QiMatrix result = QiMatrix::identity(m.rows());
    for (unsigned j = 0; j < k; ++j) result = result * m;
    return result;
}

QiMatrix hstack(const QiMatrix &a, const QiMatrix &b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    QiMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

QiMatrix vstack(const QiMatrix &a, const QiMatrix &b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    QiMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

QiMatrix direct_sum(const QiMatrix &a, const QiMatrix &b) {
    QiMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

QiMatrix select_columns(const QiMatrix &m, const std::vector<std::size_t> &cols) {
    QiMatrix s(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < m.rows(); ++r) s(r, j) = m(r, cols[j]);
    return s;
}

QiMatrix exp_nilpotent(const QiMatrix &m) {
    if (!m.is_square()) throw DimensionError("exp of a non-square matrix");
    QiMatrix result = QiMatrix::identity(m.rows());
    QiMatrix term = result;
    for (std::size_t k = 1; k <= m.rows() + 1; ++k) {
        term = term * m;
        if (term.is_zero()) return result;
        term *= GaussRational(Rational(1, static_cast<long>(k)));
        result += term;
    }
    throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

EchelonForm row_echelon(QiMatrix m) {
    EchelonForm out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        GaussRational inv = GaussRational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussRational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const QiMatrix &m) { return row_echelon(m).pivots.size(); }

std::optional<QiMatrix> solve(const QiMatrix &a, const QiMatrix &b) {
    if (a.rows() != b.rows()) throw DimensionError("solve: row mismatch");
    auto ef = row_echelon(hstack(a, b));
    QiMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        std::size_t p = ef.pivots[r];
        if (p >= a.cols()) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = ef.reduced(r, a.cols() + c);
    }
    return x;
}

std::optional<QiMatrix> inverse(const QiMatrix &m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, QiMatrix::identity(m.rows()));
}

GaussRational determinant(const QiMatrix &input) {
    if (!input.is_square()) throw DimensionError("determinant of a non-square matrix");
    QiMatrix m = input;
    const std::size_t n = m.rows();
    GaussRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) return GaussRational(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            GaussRational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

bool is_hermitian(const QiMatrix &h) { return h.is_square() && adjoint(h) == h; }

std::optional<std::size_t> first_nonpositive_leading_minor(const QiMatrix &h) {
    if (!is_hermitian(h)) throw NotHermitianError("matrix is not Hermitian");
    // Elimination without pivoting: the k-th pivot is minor_k / minor_{k-1},
    // so all minors are positive iff all pivots are.
    QiMatrix m = h;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const GaussRational &d = m(k, k);
        if (sgn(d.re()) <= 0) return k + 1;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m(r, k).is_zero()) continue;
            GaussRational f = m(r, k) / d;
            for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return std::nullopt;
}

bool is_positive_definite_hermitian(const QiMatrix &h) { return !first_nonpositive_leading_minor(h); }

} // namespace orbhodge
