#include "orbhodge/subspace.hpp"

namespace orbhodge {

namespace {

void require_same_ambient(const Subspace &a, const Subspace &b, const char *op) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                             " and " + std::to_string(b.ambient_dim()) + " differ");
}

} // namespace

Subspace Subspace::full(std::size_t ambient_dim) { return span(QiMatrix::identity(ambient_dim)); }

Subspace Subspace::span(const QiMatrix &generators) {
    // Reduced column echelon form of the generators = transpose of the RREF
    // of their transpose.
    auto ef = row_echelon(transpose(generators));
    Subspace s(generators.rows());
    s.basis_ = transpose(ef.reduced.block(0, 0, ef.pivots.size(), ef.reduced.cols()));
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::size_t first, std::size_t count) {
    if (first + count > ambient_dim) throw DimensionError("coordinate block out of range");
    QiMatrix g(ambient_dim, count);
    for (std::size_t k = 0; k < count; ++k) g(first + k, k) = 1;
    return span(g);
}

bool Subspace::contains_vectors(const QiMatrix &vectors) const {
    if (vectors.rows() != ambient_dim_) throw DimensionError("contains: vector length mismatch");
    if (vectors.cols() == 0) return true;
    return rank(hstack(basis_, vectors)) == dim();
}

Subspace kernel(const QiMatrix &m) {
    auto ef = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ef.pivots) is_pivot[p] = true;
    QiMatrix gens(m.cols(), m.cols() - ef.pivots.size());
    std::size_t g = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        gens(free, g) = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) gens(ef.pivots[r], g) = -ef.reduced(r, free);
        ++g;
    }
    return Subspace::span(gens);
}

Subspace image(const QiMatrix &m) { return Subspace::span(m); }

Subspace intersect(const Subspace &a, const Subspace &b) {
    require_same_ambient(a, b, "intersect");
    if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
    // x in ker [A | -B]  =>  A x_a lies in both.
    Subspace k = kernel(hstack(a.basis(), -b.basis()));
    QiMatrix coeffs = k.basis().block(0, 0, a.dim(), k.dim());
    return Subspace::span(a.basis() * coeffs);
}

Subspace sum(const Subspace &a, const Subspace &b) {
    require_same_ambient(a, b, "sum");
    return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace conjugate(const Subspace &s) { return Subspace::span(conjugate(s.basis())); }

bool contains(const Subspace &a, const Subspace &b) {
    require_same_ambient(a, b, "contains");
    return b.dim() <= a.dim() && a.contains_vectors(b.basis());
}

bool operator==(const Subspace &a, const Subspace &b) {
    return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && contains(a, b);
}

Subspace apply(const QiMatrix &m, const Subspace &s) {
    if (m.cols() != s.ambient_dim()) throw DimensionError("apply: shape mismatch");
    return Subspace::span(m * s.basis());
}

Subspace preimage(const QiMatrix &m, const Subspace &target) {
    if (m.rows() != target.ambient_dim()) throw DimensionError("preimage: shape mismatch");
    // m v = T c  <=>  [m | -T] (v, c) = 0.
    Subspace k = kernel(hstack(m, -target.basis()));
    return Subspace::span(k.basis().block(0, 0, m.cols(), k.dim()));
}

bool is_conjugation_stable(const Subspace &s) { return conjugate(s) == s; }

QiMatrix real_basis(const Subspace &s) {
    if (s.basis().is_real()) return s.basis();
    if (!is_conjugation_stable(s)) throw std::invalid_argument("real_basis: subspace is not defined over Q");
    const QiMatrix &b = s.basis();
    QiMatrix parts(b.rows(), 2 * b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t r = 0; r < b.rows(); ++r) {
            parts(r, 2 * c) = GaussRational(b(r, c).re());
            parts(r, 2 * c + 1) = GaussRational(b(r, c).im());
        }
    return Subspace::span(parts).basis();
}

QiMatrix complement_basis(const QiMatrix &super_basis, const Subspace &sub) {
    if (super_basis.rows() != sub.ambient_dim()) throw DimensionError("complement: shape mismatch");
    auto ef = row_echelon(hstack(sub.basis(), super_basis));
    std::vector<std::size_t> chosen;
    for (auto p : ef.pivots)
        if (p >= sub.dim()) chosen.push_back(p - sub.dim());
    return select_columns(super_basis, chosen);
}

QiMatrix coordinates_in(const QiMatrix &basis, const QiMatrix &vectors) {
    auto x = solve(basis, vectors);
    if (!x) throw DimensionError("coordinates_in: vectors outside the span");
    return *x;
}

bool is_direct_sum(const std::vector<Subspace> &pieces) {
    if (pieces.empty()) return true;
    std::size_t total = 0;
    QiMatrix all(pieces.front().ambient_dim(), 0);
    for (const auto &p : pieces) {
        total += p.dim();
        all = hstack(all, p.basis());
    }
    return rank(all) == total;
}

} // namespace orbhodge
