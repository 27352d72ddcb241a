#pragma once

#include "orbhodge/exactla.hpp"

#include <cstddef>

namespace orbhodge {

/// A linear subspace of Q(i)^n, stored by a basis in reduced column echelon
/// form. The canonical basis makes output deterministic; equality is still
/// decided by mutual containment.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of Q(i)^ambient_dim.
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    /// Column span of an arbitrary generating matrix.
    static Subspace span(const QiMatrix &generators);
    /// Span of the listed standard basis vectors.
    static Subspace coordinate(std::size_t ambient_dim, std::size_t first, std::size_t count);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.cols(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim_; }

    /// Columns form a basis in reduced column echelon form.
    const QiMatrix &basis() const { return basis_; }

    /// True when every column of `vectors` lies in this subspace.
    bool contains_vectors(const QiMatrix &vectors) const;

private:
    std::size_t ambient_dim_ = 0;
    QiMatrix basis_;
};

/// Null space of m, as a subspace of Q(i)^cols.
Subspace kernel(const QiMatrix &m);
/// Column space of m, as a subspace of Q(i)^rows.
Subspace image(const QiMatrix &m);

Subspace intersect(const Subspace &a, const Subspace &b);
Subspace sum(const Subspace &a, const Subspace &b);
/// Coordinatewise complex conjugate.
Subspace conjugate(const Subspace &s);
/// a contains b.
bool contains(const Subspace &a, const Subspace &b);
bool operator==(const Subspace &a, const Subspace &b);

/// m(S).
Subspace apply(const QiMatrix &m, const Subspace &s);
/// {v : m v in target}.
Subspace preimage(const QiMatrix &m, const Subspace &target);

bool is_conjugation_stable(const Subspace &s);

/// A basis with rational entries of a conjugation-stable subspace. Throws
/// std::invalid_argument otherwise.
QiMatrix real_basis(const Subspace &s);

/// Complement of `sub` inside `super`, spanned by columns drawn from
/// `super_basis` (first-come greedy choice). Real when both inputs are.
QiMatrix complement_basis(const QiMatrix &super_basis, const Subspace &sub);

/// Coordinates of the columns of `vectors` in the given basis (columns
/// independent). Throws DimensionError when some column lies outside.
QiMatrix coordinates_in(const QiMatrix &basis, const QiMatrix &vectors);

/// Sum of pieces is direct when the dimensions add up.
bool is_direct_sum(const std::vector<Subspace> &pieces);

} // namespace orbhodge
