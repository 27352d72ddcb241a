#pragma once

// Pure Hodge structures, polarizations and the Lefschetz package on graded
// spaces. The real structure is fixed: V = Q^d inside Q(i)^d with
// coordinatewise conjugation.

#include "orbhodge/filtration.hpp"
#include "orbhodge/report.hpp"
#include "orbhodge/subspace.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbhodge {

/// (p, q)
using Bidegree = std::pair<int, int>;

std::string to_string(const Bidegree &pq);

/// A candidate decomposition V_C = sum of H^{p,q}, p + q = weight. The
/// constructor only enforces shape; validate_hodge_structure decides the
/// axioms.
class HodgeStructureData {
public:
    HodgeStructureData() = default;
    /// Throws std::invalid_argument for a piece with p + q != weight or a
    /// piece living in the wrong ambient space.
    HodgeStructureData(std::size_t ambient_dim, int weight, std::map<Bidegree, Subspace> pieces);

    std::size_t ambient_dim() const { return ambient_dim_; }
    int weight() const { return weight_; }
    const std::map<Bidegree, Subspace> &pieces() const { return pieces_; }
    /// H^{p, weight-p}; the zero subspace when absent.
    Subspace piece(int p) const;
    std::size_t hodge_number(int p, int q) const;

private:
    std::size_t ambient_dim_ = 0;
    int weight_ = 0;
    std::map<Bidegree, Subspace> pieces_;
};

/// A real bilinear form Q(u, v) = u^T G v with G^T = sign * G.
class BilinearFormData {
public:
    BilinearFormData() = default;
    /// Throws std::invalid_argument unless gram is square, rational,
    /// nondegenerate and (anti)symmetric as declared.
    BilinearFormData(QiMatrix gram, int symmetry_sign);

    const QiMatrix &gram() const { return gram_; }
    int symmetry_sign() const { return sign_; }
    std::size_t dim() const { return gram_.rows(); }

    /// Gram matrix of Q restricted to (span of a, span of b): a^T G b.
    QiMatrix pair(const QiMatrix &a, const QiMatrix &b) const;

private:
    QiMatrix gram_;
    int sign_ = 1;
};

/// Lists each violated axiom: non-direct sum, sum not everything,
/// conjugation symmetry. Passing findings are recorded too.
Report validate_hodge_structure(const HodgeStructureData &h);

/// F^p = sum_{a >= p} H^{a, k-a}. Throws std::invalid_argument on invalid h.
DecreasingFiltration filtration_from_pieces(const HodgeStructureData &h);

/// H^{a, k-a} = F^a cap conj(F^{k-a}); zero pieces are dropped. The result
/// is a Hodge structure iff it validates.
HodgeStructureData pieces_from_filtration(const DecreasingFiltration &f, int k);

/// C acting by i^{p-q} on H^{p,q}. Throws std::invalid_argument on invalid h.
QiMatrix weil_operator(const HodgeStructureData &h);

/// Orthogonality of Q on H^{p,q} x H^{p',q'} unless p + p' = k, and
/// positivity of v -> Q(Cv, conj v) decided by leading principal minors.
/// Throws std::invalid_argument if Q's symmetry sign is not (-1)^weight.
Report check_polarization(const HodgeStructureData &h, const BilinearFormData &q);

/// Re-expresses a structure living on a conjugation-stable subspace with
/// rational basis `basis` (columns) in the coordinates of that basis.
HodgeStructureData restrict_to(const HodgeStructureData &h, const QiMatrix &basis);

struct GradedBlock {
    Rational degree;
    std::size_t offset = 0;
    std::size_t dim = 0;
};

/// Direct sum of degree blocks laid out as consecutive coordinate ranges in
/// ascending degree order.
class GradedSpace {
public:
    GradedSpace() = default;
    /// (degree, dim) pairs; duplicates are rejected.
    explicit GradedSpace(std::vector<std::pair<Rational, std::size_t>> degree_dims);

    const std::vector<GradedBlock> &blocks() const { return blocks_; }
    std::size_t total_dim() const { return total_; }
    const GradedBlock *find(const Rational &degree) const;
    std::size_t dim_of(const Rational &degree) const;
    /// The degree block as a coordinate subspace; zero when absent.
    Subspace block_subspace(const Rational &degree) const;

private:
    std::vector<GradedBlock> blocks_;
    std::size_t total_ = 0;
};

/// A degree +2 operator on a graded space.
class LefschetzOperator {
public:
    LefschetzOperator() = default;
    /// Throws std::invalid_argument unless the matrix is rational and maps
    /// each degree-d block into the degree-(d+2) block.
    LefschetzOperator(QiMatrix matrix, GradedSpace grading);

    const QiMatrix &matrix() const { return matrix_; }
    const GradedSpace &grading() const { return grading_; }

    /// L^p from the `from` block to the `from + 2p` block (possibly with
    /// zero rows or columns).
    QiMatrix block_power(unsigned p, const Rational &from) const;

private:
    QiMatrix matrix_;
    GradedSpace grading_;
};

class LefschetzError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// L^p : H^{n-p} -> H^{n+p} is an isomorphism for every p >= 1.
Report hard_lefschetz_check(const LefschetzOperator &l, int n);

/// ker(L^{n-p+1}) on the degree-p block, embedded in the total space; the
/// zero subspace when p is outside [0, n].
Subspace primitive_subspace(const LefschetzOperator &l, int n, int p);

/// For k = 0..n the nonzero summands L^p H_o^{k-2p}. Throws LefschetzError
/// when hard Lefschetz fails.
std::map<int, std::vector<std::pair<int, Subspace>>> lefschetz_decomposition(const LefschetzOperator &l, int n);

} // namespace orbhodge
