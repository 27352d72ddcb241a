#pragma once

// Mixed Hodge structures: weight filtrations of nilpotent operators,
// bigradings, polarized MHS checks and nilpotent orbits.

#include "orbhodge/hodge.hpp"

#include <map>
#include <vector>

namespace orbhodge {

class NilpotentOperator {
public:
    NilpotentOperator() = default;
    /// Throws std::invalid_argument unless m is square, rational and nilpotent.
    explicit NilpotentOperator(QiMatrix m);

    const QiMatrix &matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }
    /// Smallest m with N^m = 0.
    unsigned nilpotency_index() const { return index_; }

private:
    QiMatrix matrix_;
    unsigned index_ = 0;
};

/// A Jordan chain v, Nv, ..., N^{length-1} v with N^length v = 0.
struct JordanChain {
    QiMatrix top;  ///< column vector v
    unsigned length = 0;
};

/// Jordan chains of N whose vectors together form a basis, longest first.
std::vector<JordanChain> jordan_chains(const NilpotentOperator &n);

/// W(N), centered at 0: the j-th vector of a length-s chain gets weight
/// s - 1 - 2j. Both characterizing properties are asserted on the result.
IncreasingFiltration weight_filtration(const NilpotentOperator &n);

/// N(W_l) in W_{l-2} and N^l : gr_l -> gr_{-l} bijective, for every l.
Report weight_filtration_properties(const QiMatrix &n, const IncreasingFiltration &w);

/// Result_j = W_{j+k}; so shift_filtration(W, -k) is W[-k].
IncreasingFiltration shift_filtration(const IncreasingFiltration &w, int k);

class Bigrading {
public:
    Bigrading() = default;
    Bigrading(std::size_t ambient_dim, std::map<Bidegree, Subspace> pieces);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::map<Bidegree, Subspace> &pieces() const { return pieces_; }
    /// I^{p,q}; zero when absent.
    Subspace piece(int p, int q) const;

private:
    std::size_t ambient_dim_ = 0;
    std::map<Bidegree, Subspace> pieces_;
};

struct MixedHodgeData {
    IncreasingFiltration weight;
    DecreasingFiltration hodge;
    /// Congruence I^{p,q} = conj I^{q,p} mod sum_{a<p,b<q} I^{a,b}, and the
    /// pure structures induced on each gr^W.
    Report report;
    bool split = false;
};

/// W_l = sum_{p+q<=l} I^{p,q}, F^a = sum_{p>=a} I^{p,q}. Throws
/// std::invalid_argument when the pieces are not a direct sum decomposition.
MixedHodgeData mhs_from_bigrading(const Bigrading &i);

bool is_split_over_R(const Bigrading &i);

/// T(I^{p,q}) in I^{p+a,q+b} for every piece.
bool check_morphism_bidegree(const QiMatrix &t, const Bigrading &i, int a, int b);

/// Weight-l structure induced by F on gr_l^W, expressed on a rational
/// complement of W_{l-1} in W_l chosen by echelon pivots.
struct GradedPiece {
    QiMatrix basis;          ///< complement columns, total coordinates
    HodgeStructureData hodge;  ///< in the coordinates of `basis`
};

/// Throws std::invalid_argument when W_l or W_{l-1} is not defined over Q.
GradedPiece graded_piece(const IncreasingFiltration &w, const DecreasingFiltration &f, int l);

/// F induces a Hodge structure of weight l on every nonzero gr_l^W.
Report check_mhs(const IncreasingFiltration &w, const DecreasingFiltration &f);

/// PMHS conditions that involve only N and W: N^{k+1} = 0 ("item1") and
/// W = W(N)[-k] ("item2").
Report check_pmhs_weight_conditions(const IncreasingFiltration &w, const NilpotentOperator &n, int k);

/// The four PMHS conditions of weight k, plus the side conditions that N is
/// rational, an infinitesimal isometry of Q and lowers F by one. Throws
/// std::invalid_argument when Q is not (-1)^k-symmetric or shapes differ.
Report check_pmhs(const IncreasingFiltration &w, const DecreasingFiltration &f, const BilinearFormData &q,
                  const NilpotentOperator &n, int k);

struct OrbitPoint {
    std::vector<GaussRational> coefficients;
    std::vector<NilpotentOperator> operators;
};

/// exp(sum z_j N_j) applied to every step. Throws std::invalid_argument when
/// the operators do not commute or the lengths differ.
DecreasingFiltration evaluate_orbit(const DecreasingFiltration &f, const OrbitPoint &pt);

/// Builds the weight-k pieces of the translated filtration and checks they
/// form a Hodge structure polarized by Q. Points with some Im z_j <= 0 are
/// evaluated anyway and flagged with a caveat.
Report check_orbit_polarized_at(const DecreasingFiltration &f, const OrbitPoint &pt, int k, const BilinearFormData &q);

/// Per-coordinate defaults i, 2i, 1+i, i/2, 3i.
std::vector<GaussRational> default_sample_values();

/// Cartesian product of the per-coordinate defaults, r coordinates.
std::vector<std::vector<GaussRational>> default_orbit_samples(std::size_t r);

} // namespace orbhodge
