#pragma once

// Sector-level model of orbifold cohomology. Sector cohomology, pairings
// and the action of ambient Kaehler classes are inputs; this module
// assembles them into H_orb with its grading, bigrading, Lefschetz
// operators and polarization, and checks the resulting structures.

#include "orbhodge/hodge.hpp"
#include "orbhodge/mhs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbhodge {

/// Local action of a group element g: eigenvalues exp(2 pi i m_j / m_g).
struct GroupElementAction {
    unsigned order = 1;
    std::vector<unsigned> exponents;
};

/// Throws std::invalid_argument unless order >= 1 and every exponent is
/// below the order.
void validate_action(const GroupElementAction &g);

/// Degree shifting number: sum_j m_j / m_g.
Rational age(const GroupElementAction &g);
/// Age is integral, i.e. the action lies in SL(n, C).
bool is_sl(const GroupElementAction &g);
/// Exponents (m_g - m_j) mod m_g.
GroupElementAction inverse(const GroupElementAction &g);

struct SectorData {
    std::string id;
    Rational age;
    std::string partner;
    int dim = 0;
    bool untwisted = false;
    /// H^j(X_t) for j = 0..2*dim, each of weight j.
    std::vector<HodgeStructureData> cohomology;
    /// pairing[j] is b^j x b^{2dim-j}: integral of alpha wedge beta.
    std::vector<QiMatrix> pairing;
    /// kaehler_actions[r][j] is b^{j+2} x b^j for j = 0..2*dim-2.
    std::vector<std::vector<QiMatrix>> kaehler_actions;

    std::size_t betti(int j) const;
};

struct OrbifoldData {
    int n = 0;
    std::size_t kaehler_basis_size = 0;
    std::vector<SectorData> sectors;

    /// Index of the sector with this id; nullopt when absent.
    std::optional<std::size_t> find(const std::string &id) const;
    std::optional<std::size_t> untwisted_index() const;
    bool all_ages_integral() const;
};

/// Shapes, the distinguished untwisted sector, the partner involution,
/// sector Hodge structures, pairing symmetry and nondegeneracy, Poincare
/// duality of Betti numbers, (1,1)-type and self-adjointness of the
/// Kaehler actions.
Report validate_orbifold(const OrbifoldData &o);

/// dim X_t = n - i_t - i_{I(t)} for every sector.
Report validate_dims(const OrbifoldData &o);

/// i_t = i_{I(t)} for every sector; failures name both sectors.
Report hlc_check(const OrbifoldData &o);

/// Coordinates of H^j(X_t) inside H_orb.
struct SectorBlock {
    std::size_t sector = 0;
    int j = 0;
    Rational degree;
    std::size_t offset = 0;
    std::size_t dim = 0;
};

/// H_orb^k = sum_t H^{k - 2 i_t}(X_t). Blocks are laid out by ascending
/// orbifold degree, sectors in input order within a degree.
struct OrbifoldCohomology {
    GradedSpace grading;
    std::vector<SectorBlock> layout;
    /// H_orb^{p,q}; present only when every age is integral.
    std::optional<Bigrading> bigrading;
    bool integral_degrees = false;

    const SectorBlock *find(std::size_t sector, int j) const;
    /// Weight-k structure on the degree-k block, in block coordinates.
    /// Throws std::invalid_argument when degrees are not integral.
    HodgeStructureData degree_structure(int k) const;
    std::size_t dim_of(int k) const { return grading.dim_of(Rational(k)); }
};

/// Throws std::invalid_argument on inconsistent shapes.
OrbifoldCohomology assemble_orbifold_cohomology(const OrbifoldData &o);

/// Block-diagonal sum over sectors of sum_r coeffs[r] * (Kaehler action r).
LefschetzOperator orbifold_lefschetz(const OrbifoldData &o, const std::vector<Rational> &coeffs);

/// Hard Lefschetz on the assembled graded space, centered at n.
Report orbifold_hard_lefschetz(const OrbifoldData &o, const std::vector<Rational> &coeffs);

/// (-1)^{k(k-1)/2 + s}. Throws std::invalid_argument unless both are integers.
int sector_form_sign(const Rational &k, const Rational &s);

/// Direct sum over sectors of (-1)^{k(k-1)/2 + i_t} * pairing, k the
/// orbifold degree of the first argument. Throws std::invalid_argument for
/// non-integral ages or when the result is not (-1)^n-symmetric.
BilinearFormData assemble_polarization(const OrbifoldData &o);

/// Block of the assembled form pairing H_orb^k with H_orb^{2n-k}.
QiMatrix polarization_block(const OrbifoldData &o, int k);

/// H^{p,q} -> H^{p+s,q+s}, weight + 2s. The form is transported unchanged:
/// the sign (-1)^{k(k-1)/2+s} at k = j + 2s equals (-1)^{j(j-1)/2}.
HodgeStructureData tate_twist(const HodgeStructureData &h, int s);

/// For each k = 0..n: the weight-k structure on H_orb^k, and the primitive
/// part polarized by Q(., L^{n-k} .). Preconditions are reported, not thrown.
Report check_theorem_5_1(const OrbifoldData &o, const std::vector<Rational> &coeffs);

/// The bigrading I^{p,q} = H_orb^{n-q,n-p} gives a weight-n MHS split over
/// R and polarized by L and the assembled form.
Report check_theorem_5_2(const OrbifoldData &o, const std::vector<Rational> &coeffs);

/// Commutation of the basis Lefschetz operators, constancy of
/// W(sum lambda_j L_j) over sampled positive lambda, and polarization of
/// exp(sum z_j L_j) F at each sample point.
Report orbit_check_corollary_5_3(const OrbifoldData &o, const std::vector<std::vector<GaussRational>> &samples);

} // namespace orbhodge
