#pragma once

// Lattice polytopes at desk scale: facets by exhaustive search over vertex
// n-subsets, polar duals, face lattices, lattice points by bounding box,
// and twisted-sector candidates of generic anticanonical hypersurfaces.

#include "orbhodge/exactla.hpp"

#include <string>
#include <vector>

namespace orbhodge {

using RationalVector = std::vector<Rational>;
using LatticePoint = std::vector<long>;

/// a . x >= offset, with a primitive integral.
struct Facet {
    RationalVector normal;
    Rational offset;
    std::vector<std::size_t> vertices;  ///< tight vertex indices, ascending
};

class LatticePolytope {
public:
    LatticePolytope() = default;
    /// Throws std::invalid_argument when the points do not span R^n
    /// affinely or some listed point is not a vertex.
    LatticePolytope(int n, std::vector<RationalVector> vertices);
    /// Convex hull of a point set; redundant points are dropped.
    static LatticePolytope hull(int n, const std::vector<RationalVector> &points);

    int dim() const { return n_; }
    const std::vector<RationalVector> &vertices() const { return vertices_; }
    const std::vector<Facet> &facets() const { return facets_; }
    bool is_integral() const;
    /// Every facet offset is negative.
    bool origin_in_interior() const;

private:
    int n_ = 0;
    std::vector<RationalVector> vertices_;
    std::vector<Facet> facets_;
};

/// Vertices sorted lexicographically.
std::vector<RationalVector> sorted_vertices(const LatticePolytope &p);

/// {y : <y, x> >= -1 for x in P}. Throws std::invalid_argument unless the
/// origin is interior.
LatticePolytope polar_dual(const LatticePolytope &p);

/// Integral with the origin interior and an integral polar dual.
bool is_reflexive(const LatticePolytope &p);

struct FaceInfo {
    int face_dim = 0;
    std::vector<std::size_t> vertex_subset;
    std::vector<std::size_t> supporting_facets;
};

/// All proper nonempty faces, sorted by dimension then vertex indices.
std::vector<FaceInfo> face_lattice(const LatticePolytope &p);

/// Sum of (-1)^dim over all faces including the empty face and P itself.
long euler_sum(const std::vector<FaceInfo> &faces, int n);

/// Lattice points of P, lexicographic.
std::vector<LatticePoint> lattice_points(const LatticePolytope &p);
/// Lattice points of the closed face.
std::vector<LatticePoint> lattice_points(const LatticePolytope &p, const FaceInfo &f);
/// Lattice points in the relative interior of the face.
std::vector<LatticePoint> relative_interior_points(const LatticePolytope &p, const FaceInfo &f);

struct SectorCandidate {
    LatticePoint lattice_point;
    FaceInfo face;
    int orbit_closure_dim = 0;
    int sector_dim = 0;
    Rational age = 1;
};

/// One candidate per relative-interior lattice point of each face of the
/// polar dual with 1 <= dim <= n-2. Throws std::invalid_argument unless
/// the input is reflexive.
std::vector<SectorCandidate> cy_hypersurface_sectors(const LatticePolytope &delta);

enum class HlcVerdictKind { holds, fails, holds_with_caveat };
std::string to_string(HlcVerdictKind v);

struct HlcVerdict {
    HlcVerdictKind verdict = HlcVerdictKind::holds_with_caveat;
    std::vector<SectorCandidate> candidates;
    std::vector<SectorCandidate> witnesses;
    std::string caveat;
};

/// A candidate satisfies the condition iff its face has dimension 1.
HlcVerdict hlc_verdict(const LatticePolytope &delta);

/// Anticanonical polytope of P(w): the polar dual of conv(v_0..v_n) where
/// sum w_i v_i = 0 in Z^{n+1}/Zw, coordinates fixed by a unimodular U with
/// U w = e_0. Throws std::invalid_argument unless there are at least two
/// positive weights with gcd 1. The result may fail to be integral.
LatticePolytope wps_polytope(const std::vector<long> &weights);

/// Vertex-facet pairing values a.v - offset, rows sorted then sorted as a
/// whole; an invariant of GL(n, Z) equivalence.
std::vector<std::vector<Rational>> pairing_canonical_form(const LatticePolytope &p);

/// Some A in GL(n, Z) maps the vertex set of p onto that of q.
bool unimodularly_equivalent(const LatticePolytope &p, const LatticePolytope &q);

} // namespace orbhodge
