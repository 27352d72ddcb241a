#include "orbhodge/toric.hpp"

#include "orbhodge/subspace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbhodge {

namespace {

Rational dot(const RationalVector &a, const RationalVector &x) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * x[k];
    return s;
}

Rational dot(const RationalVector &a, const LatticePoint &x) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * Rational(x[k]);
    return s;
}

// Rows are the given vectors.
QiMatrix row_matrix(const std::vector<RationalVector> &rows, std::size_t cols) {
    QiMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
}

std::size_t affine_rank(const std::vector<RationalVector> &pts, const std::vector<std::size_t> &idx, std::size_t n) {
    if (idx.size() <= 1) return 0;
    std::vector<RationalVector> diffs;
    for (std::size_t k = 1; k < idx.size(); ++k) {
        RationalVector d(n);
        for (std::size_t c = 0; c < n; ++c) d[c] = pts[idx[k]][c] - pts[idx[0]][c];
        diffs.push_back(std::move(d));
    }
    return rank(row_matrix(diffs, n));
}

// Scales a nonzero rational vector by a positive factor to a primitive integral vector.
RationalVector primitive(RationalVector a) {
    mpz_class l = 1, g = 0;
    for (const auto &x : a) l = lcm(l, mpz_class(x.get_den()));
    for (auto &x : a) {
        x *= Rational(l);
        g = gcd(g, mpz_class(x.get_num()));
    }
    for (auto &x : a) x /= Rational(g);
    return a;
}

void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t> &)> &f) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Facet> compute_facets(const std::vector<RationalVector> &pts, std::size_t n) {
    std::vector<std::size_t> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    if (pts.empty() || affine_rank(pts, all, n) != n) throw std::invalid_argument("polytope is not full-dimensional");

    std::vector<Facet> facets;
    std::set<RationalVector> seen;
    for_each_subset(pts.size(), n, [&](const std::vector<std::size_t> &s) {
        RationalVector a;
        if (n == 1) {
            a = {Rational(1)};
        } else {
            std::vector<RationalVector> diffs;
            for (std::size_t k = 1; k < s.size(); ++k) {
                RationalVector d(n);
                for (std::size_t c = 0; c < n; ++c) d[c] = pts[s[k]][c] - pts[s[0]][c];
                diffs.push_back(std::move(d));
            }
            Subspace ker = kernel(row_matrix(diffs, n));
            if (ker.dim() != 1) return;
            for (std::size_t c = 0; c < n; ++c) a.push_back(ker.basis()(c, 0).re());
        }
        a = primitive(std::move(a));
        Rational b = dot(a, pts[s[0]]);
        bool above = true, below = true;
        for (const auto &p : pts) {
            int side = sgn(dot(a, p) - b);
            if (side < 0) above = false;
            if (side > 0) below = false;
        }
        if (!above && !below) return;
        if (!above) {
            for (auto &x : a) x = -x;
            b = -b;
        }
        RationalVector key = a;
        key.push_back(b);
        if (!seen.insert(key).second) return;
        Facet f{a, b, {}};
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(a, pts[i]) == b) f.vertices.push_back(i);
        facets.push_back(std::move(f));
    });
    std::sort(facets.begin(), facets.end(), [](const Facet &x, const Facet &y) {
        return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
    });
    return facets;
}

// Points lying on facets whose normals span R^n.
std::vector<bool> extreme_points(const std::vector<RationalVector> &pts, const std::vector<Facet> &facets, std::size_t n) {
    std::vector<bool> out(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<RationalVector> normals;
        for (const auto &f : facets)
            if (std::binary_search(f.vertices.begin(), f.vertices.end(), i)) normals.push_back(f.normal);
        out[i] = !normals.empty() && rank(row_matrix(normals, n)) == n;
    }
    return out;
}

long floor_of(const Rational &q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

long ceil_of(const Rational &q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

// Lattice points in the bounding box of the chosen vertices that satisfy keep().
std::vector<LatticePoint> box_points(const LatticePolytope &p, const std::vector<std::size_t> &verts,
                                     const std::function<bool(const LatticePoint &)> &keep) {
    const std::size_t n = static_cast<std::size_t>(p.dim());
    LatticePoint lo(n), hi(n);
    for (std::size_t c = 0; c < n; ++c) {
        Rational mn = p.vertices()[verts[0]][c], mx = mn;
        for (auto v : verts) {
            mn = std::min(mn, p.vertices()[v][c]);
            mx = std::max(mx, p.vertices()[v][c]);
        }
        lo[c] = ceil_of(mn);
        hi[c] = floor_of(mx);
        if (lo[c] > hi[c]) return {};
    }
    std::vector<LatticePoint> out;
    LatticePoint x = lo;
    while (true) {
        if (keep(x)) out.push_back(x);
        std::size_t c = n;
        while (c > 0) {
            --c;
            if (x[c] < hi[c]) {
                ++x[c];
                break;
            }
            x[c] = lo[c];
            if (c == 0) return out;
        }
        if (n == 0) return out;
    }
}

std::vector<std::size_t> all_indices(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

LatticePolytope::LatticePolytope(int n, std::vector<RationalVector> vertices) : n_(n), vertices_(std::move(vertices)) {
    if (n < 1) throw std::invalid_argument("polytope dimension must be positive");
    for (const auto &v : vertices_)
        if (v.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("vertex has the wrong number of coordinates");
    const std::size_t dn = static_cast<std::size_t>(n);
    facets_ = compute_facets(vertices_, dn);
    auto extreme = extreme_points(vertices_, facets_, dn);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!extreme[i]) throw std::invalid_argument("point " + std::to_string(i) + " is not a vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            if (vertices_[i] == vertices_[j]) throw std::invalid_argument("duplicate vertex");
}

LatticePolytope LatticePolytope::hull(int n, const std::vector<RationalVector> &points) {
    std::vector<RationalVector> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto facets = compute_facets(pts, static_cast<std::size_t>(n));
    auto extreme = extreme_points(pts, facets, static_cast<std::size_t>(n));
    std::vector<RationalVector> verts;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (extreme[i]) verts.push_back(pts[i]);
    return {n, std::move(verts)};
}

bool LatticePolytope::is_integral() const {
    for (const auto &v : vertices_)
        for (const auto &x : v)
            if (x.get_den() != 1) return false;
    return true;
}

bool LatticePolytope::origin_in_interior() const {
    return std::all_of(facets_.begin(), facets_.end(), [](const Facet &f) { return sgn(f.offset) < 0; });
}

std::vector<RationalVector> sorted_vertices(const LatticePolytope &p) {
    auto v = p.vertices();
    std::sort(v.begin(), v.end());
    return v;
}

LatticePolytope polar_dual(const LatticePolytope &p) {
    if (!p.origin_in_interior()) throw std::invalid_argument("polar_dual: origin is not in the interior");
    std::vector<RationalVector> verts;
    for (const auto &f : p.facets()) {
        RationalVector y = f.normal;
        for (auto &x : y) x /= -f.offset;
        verts.push_back(std::move(y));
    }
    std::sort(verts.begin(), verts.end());
    return {p.dim(), std::move(verts)};
}

bool is_reflexive(const LatticePolytope &p) {
    return p.is_integral() && p.origin_in_interior() && polar_dual(p).is_integral();
}

std::vector<FaceInfo> face_lattice(const LatticePolytope &p) {
    const auto &facets = p.facets();
    std::set<std::vector<std::size_t>> faces;
    std::vector<std::vector<std::size_t>> queue;
    for (const auto &f : facets)
        if (faces.insert(f.vertices).second) queue.push_back(f.vertices);
    while (!queue.empty()) {
        auto cur = std::move(queue.back());
        queue.pop_back();
        for (const auto &f : facets) {
            std::vector<std::size_t> cut;
            std::set_intersection(cur.begin(), cur.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(cut));
            if (!cut.empty() && faces.insert(cut).second) queue.push_back(std::move(cut));
        }
    }
    const std::size_t n = static_cast<std::size_t>(p.dim());
    std::vector<FaceInfo> out;
    for (const auto &vs : faces) {
        FaceInfo info;
        info.vertex_subset = vs;
        info.face_dim = static_cast<int>(affine_rank(p.vertices(), vs, n));
        for (std::size_t k = 0; k < facets.size(); ++k)
            if (std::includes(facets[k].vertices.begin(), facets[k].vertices.end(), vs.begin(), vs.end()))
                info.supporting_facets.push_back(k);
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const FaceInfo &a, const FaceInfo &b) {
        return std::tie(a.face_dim, a.vertex_subset) < std::tie(b.face_dim, b.vertex_subset);
    });
    return out;
}

long euler_sum(const std::vector<FaceInfo> &faces, int n) {
    long s = -1 + (n % 2 == 0 ? 1 : -1);
    for (const auto &f : faces) s += f.face_dim % 2 == 0 ? 1 : -1;
    return s;
}

std::vector<LatticePoint> lattice_points(const LatticePolytope &p) {
    return box_points(p, all_indices(p.vertices().size()), [&](const LatticePoint &x) {
        return std::all_of(p.facets().begin(), p.facets().end(), [&](const Facet &f) { return dot(f.normal, x) >= f.offset; });
    });
}

namespace {

std::vector<LatticePoint> face_points(const LatticePolytope &p, const FaceInfo &f, bool strict) {
    std::vector<bool> supporting(p.facets().size(), false);
    for (auto k : f.supporting_facets) supporting.at(k) = true;
    return box_points(p, f.vertex_subset, [&](const LatticePoint &x) {
        for (std::size_t k = 0; k < p.facets().size(); ++k) {
            const Facet &fc = p.facets()[k];
            Rational v = dot(fc.normal, x);
            if (supporting[k] ? v != fc.offset : (strict ? v <= fc.offset : v < fc.offset)) return false;
        }
        return true;
    });
}

} // namespace

std::vector<LatticePoint> lattice_points(const LatticePolytope &p, const FaceInfo &f) { return face_points(p, f, false); }

std::vector<LatticePoint> relative_interior_points(const LatticePolytope &p, const FaceInfo &f) {
    return face_points(p, f, true);
}

std::vector<SectorCandidate> cy_hypersurface_sectors(const LatticePolytope &delta) {
    if (!is_reflexive(delta)) throw std::invalid_argument("cy_hypersurface_sectors: polytope is not reflexive");
    const int n = delta.dim();
    LatticePolytope dual = polar_dual(delta);
    std::vector<SectorCandidate> out;
    for (const auto &f : face_lattice(dual)) {
        if (f.face_dim < 1 || f.face_dim > n - 2) continue;
        for (auto &pt : relative_interior_points(dual, f))
            out.push_back({std::move(pt), f, n - 1 - f.face_dim, n - 2 - f.face_dim, Rational(1)});
    }
    return out;
}

std::string to_string(HlcVerdictKind v) {
    switch (v) {
    case HlcVerdictKind::holds: return "holds";
    case HlcVerdictKind::fails: return "fails";
    case HlcVerdictKind::holds_with_caveat: return "holds_with_caveat";
    }
    return "?";
}

HlcVerdict hlc_verdict(const LatticePolytope &delta) {
    HlcVerdict v;
    v.candidates = cy_hypersurface_sectors(delta);
    for (const auto &c : v.candidates)
        if (c.face.face_dim != 1) v.witnesses.push_back(c);
    const std::string scope = "only age-1 sectors attached to relative-interior lattice points of faces of the "
                              "dual with 1 <= dim <= n-2 were enumerated";
    if (!v.witnesses.empty()) {
        v.verdict = HlcVerdictKind::fails;
    } else if (v.candidates.empty()) {
        v.verdict = HlcVerdictKind::holds_with_caveat;
        v.caveat = "no qualifying faces carry interior lattice points; " + scope;
    } else {
        v.verdict = HlcVerdictKind::holds;
        v.caveat = scope;
    }
    return v;
}

LatticePolytope wps_polytope(const std::vector<long> &weights) {
    if (weights.size() < 2) throw std::invalid_argument("wps_polytope: need at least two weights");
    long g = 0;
    for (long w : weights) {
        if (w <= 0) throw std::invalid_argument("wps_polytope: weights must be positive");
        g = std::gcd(g, w);
    }
    if (g != 1) throw std::invalid_argument("wps_polytope: weights must have gcd 1");

    const std::size_t m = weights.size();
    std::vector<std::vector<long>> u(m, std::vector<long>(m, 0));
    for (std::size_t k = 0; k < m; ++k) u[k][k] = 1;
    std::vector<long> x = weights;
    while (true) {
        std::size_t k = m;
        for (std::size_t j = 0; j < m; ++j)
            if (x[j] != 0 && (k == m || std::labs(x[j]) < std::labs(x[k]))) k = j;
        bool done = true;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == k || x[j] == 0) continue;
            done = false;
            long q = x[j] / x[k];
            x[j] -= q * x[k];
            for (std::size_t c = 0; c < m; ++c) u[j][c] -= q * u[k][c];
        }
        if (done) {
            if (x[k] < 0) {
                x[k] = -x[k];
                for (auto &e : u[k]) e = -e;
            }
            std::swap(u[0], u[k]);
            break;
        }
    }
    const int n = static_cast<int>(m) - 1;
    std::vector<RationalVector> rays;
    for (std::size_t i = 0; i < m; ++i) {
        RationalVector v;
        for (std::size_t r = 1; r < m; ++r) v.emplace_back(u[r][i]);
        rays.push_back(std::move(v));
    }
    return polar_dual(LatticePolytope::hull(n, rays));
}

std::vector<std::vector<Rational>> pairing_canonical_form(const LatticePolytope &p) {
    std::vector<std::vector<Rational>> rows;
    for (const auto &v : p.vertices()) {
        std::vector<Rational> row;
        for (const auto &f : p.facets()) row.push_back(dot(f.normal, v) - f.offset);
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

bool unimodularly_equivalent(const LatticePolytope &p, const LatticePolytope &q) {
    if (p.dim() != q.dim() || p.vertices().size() != q.vertices().size()) return false;
    if (pairing_canonical_form(p) != pairing_canonical_form(q)) return false;
    const std::size_t n = static_cast<std::size_t>(p.dim());

    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < p.vertices().size() && basis.size() < n; ++i) {
        auto trial = basis;
        trial.push_back(i);
        std::vector<RationalVector> rows;
        for (auto k : trial) rows.push_back(p.vertices()[k]);
        if (rank(row_matrix(rows, n)) == trial.size()) basis = std::move(trial);
    }
    if (basis.size() < n) return false;
    QiMatrix psel(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) psel(r, c) = p.vertices()[basis[c]][r];
    QiMatrix pinv = *inverse(psel);
    const auto target = sorted_vertices(q);

    std::vector<std::size_t> chosen;
    std::vector<bool> used(q.vertices().size(), false);
    std::function<bool()> search = [&]() -> bool {
        if (chosen.size() == n) {
            QiMatrix qsel(n, n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) qsel(r, c) = q.vertices()[chosen[c]][r];
            QiMatrix a = qsel * pinv;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (a(r, c).re().get_den() != 1) return false;
            GaussRational d = determinant(a);
            if (!(d == GaussRational(1) || d == GaussRational(-1))) return false;
            std::vector<RationalVector> image;
            for (const auto &v : p.vertices()) {
                RationalVector w(n, Rational(0));
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) w[r] += a(r, c).re() * v[c];
                image.push_back(std::move(w));
            }
            std::sort(image.begin(), image.end());
            return image == target;
        }
        for (std::size_t j = 0; j < q.vertices().size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            chosen.push_back(j);
            bool found = search();
            chosen.pop_back();
            used[j] = false;
            if (found) return true;
        }
        return false;
    };
    return search();
}

} // namespace orbhodge
