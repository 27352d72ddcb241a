#pragma once

// Seeded random generators and independent oracles shared by the property
// and acceptance tests.

#include "orbhodge/mhs.hpp"
#include "orbhodge/orbifold.hpp"
#include "orbhodge/toric.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#ifndef ORBHODGE_FIXTURE_DIR
#define ORBHODGE_FIXTURE_DIR "fixtures"
#endif

namespace orbhodge::testing {

inline std::string fixture(const std::string &name) { return std::string(ORBHODGE_FIXTURE_DIR) + "/" + name + ".json"; }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64 &engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline Rational small_rational(Rng &rng, long range = 3, long den_max = 3) {
    Rational q(rng.uniform(-range, range), rng.uniform(1, den_max));
    q.canonicalize();
    return q;
}

inline GaussRational small_gauss(Rng &rng) { return {small_rational(rng), small_rational(rng)}; }

inline QiMatrix random_rational_matrix(Rng &rng, std::size_t rows, std::size_t cols, long range = 3) {
    QiMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_rational(rng, range);
    return m;
}

inline QiMatrix random_gauss_matrix(Rng &rng, std::size_t rows, std::size_t cols) {
    QiMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_gauss(rng);
    return m;
}

/// Random invertible rational matrix.
inline QiMatrix random_invertible(Rng &rng, std::size_t n) {
    while (true) {
        QiMatrix g = random_rational_matrix(rng, n, n, 2);
        if (rank(g) == n) return g;
    }
}

/// Product of elementary integer operations: an element of GL(n, Z).
inline QiMatrix random_unimodular(Rng &rng, std::size_t n, int steps = 6) {
    QiMatrix g = QiMatrix::identity(n);
    if (n < 2) return rng.coin() ? g : g * GaussRational(-1);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = rng.index(n), j = rng.index(n);
        if (i == j) continue;
        long k = rng.uniform(-1, 1);
        QiMatrix e = QiMatrix::identity(n);
        e(i, j) = k;
        g = e * g;
    }
    if (rng.coin()) {
        QiMatrix p = QiMatrix::identity(n);
        std::size_t i = rng.index(n), j = rng.index(n);
        p(i, i) = 0;
        p(j, j) = 0;
        p(i, j) = 1;
        p(j, i) = 1;
        if (i == j) p(i, i) = -1;
        g = p * g;
    }
    return g;
}

inline std::vector<unsigned> random_partition(Rng &rng, unsigned n) {
    std::vector<unsigned> parts;
    while (n > 0) {
        unsigned s = static_cast<unsigned>(rng.uniform(1, n));
        parts.push_back(s);
        n -= s;
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

/// N = g J g^{-1}: J has Jordan blocks of the given sizes with J e_j = e_{j+1}
/// inside a block, so column j of g within a block is N^j of the block top.
struct NilpotentSample {
    QiMatrix n;
    QiMatrix g;
    std::vector<unsigned> blocks;
};

inline NilpotentSample random_nilpotent(Rng &rng, unsigned max_dim) {
    unsigned dim = static_cast<unsigned>(rng.uniform(1, max_dim));
    NilpotentSample s;
    s.blocks = random_partition(rng, dim);
    QiMatrix j(dim, dim);
    std::size_t off = 0;
    for (unsigned b : s.blocks) {
        for (unsigned k = 0; k + 1 < b; ++k) j(off + k + 1, off + k) = 1;
        off += b;
    }
    s.g = random_invertible(rng, dim);
    s.n = s.g * j * *inverse(s.g);
    return s;
}

/// Oracle 1: weights assigned per Jordan block of the construction.
inline IncreasingFiltration jordan_oracle(const NilpotentSample &s) {
    const std::size_t dim = s.n.rows();
    unsigned m = s.blocks.empty() ? 1 : s.blocks.front();
    int top = static_cast<int>(m) - 1;
    std::vector<int> weight(dim);
    std::size_t off = 0;
    for (unsigned b : s.blocks) {
        for (unsigned k = 0; k < b; ++k) weight[off + k] = static_cast<int>(b) - 1 - 2 * static_cast<int>(k);
        off += b;
    }
    std::vector<Subspace> steps;
    for (int l = -top; l <= top; ++l) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < dim; ++c)
            if (weight[c] <= l) cols.push_back(c);
        steps.push_back(Subspace::span(select_columns(s.g, cols)));
    }
    return {dim, -top, std::move(steps)};
}

/// Oracle 2: W_l = sum over j >= max(0, -l) of ker N^{l+j+1} cap im N^j.
inline IncreasingFiltration kernel_image_oracle(const QiMatrix &n) {
    const std::size_t dim = n.rows();
    int m = 0;
    while (!power(n, static_cast<unsigned>(m)).is_zero()) ++m;
    int top = std::max(m - 1, 0);
    std::vector<Subspace> steps;
    for (int l = -top; l <= top; ++l) {
        Subspace acc(dim);
        for (int j = std::max(0, -l); j <= m; ++j) {
            int e = l + j + 1;
            if (e <= 0) continue;
            acc = sum(acc, intersect(kernel(power(n, static_cast<unsigned>(e))), image(power(n, static_cast<unsigned>(j)))));
        }
        steps.push_back(acc);
    }
    return {dim, -top, std::move(steps)};
}

/// A Hodge structure of weight k on Q^dim built in an adapted basis and
/// moved by a random real invertible matrix.
/// `form` polarizes `hodge`: blockwise s*I (even weight) or t*J (odd
/// weight) with the signs forced by positivity, scaled by random positive
/// factors and transported by g.
struct HodgeSample {
    HodgeStructureData hodge;
    QiMatrix g;
    BilinearFormData form;
};

inline HodgeSample random_hodge_structure(Rng &rng, std::size_t max_dim) {
    int k = static_cast<int>(rng.uniform(0, 4));
    std::vector<long> h(static_cast<std::size_t>(k + 1), 0);
    std::size_t total = 0;
    for (int p = k; 2 * p >= k; --p) {
        long cap = static_cast<long>(max_dim - total) / (2 * p == k ? 1 : 2);
        long v = cap > 0 ? rng.uniform(0, std::min(cap, 2L)) : 0;
        h[static_cast<std::size_t>(p)] = v;
        h[static_cast<std::size_t>(k - p)] = v;
        total += static_cast<std::size_t>(v) * (2 * p == k ? 1 : 2);
    }
    if (total == 0) {
        int p = k / 2 + (k % 2);
        h[static_cast<std::size_t>(p)] = 1;
        h[static_cast<std::size_t>(k - p)] = 1;
        total = (2 * p == k) ? 1 : 2;
    }
    std::map<Bidegree, QiMatrix> gens;
    QiMatrix gram(total, total);
    std::size_t off = 0;
    for (int p = k; 2 * p >= k; --p) {
        const int q = k - p;
        const std::size_t c = static_cast<std::size_t>(h[static_cast<std::size_t>(p)]);
        if (c == 0) continue;
        if (p == q) {
            QiMatrix b(total, c);
            for (std::size_t t = 0; t < c; ++t) {
                b(off + t, t) = 1;
                gram(off + t, off + t) = rng.uniform(1, 3);
            }
            gens[{p, q}] = b;
            off += c;
            continue;
        }
        for (std::size_t t = 0; t < c; ++t) {
            long scale = rng.uniform(1, 3);
            if (k % 2 == 0) {
                long sgn_even = ((p - q) / 2) % 2 == 0 ? 1 : -1;
                gram(off + t, off + t) = sgn_even * scale;
                gram(off + c + t, off + c + t) = sgn_even * scale;
            } else {
                long sgn_odd = ((p - q + 3) / 2) % 2 == 0 ? 1 : -1;
                gram(off + t, off + c + t) = sgn_odd * scale;
                gram(off + c + t, off + t) = -sgn_odd * scale;
            }
        }
        QiMatrix hol(total, c), anti(total, c);
        for (std::size_t t = 0; t < c; ++t) {
            hol(off + t, t) = 1;
            hol(off + c + t, t) = GaussRational::imaginary_unit();
            anti(off + t, t) = 1;
            anti(off + c + t, t) = -GaussRational::imaginary_unit();
        }
        gens[{p, q}] = hol;
        gens[{q, p}] = anti;
        off += 2 * c;
    }
    QiMatrix g = random_invertible(rng, total);
    QiMatrix ginv = *inverse(g);
    std::map<Bidegree, Subspace> pieces;
    for (auto &[pq, b] : gens) pieces.emplace(pq, Subspace::span(g * b));
    return {HodgeStructureData(total, k, std::move(pieces)), g,
            BilinearFormData(transpose(ginv) * gram * ginv, k % 2 == 0 ? 1 : -1)};
}

/// Sector data built from Lefschetz strings of (p,p) classes. Every sector
/// has H^0 != 0; partners share cohomology; the string with primitive
/// degree j0 pairs with sign (-1)^{j0/2} so that the Hodge-Riemann signs hold
/// whenever the sector is centered.
struct SkeletonOptions {
    int max_n = 4;
    std::size_t max_pairs = 3;
    /// Force ages of partners to agree (HLC) or leave them random.
    bool force_hlc = false;
    bool force_violation = false;
    std::size_t kaehler_basis_size = 1;
};

inline SectorData string_sector(Rng &rng, std::string id, std::string partner, Rational age, int d,
                                std::size_t r, const std::vector<long> &scales) {
    SectorData s;
    s.id = std::move(id);
    s.partner = std::move(partner);
    s.age = age;
    s.dim = d;
    // multiplicity of strings by primitive degree j0 = 0, 2, ..., <= d
    std::vector<std::size_t> mult;
    for (int j0 = 0; j0 <= d; j0 += 2) mult.push_back(j0 == 0 ? 1 : static_cast<std::size_t>(rng.uniform(0, 1)));
    struct Slot {
        std::size_t string;
        int j0;
        int m;
    };
    std::vector<std::vector<Slot>> deg(static_cast<std::size_t>(2 * d + 1));
    std::size_t sid = 0;
    std::vector<long> constant;
    for (std::size_t a = 0; a < mult.size(); ++a) {
        int j0 = 2 * static_cast<int>(a);
        for (std::size_t c = 0; c < mult[a]; ++c, ++sid) {
            constant.push_back(((j0 / 2) % 2 == 0 ? 1 : -1) * rng.uniform(1, 3));
            for (int m = 0; j0 + 2 * m <= 2 * d - j0; ++m) deg[static_cast<std::size_t>(j0 + 2 * m)].push_back({sid, j0, m});
        }
    }
    for (int j = 0; j <= 2 * d; ++j) {
        const auto &slots = deg[static_cast<std::size_t>(j)];
        std::map<Bidegree, Subspace> pieces;
        if (!slots.empty()) pieces.emplace(Bidegree{j / 2, j / 2}, Subspace::full(slots.size()));
        s.cohomology.emplace_back(slots.size(), j, std::move(pieces));
    }
    for (int j = 0; j <= 2 * d; ++j) {
        const auto &a = deg[static_cast<std::size_t>(j)];
        const auto &b = deg[static_cast<std::size_t>(2 * d - j)];
        QiMatrix p(a.size(), b.size());
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < b.size(); ++y)
                if (a[x].string == b[y].string) p(x, y) = constant[a[x].string];
        s.pairing.push_back(std::move(p));
    }
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<QiMatrix> maps;
        for (int j = 0; j + 2 <= 2 * d; ++j) {
            const auto &src = deg[static_cast<std::size_t>(j)];
            const auto &dst = deg[static_cast<std::size_t>(j + 2)];
            QiMatrix a(dst.size(), src.size());
            for (std::size_t x = 0; x < src.size(); ++x)
                for (std::size_t y = 0; y < dst.size(); ++y)
                    if (dst[y].string == src[x].string && dst[y].m == src[x].m + 1) a(y, x) = scales[c];
            maps.push_back(std::move(a));
        }
        s.kaehler_actions.push_back(std::move(maps));
    }
    return s;
}

inline void add_sector_pair(Rng &rng, OrbifoldData &o, const std::string &id, long a, long b,
                            const std::vector<long> &scales) {
    const int d = static_cast<int>(o.n - a - b);
    if (a == b && rng.coin()) {
        o.sectors.push_back(string_sector(rng, id, id, Rational(a), d, o.kaehler_basis_size, scales));
        return;
    }
    SectorData s = string_sector(rng, id, id + "'", Rational(a), d, o.kaehler_basis_size, scales);
    SectorData partner = s;
    partner.id = id + "'";
    partner.partner = id;
    partner.age = b;
    o.sectors.push_back(std::move(s));
    o.sectors.push_back(std::move(partner));
}

/// Ages are positive integers with a + b <= n, so every skeleton satisfies
/// dim = n - i_t - i_{I(t)} and sector Poincare duality.
inline OrbifoldData random_skeleton(Rng &rng, const SkeletonOptions &opt) {
    OrbifoldData o;
    o.n = static_cast<int>(rng.uniform(opt.force_violation ? 3 : 1, opt.max_n));
    o.kaehler_basis_size = opt.kaehler_basis_size;
    std::vector<long> scales;
    for (std::size_t c = 0; c < opt.kaehler_basis_size; ++c) scales.push_back(rng.uniform(1, 3));
    SectorData u = string_sector(rng, "u", "u", Rational(0), o.n, o.kaehler_basis_size, scales);
    u.untwisted = true;
    o.sectors.push_back(std::move(u));
    const long pairs = rng.uniform(0, static_cast<long>(opt.max_pairs));
    for (long t = 0; t < pairs; ++t) {
        long a = rng.uniform(1, o.n);
        long b = opt.force_hlc ? a : rng.uniform(1, o.n);
        if (a + b > o.n) continue;
        add_sector_pair(rng, o, "t" + std::to_string(t), a, b, scales);
    }
    if (opt.force_violation) add_sector_pair(rng, o, "v", 1, 2, scales);
    return o;
}

/// Reflexive polytopes of dimension <= 3 used as seeds for random
/// GL(n, Z) images.
inline std::vector<LatticePolytope> reflexive_seeds() {
    auto P = [](int n, std::vector<std::vector<long>> vs) {
        std::vector<RationalVector> out;
        for (auto &v : vs) {
            RationalVector x;
            for (long c : v) x.emplace_back(c);
            out.push_back(std::move(x));
        }
        return LatticePolytope(n, std::move(out));
    };
    return {
        P(1, {{-1}, {1}}),
        P(2, {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}),
        P(2, {{1, 0}, {0, 1}, {-1, -1}}),
        P(2, {{2, -1}, {-1, 2}, {-1, -1}}),
        P(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
        P(2, {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}),
        P(2, {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
        P(2, {{-1, -1}, {3, -1}, {-1, 1}}),
        P(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
        P(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
        P(3, {{-1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}, {-1, 1, 1}, {1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}}),
        P(3, {{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}, {-1, -1, -1}}),
    };
}

inline LatticePolytope transform_polytope(const LatticePolytope &p, const QiMatrix &g) {
    const std::size_t n = static_cast<std::size_t>(p.dim());
    std::vector<RationalVector> out;
    for (const auto &v : p.vertices()) {
        RationalVector w(n, Rational(0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) w[r] += g(r, c).re() * v[c];
        out.push_back(std::move(w));
    }
    return {p.dim(), std::move(out)};
}

inline std::vector<RationalVector> int_vectors(std::vector<std::vector<long>> vs) {
    std::vector<RationalVector> out;
    for (auto &v : vs) {
        RationalVector x;
        for (long c : v) x.emplace_back(c);
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace orbhodge::testing
