#include "orbhodge/orbifold.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orbhodge {

void validate_action(const GroupElementAction &g) {
    if (g.order == 0) throw std::invalid_argument("group element order must be positive");
    for (auto m : g.exponents)
        if (m >= g.order)
            throw std::invalid_argument("exponent " + std::to_string(m) + " out of range for order " + std::to_string(g.order));
}

Rational age(const GroupElementAction &g) {
    validate_action(g);
    unsigned long total = std::accumulate(g.exponents.begin(), g.exponents.end(), 0UL);
    Rational a(static_cast<long>(total), static_cast<long>(g.order));
    a.canonicalize();
    return a;
}

bool is_sl(const GroupElementAction &g) { return age(g).get_den() == 1; }

GroupElementAction inverse(const GroupElementAction &g) {
    validate_action(g);
    GroupElementAction inv{g.order, {}};
    for (auto m : g.exponents) inv.exponents.push_back((g.order - m) % g.order);
    return inv;
}

std::size_t SectorData::betti(int j) const {
    if (j < 0 || j >= static_cast<int>(cohomology.size())) return 0;
    return cohomology[static_cast<std::size_t>(j)].ambient_dim();
}

std::optional<std::size_t> OrbifoldData::find(const std::string &id) const {
    for (std::size_t k = 0; k < sectors.size(); ++k)
        if (sectors[k].id == id) return k;
    return std::nullopt;
}

std::optional<std::size_t> OrbifoldData::untwisted_index() const {
    for (std::size_t k = 0; k < sectors.size(); ++k)
        if (sectors[k].untwisted) return k;
    return std::nullopt;
}

bool OrbifoldData::all_ages_integral() const {
    return std::all_of(sectors.begin(), sectors.end(), [](const SectorData &s) { return s.age.get_den() == 1; });
}

namespace {

// First shape inconsistency of a sector, if any.
std::optional<std::string> sector_shape_error(const SectorData &s, std::size_t r) {
    if (s.dim < 0) return "negative dimension";
    const int top = 2 * s.dim;
    if (s.cohomology.size() != static_cast<std::size_t>(top + 1))
        return "expected " + std::to_string(top + 1) + " cohomology degrees";
    for (int j = 0; j <= top; ++j)
        if (s.cohomology[static_cast<std::size_t>(j)].weight() != j) return "H^" + std::to_string(j) + " has the wrong weight";
    if (s.pairing.size() != static_cast<std::size_t>(top + 1))
        return "expected " + std::to_string(top + 1) + " pairing matrices";
    for (int j = 0; j <= top; ++j) {
        const QiMatrix &p = s.pairing[static_cast<std::size_t>(j)];
        if (p.rows() != s.betti(j) || p.cols() != s.betti(top - j))
            return "pairing[" + std::to_string(j) + "] must be " + std::to_string(s.betti(j)) + "x" +
                   std::to_string(s.betti(top - j));
    }
    if (s.kaehler_actions.size() != r) return "expected " + std::to_string(r) + " Kaehler actions";
    const std::size_t steps = top >= 2 ? static_cast<std::size_t>(top - 1) : 0;
    for (std::size_t c = 0; c < r; ++c) {
        if (s.kaehler_actions[c].size() != steps)
            return "Kaehler action " + std::to_string(c) + " needs " + std::to_string(steps) + " degree maps";
        for (std::size_t j = 0; j < steps; ++j) {
            const QiMatrix &a = s.kaehler_actions[c][j];
            int jj = static_cast<int>(j);
            if (a.rows() != s.betti(jj + 2) || a.cols() != s.betti(jj))
                return "Kaehler action " + std::to_string(c) + " degree " + std::to_string(j) + " must be " +
                       std::to_string(s.betti(jj + 2)) + "x" + std::to_string(s.betti(jj));
        }
    }
    return std::nullopt;
}

void require_shapes(const OrbifoldData &o) {
    for (const auto &s : o.sectors)
        if (auto err = sector_shape_error(s, o.kaehler_basis_size)) throw std::invalid_argument("sector " + s.id + ": " + *err);
    for (const auto &s : o.sectors)
        if (!o.find(s.partner)) throw std::invalid_argument("sector " + s.id + ": unknown partner " + s.partner);
}

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

Report validate_orbifold(const OrbifoldData &o) {
    Report r;
    std::size_t untwisted = 0;
    std::set<std::string> ids;
    for (const auto &s : o.sectors) {
        if (!ids.insert(s.id).second) r.fail("unique_id", s.id);
        if (s.untwisted) {
            ++untwisted;
            if (sgn(s.age) != 0 || s.partner != s.id) r.fail("untwisted", s.id + " must have age 0 and be its own partner");
        }
        if (sgn(s.age) < 0) r.fail("age[" + s.id + "]", "negative age " + to_string(s.age));
    }
    if (untwisted == 1) r.pass("untwisted");
    else r.fail("untwisted", std::to_string(untwisted) + " sectors marked untwisted");

    for (const auto &s : o.sectors) {
        const std::string tag = "[" + s.id + "]";
        auto pi = o.find(s.partner);
        if (!pi) r.fail("partner" + tag, "unknown partner " + s.partner);
        else if (o.sectors[*pi].partner != s.id) r.fail("partner" + tag, "partner of " + s.partner + " is not " + s.id);
        else r.pass("partner" + tag);

        if (auto err = sector_shape_error(s, o.kaehler_basis_size)) {
            r.fail("shape" + tag, *err);
            continue;
        }
        const int top = 2 * s.dim;
        bool hodge_ok = true;
        for (int j = 0; j <= top; ++j) {
            Report h = validate_hodge_structure(s.cohomology[static_cast<std::size_t>(j)]);
            if (!h.passed()) {
                hodge_ok = false;
                r.merge(h, "hodge" + tag + "[" + std::to_string(j) + "].");
            }
        }
        if (hodge_ok) r.pass("hodge" + tag);

        bool poincare = true;
        for (int j = 0; j <= top; ++j)
            if (s.betti(j) != s.betti(top - j)) poincare = false;
        if (poincare) r.pass("poincare" + tag);
        else r.fail("poincare" + tag, "Betti numbers are not symmetric");

        bool pairing_ok = true;
        for (int j = 0; j <= top && poincare; ++j) {
            const QiMatrix &p = s.pairing[static_cast<std::size_t>(j)];
            const QiMatrix &dual = s.pairing[static_cast<std::size_t>(top - j)];
            if (!p.is_real() || rank(p) != p.rows()) {
                pairing_ok = false;
                r.fail("pairing" + tag, "pairing in degree " + std::to_string(j) + " is degenerate or not rational");
            } else if (!(dual == transpose(p) * GaussRational(parity_sign(j)))) {
                pairing_ok = false;
                r.fail("pairing" + tag, "pairing in degrees " + std::to_string(j) + "/" + std::to_string(top - j) +
                                            " is not graded symmetric");
            }
        }
        if (pairing_ok && poincare) r.pass("pairing" + tag);

        for (std::size_t c = 0; c < o.kaehler_basis_size; ++c) {
            const std::string ctag = tag + "[" + std::to_string(c) + "]";
            bool type_ok = true, adjoint_ok = true;
            for (int j = 0; j + 2 <= top; ++j) {
                const QiMatrix &a = s.kaehler_actions[c][static_cast<std::size_t>(j)];
                if (!a.is_real()) type_ok = false;
                const auto &src = s.cohomology[static_cast<std::size_t>(j)];
                const auto &dst = s.cohomology[static_cast<std::size_t>(j + 2)];
                for (const auto &[pq, piece] : src.pieces())
                    if (!contains(dst.piece(pq.first + 1), apply(a, piece))) type_ok = false;
                const QiMatrix &back = s.kaehler_actions[c][static_cast<std::size_t>(top - j - 2)];
                if (poincare && !(transpose(a) * s.pairing[static_cast<std::size_t>(j + 2)] ==
                                  s.pairing[static_cast<std::size_t>(j)] * back))
                    adjoint_ok = false;
            }
            if (type_ok) r.pass("kaehler_type" + ctag);
            else r.fail("kaehler_type" + ctag, "action does not map H^{p,q} to H^{p+1,q+1}");
            if (adjoint_ok) r.pass("kaehler_selfadjoint" + ctag);
            else r.fail("kaehler_selfadjoint" + ctag, "action is not self-adjoint for the pairing");
        }
    }
    return r;
}

Report validate_dims(const OrbifoldData &o) {
    Report r;
    for (const auto &s : o.sectors) {
        auto pi = o.find(s.partner);
        if (!pi) {
            r.fail("dims[" + s.id + "]", "unknown partner " + s.partner);
            continue;
        }
        Rational expected = Rational(o.n) - s.age - o.sectors[*pi].age;
        std::string w = "dim=" + std::to_string(s.dim) + " n-i_t-i_I(t)=" + to_string(expected);
        if (expected == s.dim) r.pass("dims[" + s.id + "]", w);
        else r.fail("dims[" + s.id + "]", w);
    }
    return r;
}

Report hlc_check(const OrbifoldData &o) {
    Report r;
    bool all = true;
    for (const auto &s : o.sectors) {
        auto pi = o.find(s.partner);
        if (!pi) {
            r.fail("hlc[" + s.id + "]", "unknown partner " + s.partner);
            all = false;
            continue;
        }
        const auto &p = o.sectors[*pi];
        if (s.age != p.age) {
            all = false;
            r.fail("hlc[" + s.id + "]", s.id + " (age " + to_string(s.age) + ") vs " + p.id + " (age " + to_string(p.age) + ")");
        }
    }
    if (all) r.pass("hlc", std::to_string(o.sectors.size()) + " sectors");
    return r;
}

const SectorBlock *OrbifoldCohomology::find(std::size_t sector, int j) const {
    auto it = std::find_if(layout.begin(), layout.end(),
                           [&](const SectorBlock &b) { return b.sector == sector && b.j == j; });
    return it == layout.end() ? nullptr : &*it;
}

HodgeStructureData OrbifoldCohomology::degree_structure(int k) const {
    if (!bigrading) throw std::invalid_argument("degree_structure: orbifold degrees are not integral");
    const auto *b = grading.find(Rational(k));
    if (!b) return {0, k, {}};
    std::map<Bidegree, Subspace> pieces;
    for (const auto &[pq, s] : bigrading->pieces()) {
        if (pq.first + pq.second != k) continue;
        pieces.emplace(pq, Subspace::span(s.basis().block(b->offset, 0, b->dim, s.dim())));
    }
    return {b->dim, k, std::move(pieces)};
}

OrbifoldCohomology assemble_orbifold_cohomology(const OrbifoldData &o) {
    require_shapes(o);
    OrbifoldCohomology out;
    for (std::size_t t = 0; t < o.sectors.size(); ++t) {
        const auto &s = o.sectors[t];
        for (int j = 0; j <= 2 * s.dim; ++j) out.layout.push_back({t, j, Rational(j) + 2 * s.age, 0, s.betti(j)});
    }
    std::stable_sort(out.layout.begin(), out.layout.end(), [](const SectorBlock &a, const SectorBlock &b) {
        return a.degree < b.degree || (a.degree == b.degree && a.sector < b.sector);
    });
    std::vector<std::pair<Rational, std::size_t>> degree_dims;
    std::size_t offset = 0;
    for (auto &blk : out.layout) {
        blk.offset = offset;
        offset += blk.dim;
        if (degree_dims.empty() || degree_dims.back().first != blk.degree) degree_dims.emplace_back(blk.degree, 0);
        degree_dims.back().second += blk.dim;
    }
    out.grading = GradedSpace(std::move(degree_dims));
    out.integral_degrees = o.all_ages_integral();
    if (!out.integral_degrees) return out;

    std::map<Bidegree, QiMatrix> gens;
    for (const auto &blk : out.layout) {
        const auto &s = o.sectors[blk.sector];
        const int shift = static_cast<int>(s.age.get_num().get_si());
        for (const auto &[pq, piece] : s.cohomology[static_cast<std::size_t>(blk.j)].pieces()) {
            QiMatrix embedded(offset, piece.dim());
            embedded.set_block(blk.offset, 0, piece.basis());
            Bidegree key{pq.first + shift, pq.second + shift};
            auto it = gens.try_emplace(key, QiMatrix(offset, 0)).first;
            it->second = hstack(it->second, embedded);
        }
    }
    std::map<Bidegree, Subspace> pieces;
    for (auto &[pq, g] : gens) pieces.emplace(pq, Subspace::span(g));
    out.bigrading = Bigrading(offset, std::move(pieces));
    return out;
}

LefschetzOperator orbifold_lefschetz(const OrbifoldData &o, const std::vector<Rational> &coeffs) {
    if (coeffs.size() != o.kaehler_basis_size)
        throw std::invalid_argument("orbifold_lefschetz: expected " + std::to_string(o.kaehler_basis_size) + " coefficients");
    OrbifoldCohomology h = assemble_orbifold_cohomology(o);
    const std::size_t total = h.grading.total_dim();
    QiMatrix m(total, total);
    for (const auto &src : h.layout) {
        const auto &s = o.sectors[src.sector];
        const SectorBlock *dst = h.find(src.sector, src.j + 2);
        if (!dst || src.dim == 0 || dst->dim == 0) continue;
        QiMatrix action(dst->dim, src.dim);
        for (std::size_t c = 0; c < coeffs.size(); ++c)
            action += s.kaehler_actions[c][static_cast<std::size_t>(src.j)] * GaussRational(coeffs[c]);
        m.set_block(dst->offset, src.offset, action);
    }
    return {std::move(m), h.grading};
}

Report orbifold_hard_lefschetz(const OrbifoldData &o, const std::vector<Rational> &coeffs) {
    return hard_lefschetz_check(orbifold_lefschetz(o, coeffs), o.n);
}

int sector_form_sign(const Rational &k, const Rational &s) {
    auto kk = as_integer(k);
    auto ss = as_integer(s);
    if (!kk || !ss) throw std::invalid_argument("sector form sign needs integral degree and age");
    return parity_sign(*kk * (*kk - 1) / 2 + *ss);
}

namespace {

QiMatrix polarization_gram(const OrbifoldData &o, const OrbifoldCohomology &h) {
    if (!h.integral_degrees) throw std::invalid_argument("assemble_polarization: ages are not integral (not an SL orbifold)");
    const std::size_t total = h.grading.total_dim();
    QiMatrix g(total, total);
    for (const auto &a : h.layout) {
        const auto &s = o.sectors[a.sector];
        const SectorBlock *b = h.find(a.sector, 2 * s.dim - a.j);
        if (!b || a.dim == 0) continue;
        GaussRational sign(sector_form_sign(a.degree, s.age));
        g.set_block(a.offset, b->offset, s.pairing[static_cast<std::size_t>(a.j)] * sign);
    }
    return g;
}

} // namespace

BilinearFormData assemble_polarization(const OrbifoldData &o) {
    OrbifoldCohomology h = assemble_orbifold_cohomology(o);
    return {polarization_gram(o, h), parity_sign(o.n)};
}

QiMatrix polarization_block(const OrbifoldData &o, int k) {
    OrbifoldCohomology h = assemble_orbifold_cohomology(o);
    QiMatrix g = polarization_gram(o, h);
    const auto *row = h.grading.find(Rational(k));
    const auto *col = h.grading.find(Rational(2 * o.n - k));
    if (!row || !col) return QiMatrix(row ? row->dim : 0, col ? col->dim : 0);
    return g.block(row->offset, col->offset, row->dim, col->dim);
}

HodgeStructureData tate_twist(const HodgeStructureData &h, int s) {
    std::map<Bidegree, Subspace> pieces;
    for (const auto &[pq, piece] : h.pieces()) pieces.emplace(Bidegree{pq.first + s, pq.second + s}, piece);
    return {h.ambient_dim(), h.weight() + 2 * s, std::move(pieces)};
}

namespace {

// Precondition findings shared by the theorem checks; true when they hold.
bool sl_precondition(const OrbifoldData &o, Report &r) {
    if (o.all_ages_integral()) {
        r.pass("sl");
        return true;
    }
    for (const auto &s : o.sectors)
        if (s.age.get_den() != 1) r.fail("sl", "sector " + s.id + " has age " + to_string(s.age));
    return false;
}

std::string format_vector(const std::vector<GaussRational> &z) {
    std::string out;
    for (std::size_t k = 0; k < z.size(); ++k) out += (k ? "," : "") + to_string(z[k]);
    return out;
}

std::string format_vector(const std::vector<Rational> &z) {
    std::string out;
    for (std::size_t k = 0; k < z.size(); ++k) out += (k ? "," : "") + to_string(z[k]);
    return out;
}

Bigrading total_cohomology_bigrading(const OrbifoldCohomology &h, int n) {
    std::map<Bidegree, Subspace> pieces;
    for (const auto &[pq, s] : h.bigrading->pieces()) pieces.emplace(Bidegree{n - pq.second, n - pq.first}, s);
    return {h.grading.total_dim(), std::move(pieces)};
}

} // namespace

Report check_theorem_5_1(const OrbifoldData &o, const std::vector<Rational> &coeffs) {
    Report r;
    bool sl = sl_precondition(o, r);
    Report hlc = hlc_check(o);
    r.merge(hlc, "pre.");
    if (!sl || !hlc.passed()) return r;

    OrbifoldCohomology h = assemble_orbifold_cohomology(o);
    LefschetzOperator l = orbifold_lefschetz(o, coeffs);
    BilinearFormData q;
    try {
        q = assemble_polarization(o);
    } catch (const std::invalid_argument &e) {
        r.fail("form", e.what());
        return r;
    }
    const std::size_t total = h.grading.total_dim();
    for (int k = 0; k <= o.n; ++k) {
        const std::string tag = "k=" + std::to_string(k) + ".";
        r.merge(validate_hodge_structure(h.degree_structure(k)), tag + "hodge.");

        Subspace prim = primitive_subspace(l, o.n, k);
        if (prim.is_zero()) {
            r.pass(tag + "primitive", "zero");
            continue;
        }
        QiMatrix basis = real_basis(prim);
        Subspace prim_space = Subspace::span(basis);
        std::map<Bidegree, Subspace> pieces;
        for (const auto &[pq, s] : h.bigrading->pieces()) {
            if (pq.first + pq.second != k) continue;
            Subspace cut = intersect(s, prim_space);
            if (!cut.is_zero()) pieces.emplace(pq, Subspace::span(coordinates_in(basis, cut.basis())));
        }
        HodgeStructureData hs(basis.cols(), k, std::move(pieces));
        Report valid = validate_hodge_structure(hs);
        r.merge(valid, tag + "primitive_hodge.");
        if (!valid.passed()) continue;

        QiMatrix gram = transpose(basis) * q.gram() * power(l.matrix(), static_cast<unsigned>(o.n - k)) * basis;
        try {
            r.merge(check_polarization(hs, BilinearFormData(gram, parity_sign(k))), tag + "polarization.");
        } catch (const std::invalid_argument &e) {
            r.fail(tag + "form", e.what());
        }
        (void)total;
    }
    return r;
}

Report check_theorem_5_2(const OrbifoldData &o, const std::vector<Rational> &coeffs) {
    Report r;
    if (!sl_precondition(o, r)) return r;
    OrbifoldCohomology h = assemble_orbifold_cohomology(o);
    LefschetzOperator l = orbifold_lefschetz(o, coeffs);
    Bigrading i = total_cohomology_bigrading(h, o.n);

    MixedHodgeData mhs;
    try {
        mhs = mhs_from_bigrading(i);
    } catch (const std::invalid_argument &e) {
        r.fail("mhs", e.what());
        return r;
    }
    r.merge(mhs.report, "mhs.");
    if (mhs.split) r.pass("split");
    else r.fail("split", "I^{p,q} != conj I^{q,p}");

    if (check_morphism_bidegree(l.matrix(), i, -1, -1)) r.pass("bidegree", "L is a (-1,-1) morphism");
    else r.fail("bidegree", "L is not a (-1,-1) morphism");

    NilpotentOperator n(l.matrix());
    try {
        BilinearFormData q = assemble_polarization(o);
        r.merge(check_pmhs(mhs.weight, mhs.hodge, q, n, o.n), "pmhs.");
    } catch (const std::invalid_argument &e) {
        r.fail("pmhs.form", e.what());
        r.merge(check_pmhs_weight_conditions(mhs.weight, n, o.n), "pmhs.");
    }
    return r;
}

Report orbit_check_corollary_5_3(const OrbifoldData &o, const std::vector<std::vector<GaussRational>> &samples) {
    Report r;
    if (!sl_precondition(o, r)) return r;
    const std::size_t rr = o.kaehler_basis_size;

    std::vector<LefschetzOperator> ls;
    for (std::size_t j = 0; j < rr; ++j) {
        std::vector<Rational> e(rr, Rational(0));
        e[j] = 1;
        ls.push_back(orbifold_lefschetz(o, e));
        Report pre = check_theorem_5_2(o, e);
        if (pre.passed()) r.pass("pre.class[" + std::to_string(j) + "]");
        else
            for (const auto &f : pre.failures()) r.fail("pre.class[" + std::to_string(j) + "]." + f.check_id, f.witness);
    }

    for (std::size_t j = 0; j < rr; ++j)
        for (std::size_t k = j + 1; k < rr; ++k) {
            const std::string id = "commute[" + std::to_string(j) + "," + std::to_string(k) + "]";
            const QiMatrix &a = ls[j].matrix();
            const QiMatrix &b = ls[k].matrix();
            if (a * b == b * a) r.pass(id);
            else r.fail(id);
        }
    if (!r.passed()) return r;

    OrbifoldCohomology h = assemble_orbifold_cohomology(o);
    MixedHodgeData mhs = mhs_from_bigrading(total_cohomology_bigrading(h, o.n));

    std::vector<std::vector<Rational>> lambdas{std::vector<Rational>(rr, Rational(1)),
                                               std::vector<Rational>(rr, Rational(1, 2))};
    for (std::size_t j = 0; j < rr; ++j) {
        std::vector<Rational> v(rr, Rational(1));
        v[j] = 2;
        lambdas.push_back(v);
    }
    std::vector<Rational> ramp;
    for (std::size_t j = 0; j < rr; ++j) ramp.emplace_back(static_cast<long>(j + 1));
    lambdas.push_back(ramp);
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    for (const auto &lambda : lambdas) {
        QiMatrix sum(h.grading.total_dim(), h.grading.total_dim());
        for (std::size_t j = 0; j < rr; ++j) sum += ls[j].matrix() * GaussRational(lambda[j]);
        const std::string id = "weight_constancy[" + format_vector(lambda) + "]";
        if (shift_filtration(weight_filtration(NilpotentOperator(sum)), -o.n) == mhs.weight) r.pass(id);
        else r.fail(id, "W(sum lambda_j L_j)[-n] differs from the bigrading weight filtration");
    }

    BilinearFormData q;
    try {
        q = assemble_polarization(o);
    } catch (const std::invalid_argument &e) {
        r.fail("form", e.what());
        return r;
    }
    OrbitPoint pt;
    for (const auto &l : ls) pt.operators.emplace_back(l.matrix());
    for (const auto &z : samples) {
        if (z.size() != rr)
            throw std::invalid_argument("orbit sample has " + std::to_string(z.size()) + " coordinates, expected " +
                                        std::to_string(rr));
        pt.coefficients = z;
        r.merge(check_orbit_polarized_at(mhs.hodge, pt, o.n, q), "sample[" + format_vector(z) + "].");
    }
    return r;
}

} // namespace orbhodge
