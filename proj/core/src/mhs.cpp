#include "orbhodge/mhs.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace orbhodge {

NilpotentOperator::NilpotentOperator(QiMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_square()) throw std::invalid_argument("nilpotent operator: matrix is not square");
    if (!matrix_.is_real()) throw std::invalid_argument("nilpotent operator: matrix must be rational");
    QiMatrix p = QiMatrix::identity(matrix_.rows());
    while (!p.is_zero()) {
        if (index_ >= matrix_.rows()) throw std::invalid_argument("nilpotent operator: matrix is not nilpotent");
        p = p * matrix_;
        ++index_;
    }
}

std::vector<JordanChain> jordan_chains(const NilpotentOperator &n) {
    const QiMatrix &nm = n.matrix();
    const unsigned m = n.nilpotency_index();
    std::vector<Subspace> ker;
    for (unsigned j = 0; j <= m; ++j) ker.push_back(kernel(power(nm, j)));

    std::vector<JordanChain> chains;
    for (unsigned s = m; s >= 1; --s) {
        // Vectors already accounted for at height s: K_{s-1} plus the
        // images of longer chains that pass through this level.
        Subspace base = ker[s - 1];
        for (const auto &c : chains) base = sum(base, Subspace::span(power(nm, c.length - s) * c.top));
        QiMatrix tops = complement_basis(ker[s].basis(), base);
        for (std::size_t c = 0; c < tops.cols(); ++c) chains.push_back({tops.column(c), s});
    }
    return chains;
}

Report weight_filtration_properties(const QiMatrix &n, const IncreasingFiltration &w) {
    Report r;
    for (int l = w.first() - 1; l <= w.last() + 1; ++l) {
        if (!contains(w[l - 2], apply(n, w[l])))
            r.fail("lowers_weight", "N(W_" + std::to_string(l) + ") not in W_" + std::to_string(l - 2));
    }
    int reach = std::max(std::abs(w.first()), std::abs(w.last())) + 1;
    for (int l = 1; l <= reach; ++l) {
        std::size_t up = w[l].dim() - w[l - 1].dim();
        std::size_t down = w[-l].dim() - w[-l - 1].dim();
        std::string id = "gr_iso[l=" + std::to_string(l) + "]";
        if (up != down) {
            r.fail(id, "dim gr_" + std::to_string(l) + "=" + std::to_string(up) + " dim gr_" + std::to_string(-l) + "=" +
                           std::to_string(down));
            continue;
        }
        if (up == 0) continue;
        QiMatrix u = complement_basis(w[l].basis(), w[l - 1]);
        QiMatrix img = power(n, static_cast<unsigned>(l)) * u;
        Subspace below = w[-l - 1];
        bool lands = w[-l].contains_vectors(img);
        bool injective = rank(hstack(img, below.basis())) == u.cols() + below.dim();
        if (!lands || !injective) r.fail(id, "N^" + std::to_string(l) + " is not bijective on graded pieces");
    }
    if (r.passed()) r.pass("weight_filtration");
    return r;
}

IncreasingFiltration weight_filtration(const NilpotentOperator &n) {
    const std::size_t dim = n.dim();
    const int top = std::max(0, static_cast<int>(n.nilpotency_index()) - 1);
    std::map<int, QiMatrix> by_weight;
    for (const auto &c : jordan_chains(n)) {
        QiMatrix v = c.top;
        for (unsigned j = 0; j < c.length; ++j) {
            int weight = static_cast<int>(c.length) - 1 - 2 * static_cast<int>(j);
            auto it = by_weight.try_emplace(weight, QiMatrix(dim, 0)).first;
            it->second = hstack(it->second, v);
            v = n.matrix() * v;
        }
    }
    std::vector<Subspace> steps;
    QiMatrix acc(dim, 0);
    for (int l = -top; l <= top; ++l) {
        if (auto it = by_weight.find(l); it != by_weight.end()) acc = hstack(acc, it->second);
        steps.push_back(Subspace::span(acc));
    }
    IncreasingFiltration w(dim, -top, std::move(steps));
    if (!weight_filtration_properties(n.matrix(), w).passed())
        throw std::logic_error("weight_filtration: characterizing properties violated");
    return w;
}

IncreasingFiltration shift_filtration(const IncreasingFiltration &w, int k) {
    std::vector<Subspace> steps;
    for (int l = w.first(); l <= w.last(); ++l) steps.push_back(w[l]);
    return {w.ambient_dim(), w.first() - k, std::move(steps)};
}

Bigrading::Bigrading(std::size_t ambient_dim, std::map<Bidegree, Subspace> pieces)
    : ambient_dim_(ambient_dim), pieces_(std::move(pieces)) {
    for (const auto &[pq, s] : pieces_)
        if (s.ambient_dim() != ambient_dim_) throw DimensionError("bigrading piece " + to_string(pq) + " has wrong ambient dimension");
}

Subspace Bigrading::piece(int p, int q) const {
    auto it = pieces_.find({p, q});
    return it == pieces_.end() ? Subspace::zero(ambient_dim_) : it->second;
}

GradedPiece graded_piece(const IncreasingFiltration &w, const DecreasingFiltration &f, int l) {
    Subspace wl = w[l];
    Subspace below = w[l - 1];
    if (!is_conjugation_stable(wl) || !is_conjugation_stable(below))
        throw std::invalid_argument("graded_piece: weight filtration is not defined over Q at index " + std::to_string(l));
    QiMatrix u = complement_basis(real_basis(wl), below);
    QiMatrix frame = hstack(u, below.basis());
    auto project = [&](const Subspace &s) {
        QiMatrix x = coordinates_in(frame, s.basis());
        return Subspace::span(x.block(0, 0, u.cols(), x.cols()));
    };
    std::vector<Subspace> steps;
    for (int p = f.first(); p <= f.last(); ++p) steps.push_back(project(intersect(f[p], wl)));
    DecreasingFiltration induced(u.cols(), f.first(), std::move(steps));
    return {u, pieces_from_filtration(induced, l)};
}

Report check_mhs(const IncreasingFiltration &w, const DecreasingFiltration &f) {
    Report r;
    for (int l = w.first(); l <= w.last() + 1; ++l) {
        if (w[l].dim() == w[l - 1].dim()) continue;
        std::string prefix = "gr[" + std::to_string(l) + "].";
        try {
            r.merge(validate_hodge_structure(graded_piece(w, f, l).hodge), prefix);
        } catch (const std::invalid_argument &e) {
            r.fail(prefix + "real", e.what());
        }
    }
    return r;
}

MixedHodgeData mhs_from_bigrading(const Bigrading &i) {
    const std::size_t dim = i.ambient_dim();
    std::vector<Subspace> all;
    for (const auto &[pq, s] : i.pieces()) all.push_back(s);
    Subspace total = Subspace::zero(dim);
    for (const auto &s : all) total = sum(total, s);
    if (!is_direct_sum(all) || !total.is_full())
        throw std::invalid_argument("mhs_from_bigrading: pieces do not form a direct sum decomposition");

    MixedHodgeData out;
    if (i.pieces().empty()) {
        out.weight = IncreasingFiltration(dim, 0, {Subspace::zero(dim)});
        out.hodge = DecreasingFiltration(dim, 0, {Subspace::zero(dim)});
        out.split = true;
        return out;
    }
    constexpr int hi = std::numeric_limits<int>::max();
    constexpr int lo = std::numeric_limits<int>::min();
    int wmin = hi, wmax = lo, pmin = hi, pmax = lo;
    for (const auto &[pq, s] : i.pieces()) {
        wmin = std::min(wmin, pq.first + pq.second);
        wmax = std::max(wmax, pq.first + pq.second);
        pmin = std::min(pmin, pq.first);
        pmax = std::max(pmax, pq.first);
    }
    std::vector<Subspace> wsteps, fsteps;
    for (int l = wmin; l <= wmax; ++l) {
        Subspace s = Subspace::zero(dim);
        for (const auto &[pq, piece] : i.pieces())
            if (pq.first + pq.second <= l) s = sum(s, piece);
        wsteps.push_back(std::move(s));
    }
    for (int a = pmin; a <= pmax; ++a) {
        Subspace s = Subspace::zero(dim);
        for (const auto &[pq, piece] : i.pieces())
            if (pq.first >= a) s = sum(s, piece);
        fsteps.push_back(std::move(s));
    }
    out.weight = IncreasingFiltration(dim, wmin, std::move(wsteps));
    out.hodge = DecreasingFiltration(dim, pmin, std::move(fsteps));

    for (const auto &[pq, s] : i.pieces()) {
        auto [p, q] = pq;
        Subspace correction = Subspace::zero(dim);
        for (const auto &[ab, piece] : i.pieces())
            if (ab.first < p && ab.second < q) correction = sum(correction, piece);
        std::string id = "congruence" + to_string(pq);
        if (sum(s, correction) == sum(conjugate(i.piece(q, p)), correction)) out.report.pass(id);
        else out.report.fail(id, "I" + to_string(pq) + " != conj I" + to_string(Bidegree{q, p}) + " modulo lower terms");
    }
    out.report.merge(check_mhs(out.weight, out.hodge));
    out.split = is_split_over_R(i);
    return out;
}

bool is_split_over_R(const Bigrading &i) {
    for (const auto &[pq, s] : i.pieces())
        if (!(conjugate(s) == i.piece(pq.second, pq.first))) return false;
    return true;
}

bool check_morphism_bidegree(const QiMatrix &t, const Bigrading &i, int a, int b) {
    if (!t.is_square() || t.rows() != i.ambient_dim()) throw DimensionError("check_morphism_bidegree: shape mismatch");
    for (const auto &[pq, s] : i.pieces())
        if (!contains(i.piece(pq.first + a, pq.second + b), apply(t, s))) return false;
    return true;
}

Report check_pmhs_weight_conditions(const IncreasingFiltration &w, const NilpotentOperator &n, int k) {
    const QiMatrix &nm = n.matrix();
    Report r;
    if (k >= 0 && power(nm, static_cast<unsigned>(k + 1)).is_zero()) r.pass("item1", "N^" + std::to_string(k + 1) + "=0");
    else r.fail("item1", "N^" + std::to_string(k + 1) + "!=0");

    IncreasingFiltration expected = shift_filtration(weight_filtration(n), -k);
    if (w == expected) {
        r.pass("item2");
    } else {
        std::string witness;
        for (int l = std::min(w.first(), expected.first()); l <= std::max(w.last(), expected.last()); ++l)
            if (!(w[l] == expected[l])) {
                witness = "W_" + std::to_string(l) + " has dim " + std::to_string(w[l].dim()) + ", W(N)[-k]_" +
                          std::to_string(l) + " has dim " + std::to_string(expected[l].dim());
                break;
            }
        r.fail("item2", witness.empty() ? "W != W(N)[-k]" : witness);
    }
    return r;
}

Report check_pmhs(const IncreasingFiltration &w, const DecreasingFiltration &f, const BilinearFormData &q,
                  const NilpotentOperator &n, int k) {
    const std::size_t dim = n.dim();
    if (w.ambient_dim() != dim || f.ambient_dim() != dim || q.dim() != dim)
        throw DimensionError("check_pmhs: dimensions of W, F, Q and N differ");
    if (q.symmetry_sign() != (k % 2 == 0 ? 1 : -1))
        throw std::invalid_argument("check_pmhs: Q must be (-1)^" + std::to_string(k) + "-symmetric");
    const QiMatrix &nm = n.matrix();
    const QiMatrix &g = q.gram();
    Report r;

    r.merge(check_mhs(w, f), "mhs.");

    if ((transpose(nm) * g + g * nm).is_zero()) r.pass("infinitesimal_isometry");
    else r.fail("infinitesimal_isometry", "Q(Nu,v) + Q(u,Nv) != 0");

    bool lowers_f = true;
    for (int p = f.first(); p <= f.last() + 1; ++p)
        if (!contains(f[p - 1], apply(nm, f[p]))) {
            lowers_f = false;
            r.fail("lowers_hodge", "N(F^" + std::to_string(p) + ") not in F^" + std::to_string(p - 1));
        }
    if (lowers_f) r.pass("lowers_hodge");

    r.merge(check_pmhs_weight_conditions(w, n, k));

    bool orth = true;
    for (int a = k - f.last() + 1; a <= f.last(); ++a) {
        if (!q.pair(f[a].basis(), f[k - a + 1].basis()).is_zero()) {
            orth = false;
            r.fail("item3", "Q(F^" + std::to_string(a) + ", F^" + std::to_string(k - a + 1) + ") != 0");
        }
    }
    if (orth) r.pass("item3");

    for (int l = 0; k + l <= w.last() + 1; ++l) {
        if (w[k + l].dim() == w[k + l - 1].dim()) continue;
        std::string id = "item4[l=" + std::to_string(l) + "]";
        GradedPiece gr;
        try {
            gr = graded_piece(w, f, k + l);
        } catch (const std::invalid_argument &e) {
            r.fail(id, e.what());
            continue;
        }
        // Kernel of N^{l+1}: gr_{k+l} -> gr_{k-l-2}, on representatives.
        Subspace reps = Subspace::span(gr.basis);
        Subspace prim = intersect(reps, preimage(power(nm, static_cast<unsigned>(l + 1)), w[k - l - 3]));
        if (prim.is_zero()) {
            r.pass(id, "primitive part is zero");
            continue;
        }
        QiMatrix prim_basis = real_basis(prim);
        QiMatrix in_gr = coordinates_in(gr.basis, prim_basis);
        Subspace prim_gr = Subspace::span(in_gr);
        std::map<Bidegree, Subspace> pieces;
        for (const auto &[pq, s] : gr.hodge.pieces()) {
            Subspace cut = intersect(s, prim_gr);
            if (!cut.is_zero()) pieces.emplace(pq, Subspace::span(coordinates_in(in_gr, cut.basis())));
        }
        HodgeStructureData hs(prim_basis.cols(), k + l, std::move(pieces));
        Report valid = validate_hodge_structure(hs);
        r.merge(valid, id + ".hodge.");
        if (!valid.passed()) continue;
        QiMatrix gram = transpose(prim_basis) * g * power(nm, static_cast<unsigned>(l)) * prim_basis;
        int sign = (k + l) % 2 == 0 ? 1 : -1;
        try {
            r.merge(check_polarization(hs, BilinearFormData(gram, sign)), id + ".");
        } catch (const std::invalid_argument &e) {
            r.fail(id + ".form", e.what());
        }
    }
    return r;
}

DecreasingFiltration evaluate_orbit(const DecreasingFiltration &f, const OrbitPoint &pt) {
    if (pt.coefficients.size() != pt.operators.size())
        throw std::invalid_argument("evaluate_orbit: " + std::to_string(pt.coefficients.size()) + " coefficients for " +
                                    std::to_string(pt.operators.size()) + " operators");
    const std::size_t dim = f.ambient_dim();
    QiMatrix x(dim, dim);
    for (std::size_t j = 0; j < pt.operators.size(); ++j) {
        const QiMatrix &a = pt.operators[j].matrix();
        if (a.rows() != dim) throw DimensionError("evaluate_orbit: operator dimension mismatch");
        for (std::size_t k = j + 1; k < pt.operators.size(); ++k) {
            const QiMatrix &b = pt.operators[k].matrix();
            if (!(a * b == b * a))
                throw std::invalid_argument("evaluate_orbit: operators " + std::to_string(j) + " and " + std::to_string(k) +
                                            " do not commute");
        }
        x += a * pt.coefficients[j];
    }
    return transform(exp_nilpotent(x), f);
}

Report check_orbit_polarized_at(const DecreasingFiltration &f, const OrbitPoint &pt, int k, const BilinearFormData &q) {
    Report r;
    for (std::size_t j = 0; j < pt.coefficients.size(); ++j)
        if (sgn(pt.coefficients[j].im()) <= 0)
            r.caveat("upper_half_plane", "Im z_" + std::to_string(j + 1) + " = " + to_string(pt.coefficients[j].im()) + " <= 0");
    HodgeStructureData hs = pieces_from_filtration(evaluate_orbit(f, pt), k);
    Report valid = validate_hodge_structure(hs);
    r.merge(valid, "hodge.");
    if (valid.passed()) r.merge(check_polarization(hs, q), "polarization.");
    return r;
}

std::vector<GaussRational> default_sample_values() {
    return {GaussRational(0, 1), GaussRational(0, 2), GaussRational(1, 1), GaussRational(0, Rational(1, 2)),
            GaussRational(0, 3)};
}

std::vector<std::vector<GaussRational>> default_orbit_samples(std::size_t r) {
    std::vector<std::vector<GaussRational>> out{{}};
    const auto values = default_sample_values();
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<std::vector<GaussRational>> next;
        for (const auto &prefix : out)
            for (const auto &v : values) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace orbhodge
