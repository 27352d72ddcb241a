#include "orbhodge/hodge.hpp"

#include <algorithm>
#include <sstream>

namespace orbhodge {

std::string to_string(const Bidegree &pq) {
    return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
}

HodgeStructureData::HodgeStructureData(std::size_t ambient_dim, int weight, std::map<Bidegree, Subspace> pieces)
    : ambient_dim_(ambient_dim), weight_(weight), pieces_(std::move(pieces)) {
    for (const auto &[pq, s] : pieces_) {
        if (pq.first + pq.second != weight_)
            throw std::invalid_argument("piece " + to_string(pq) + " does not have weight " + std::to_string(weight_));
        if (s.ambient_dim() != ambient_dim_)
            throw std::invalid_argument("piece " + to_string(pq) + " lives in the wrong ambient space");
    }
}

Subspace HodgeStructureData::piece(int p) const {
    auto it = pieces_.find({p, weight_ - p});
    return it == pieces_.end() ? Subspace::zero(ambient_dim_) : it->second;
}

std::size_t HodgeStructureData::hodge_number(int p, int q) const {
    if (p + q != weight_) return 0;
    return piece(p).dim();
}

BilinearFormData::BilinearFormData(QiMatrix gram, int symmetry_sign) : gram_(std::move(gram)), sign_(symmetry_sign) {
    if (!gram_.is_square()) throw std::invalid_argument("bilinear form: gram matrix is not square");
    if (!gram_.is_real()) throw std::invalid_argument("bilinear form: gram matrix must be rational");
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("bilinear form: symmetry sign must be +1 or -1");
    if (!(transpose(gram_) == gram_ * GaussRational(sign_)))
        throw std::invalid_argument(sign_ == 1 ? "bilinear form: gram matrix is not symmetric"
                                               : "bilinear form: gram matrix is not antisymmetric");
    if (rank(gram_) != gram_.rows()) throw std::invalid_argument("bilinear form: degenerate");
}

QiMatrix BilinearFormData::pair(const QiMatrix &a, const QiMatrix &b) const { return transpose(a) * gram_ * b; }

Report validate_hodge_structure(const HodgeStructureData &h) {
    Report r;
    std::vector<Subspace> pieces;
    for (const auto &[pq, s] : h.pieces()) pieces.push_back(s);

    bool direct = is_direct_sum(pieces);
    if (direct) r.pass("direct_sum");
    else r.fail("direct_sum", "pieces are not independent");

    Subspace total = Subspace::zero(h.ambient_dim());
    for (const auto &s : pieces) total = sum(total, s);
    if (total.is_full()) r.pass("spans");
    else r.fail("spans", "sum has dim " + std::to_string(total.dim()) + " of " + std::to_string(h.ambient_dim()));

    for (const auto &[pq, s] : h.pieces()) {
        Bidegree qp{pq.second, pq.first};
        std::string id = "conjugation" + to_string(pq);
        if (conjugate(s) == h.piece(pq.second)) r.pass(id);
        else r.fail(id, "conj H" + to_string(pq) + " != H" + to_string(qp));
    }
    return r;
}

DecreasingFiltration filtration_from_pieces(const HodgeStructureData &h) {
    if (!validate_hodge_structure(h).passed()) throw std::invalid_argument("filtration_from_pieces: invalid Hodge structure");
    if (h.pieces().empty()) return {h.ambient_dim(), h.weight(), {Subspace::zero(h.ambient_dim())}};
    int lo = h.pieces().begin()->first.first;
    int hi = h.pieces().rbegin()->first.first;
    std::vector<Subspace> steps;
    for (int p = lo; p <= hi; ++p) {
        Subspace f = Subspace::zero(h.ambient_dim());
        for (int a = p; a <= hi; ++a) f = sum(f, h.piece(a));
        steps.push_back(std::move(f));
    }
    return {h.ambient_dim(), lo, std::move(steps)};
}

HodgeStructureData pieces_from_filtration(const DecreasingFiltration &f, int k) {
    std::map<Bidegree, Subspace> pieces;
    for (int a = k - f.last(); a <= f.last(); ++a) {
        Subspace s = intersect(f[a], conjugate(f[k - a]));
        if (!s.is_zero()) pieces.emplace(Bidegree{a, k - a}, std::move(s));
    }
    return {f.ambient_dim(), k, std::move(pieces)};
}

namespace {

// Concatenated piece bases with the Weil eigenvalue of each column.
std::pair<QiMatrix, std::vector<GaussRational>> adapted_basis(const HodgeStructureData &h) {
    QiMatrix b(h.ambient_dim(), 0);
    std::vector<GaussRational> eig;
    for (const auto &[pq, s] : h.pieces()) {
        b = hstack(b, s.basis());
        eig.insert(eig.end(), s.dim(), i_power(pq.first - pq.second));
    }
    return {std::move(b), std::move(eig)};
}

} // namespace

QiMatrix weil_operator(const HodgeStructureData &h) {
    if (!validate_hodge_structure(h).passed()) throw std::invalid_argument("weil_operator: invalid Hodge structure");
    auto [b, eig] = adapted_basis(h);
    QiMatrix cb = b;
    for (std::size_t c = 0; c < cb.cols(); ++c)
        for (std::size_t r = 0; r < cb.rows(); ++r) cb(r, c) *= eig[c];
    return cb * *inverse(b);
}

Report check_polarization(const HodgeStructureData &h, const BilinearFormData &q) {
    int expected = h.weight() % 2 == 0 ? 1 : -1;
    if (q.symmetry_sign() != expected)
        throw std::invalid_argument("check_polarization: form must be " +
                                    std::string(expected == 1 ? "symmetric" : "antisymmetric") + " in weight " +
                                    std::to_string(h.weight()));
    if (q.dim() != h.ambient_dim()) throw DimensionError("check_polarization: form and structure dimensions differ");

    Report r;
    const int k = h.weight();
    bool orthogonal = true;
    for (const auto &[pq, s] : h.pieces())
        for (const auto &[pq2, s2] : h.pieces()) {
            if (pq.first + pq2.first == k) continue;
            if (!q.pair(s.basis(), s2.basis()).is_zero()) {
                orthogonal = false;
                r.fail("orthogonality", "Q(H" + to_string(pq) + ", H" + to_string(pq2) + ") != 0");
            }
        }
    if (orthogonal) r.pass("orthogonality");

    auto [b, eig] = adapted_basis(h);
    if (b.cols() != h.ambient_dim() || rank(b) != b.cols()) {
        r.fail("positivity", "pieces do not form a basis");
        return r;
    }
    QiMatrix cb = b;
    for (std::size_t c = 0; c < cb.cols(); ++c)
        for (std::size_t row = 0; row < cb.rows(); ++row) cb(row, c) *= eig[c];
    // Q(Cv, conj v) = x^T M conj(x) for v = B x; positivity of this form is
    // positive definiteness of the Hermitian matrix M.
    QiMatrix m = q.pair(cb, conjugate(b));
    if (!is_hermitian(m)) {
        r.fail("positivity", "Q(Cv, conj v) is not a Hermitian form");
        return r;
    }
    if (auto minor = first_nonpositive_leading_minor(m)) r.fail("positivity", "leading minor " + std::to_string(*minor) + " <= 0");
    else r.pass("positivity");
    return r;
}

HodgeStructureData restrict_to(const HodgeStructureData &h, const QiMatrix &basis) {
    if (!basis.is_real()) throw std::invalid_argument("restrict_to: basis must be rational");
    std::map<Bidegree, Subspace> pieces;
    for (const auto &[pq, s] : h.pieces()) pieces.emplace(pq, Subspace::span(coordinates_in(basis, s.basis())));
    return {basis.cols(), h.weight(), std::move(pieces)};
}

GradedSpace::GradedSpace(std::vector<std::pair<Rational, std::size_t>> degree_dims) {
    std::sort(degree_dims.begin(), degree_dims.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    for (const auto &[deg, dim] : degree_dims) {
        if (!blocks_.empty() && blocks_.back().degree == deg)
            throw std::invalid_argument("graded space: duplicate degree " + to_string(deg));
        blocks_.push_back({deg, total_, dim});
        total_ += dim;
    }
}

const GradedBlock *GradedSpace::find(const Rational &degree) const {
    auto it = std::find_if(blocks_.begin(), blocks_.end(), [&](const GradedBlock &b) { return b.degree == degree; });
    return it == blocks_.end() ? nullptr : &*it;
}

std::size_t GradedSpace::dim_of(const Rational &degree) const {
    const auto *b = find(degree);
    return b ? b->dim : 0;
}

Subspace GradedSpace::block_subspace(const Rational &degree) const {
    const auto *b = find(degree);
    if (!b) return Subspace::zero(total_);
    return Subspace::coordinate(total_, b->offset, b->dim);
}

LefschetzOperator::LefschetzOperator(QiMatrix matrix, GradedSpace grading)
    : matrix_(std::move(matrix)), grading_(std::move(grading)) {
    const std::size_t n = grading_.total_dim();
    if (matrix_.rows() != n || matrix_.cols() != n) throw std::invalid_argument("Lefschetz operator: shape does not match grading");
    if (!matrix_.is_real()) throw std::invalid_argument("Lefschetz operator: matrix must be rational");
    for (const auto &src : grading_.blocks())
        for (const auto &dst : grading_.blocks()) {
            if (dst.degree == src.degree + 2) continue;
            if (!matrix_.block(dst.offset, src.offset, dst.dim, src.dim).is_zero())
                throw std::invalid_argument("Lefschetz operator: maps degree " + to_string(src.degree) + " into degree " +
                                            to_string(dst.degree));
        }
}

QiMatrix LefschetzOperator::block_power(unsigned p, const Rational &from) const {
    const auto *src = grading_.find(from);
    const auto *dst = grading_.find(from + 2 * static_cast<long>(p));
    std::size_t rows = dst ? dst->dim : 0;
    std::size_t cols = src ? src->dim : 0;
    if (rows == 0 || cols == 0) return QiMatrix(rows, cols);
    return power(matrix_, p).block(dst->offset, src->offset, rows, cols);
}

Report hard_lefschetz_check(const LefschetzOperator &l, int n) {
    Report r;
    const Rational center(n);
    std::vector<Rational> offsets;
    for (const auto &b : l.grading().blocks()) {
        if (b.dim == 0 || b.degree == center) continue;
        Rational p = b.degree < center ? center - b.degree : b.degree - center;
        if (std::find(offsets.begin(), offsets.end(), p) == offsets.end()) offsets.push_back(p);
    }
    std::sort(offsets.begin(), offsets.end());
    for (const auto &p : offsets) {
        std::string id = "hard_lefschetz[p=" + to_string(p) + "]";
        std::size_t src = l.grading().dim_of(center - p);
        std::size_t dst = l.grading().dim_of(center + p);
        auto ip = as_integer(p);
        if (!ip) {
            r.fail(id, "degrees " + to_string(center - p) + " / " + to_string(center + p) +
                           " are not an integral number of steps from the middle");
            continue;
        }
        std::size_t rk = src == 0 || dst == 0 ? 0 : rank(l.block_power(static_cast<unsigned>(*ip), center - p));
        std::ostringstream w;
        w << "dim H^" << to_string(center - p) << "=" << src << " dim H^" << to_string(center + p) << "=" << dst
          << " rank=" << rk;
        if (src == dst && rk == src) {
            r.pass(id, w.str());
        } else {
            w << " defect=" << std::max(src, dst) - rk;
            r.fail(id, w.str());
        }
    }
    if (offsets.empty()) r.pass("hard_lefschetz", "concentrated in the middle degree");
    return r;
}

Subspace primitive_subspace(const LefschetzOperator &l, int n, int p) {
    const std::size_t total = l.grading().total_dim();
    if (p < 0 || p > n) return Subspace::zero(total);
    const auto *b = l.grading().find(Rational(p));
    if (!b || b->dim == 0) return Subspace::zero(total);
    QiMatrix lp = power(l.matrix(), static_cast<unsigned>(n - p + 1)).block(0, b->offset, total, b->dim);
    Subspace local = kernel(lp);
    QiMatrix embedded(total, local.dim());
    embedded.set_block(b->offset, 0, local.basis());
    return Subspace::span(embedded);
}

std::map<int, std::vector<std::pair<int, Subspace>>> lefschetz_decomposition(const LefschetzOperator &l, int n) {
    Report hl = hard_lefschetz_check(l, n);
    if (!hl.passed()) throw LefschetzError("lefschetz_decomposition: hard Lefschetz fails (" + hl.failures().front().check_id + ")");
    std::map<int, std::vector<std::pair<int, Subspace>>> out;
    for (int k = 0; k <= n; ++k) {
        auto &summands = out[k];
        Subspace total = Subspace::zero(l.grading().total_dim());
        std::size_t dims = 0;
        for (int p = 0; 2 * p <= k; ++p) {
            Subspace s = apply(power(l.matrix(), static_cast<unsigned>(p)), primitive_subspace(l, n, k - 2 * p));
            if (s.is_zero()) continue;
            dims += s.dim();
            total = sum(total, s);
            summands.emplace_back(p, std::move(s));
        }
        if (total.dim() != dims || !(total == l.grading().block_subspace(Rational(k))))
            throw LefschetzError("lefschetz_decomposition: summands do not reconstruct degree " + std::to_string(k));
    }
    return out;
}

} // namespace orbhodge
