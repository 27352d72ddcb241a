#include "generators.hpp"

#include <gtest/gtest.h>

using namespace orbhodge;
using namespace orbhodge::testing;

namespace {

const GaussRational I = GaussRational::imaginary_unit();

bool failed_with_prefix(const Report &r, const std::string &prefix) {
    for (const auto &f : r.failures())
        if (f.check_id.rfind(prefix, 0) == 0) return true;
    return false;
}

HodgeStructureData torus() {
    return {2, 1, {{{1, 0}, Subspace::span(QiMatrix::vector({1, I}))}, {{0, 1}, Subspace::span(QiMatrix::vector({1, -I}))}}};
}

HodgeStructureData trivial(std::size_t d, int k = 0) { return {d, k, {{{k / 2, k / 2}, Subspace::full(d)}}}; }

LefschetzOperator p2_model() {
    QiMatrix m(3, 3);
    m(1, 0) = 1;
    m(2, 1) = 1;
    return {m, GradedSpace({{Rational(0), 1}, {Rational(2), 1}, {Rational(4), 1}})};
}

LefschetzOperator p1xp1_model() {
    QiMatrix m(4, 4);
    m(1, 0) = 1;
    m(2, 0) = 1;
    m(3, 1) = 1;
    m(3, 2) = 1;
    return {m, GradedSpace({{Rational(0), 1}, {Rational(2), 2}, {Rational(4), 1}})};
}

/// Direct sum of strings v, Lv, ..., the a-th starting in degree starts[a].
LefschetzOperator string_model(const std::vector<unsigned> &lengths, const std::vector<int> &starts) {
    std::map<int, std::size_t> dims;
    for (std::size_t a = 0; a < lengths.size(); ++a)
        for (unsigned m = 0; m < lengths[a]; ++m) ++dims[starts[a] + 2 * static_cast<int>(m)];
    std::vector<std::pair<Rational, std::size_t>> dd;
    for (auto [d, c] : dims) dd.emplace_back(Rational(d), c);
    GradedSpace g(dd);
    std::map<int, std::size_t> used;
    std::vector<std::vector<std::size_t>> coord(lengths.size());
    for (std::size_t a = 0; a < lengths.size(); ++a)
        for (unsigned m = 0; m < lengths[a]; ++m) {
            int d = starts[a] + 2 * static_cast<int>(m);
            coord[a].push_back(g.find(Rational(d))->offset + used[d]++);
        }
    QiMatrix mat(g.total_dim(), g.total_dim());
    for (std::size_t a = 0; a < lengths.size(); ++a)
        for (unsigned m = 0; m + 1 < lengths[a]; ++m) mat(coord[a][m + 1], coord[a][m]) = 1;
    return {mat, g};
}

} // namespace

TEST(ValidateHodge, Examples) {
    EXPECT_TRUE(validate_hodge_structure(torus()).passed());
    EXPECT_TRUE(validate_hodge_structure(trivial(3)).passed());
    HodgeStructureData bad(2, 1, {{{1, 0}, Subspace::coordinate(2, 0, 1)}, {{0, 1}, Subspace::coordinate(2, 1, 1)}});
    Report r = validate_hodge_structure(bad);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(failed_with_prefix(r, "conjugation"));
    EXPECT_THROW(HodgeStructureData(2, 1, {{{1, 1}, Subspace::full(2)}}), std::invalid_argument);
}

TEST(ValidateHodge, DetectsMissingAndOverlap) {
    HodgeStructureData partial(2, 0, {{{0, 0}, Subspace::coordinate(2, 0, 1)}});
    EXPECT_TRUE(validate_hodge_structure(partial).failed("spans"));
    HodgeStructureData overlap(2, 2, {{{2, 0}, Subspace::span(QiMatrix::vector({1, I}))},
                                      {{0, 2}, Subspace::span(QiMatrix::vector({1, -I}))},
                                      {{1, 1}, Subspace::coordinate(2, 0, 1)}});
    EXPECT_TRUE(validate_hodge_structure(overlap).failed("direct_sum"));
}

TEST(Filtration, FromPieces) {
    auto f = filtration_from_pieces(torus());
    EXPECT_EQ(f[1], Subspace::span(QiMatrix::vector({1, I})));
    EXPECT_TRUE(f[0].is_full());
    EXPECT_TRUE(f[2].is_zero());
    auto t = filtration_from_pieces(trivial(2));
    EXPECT_TRUE(t[0].is_full());
    EXPECT_TRUE(t[1].is_zero());
    auto w2 = filtration_from_pieces(trivial(2, 2));
    EXPECT_TRUE(w2[1].is_full());
    EXPECT_TRUE(w2[2].is_zero());
}

TEST(Filtration, ToPieces) {
    auto h = pieces_from_filtration(filtration_from_pieces(torus()), 1);
    EXPECT_EQ(h.piece(1), torus().piece(1));
    EXPECT_EQ(h.piece(0), torus().piece(0));
    auto t = pieces_from_filtration(DecreasingFiltration(2, 0, {Subspace::full(2)}), 0);
    EXPECT_TRUE(t.piece(0).is_full());
    auto real_line = pieces_from_filtration(DecreasingFiltration(2, 0, {Subspace::full(2), Subspace::coordinate(2, 0, 1)}), 1);
    EXPECT_FALSE(validate_hodge_structure(real_line).passed());
}

TEST(Weil, Examples) {
    EXPECT_EQ(weil_operator(trivial(3)), QiMatrix::identity(3));
    EXPECT_EQ(weil_operator(trivial(2, 2)), QiMatrix::identity(2));
    QiMatrix c = weil_operator(torus());
    EXPECT_EQ(c * QiMatrix::vector({1, I}), QiMatrix::vector({1, I}) * I);
    EXPECT_EQ(c * QiMatrix::vector({1, -I}), QiMatrix::vector({1, -I}) * -I);
}

TEST(Polarization, Examples) {
    BilinearFormData q(QiMatrix{{0, 1}, {-1, 0}}, -1);
    EXPECT_TRUE(check_polarization(torus(), q).passed());
    EXPECT_TRUE(check_polarization(trivial(3), BilinearFormData(QiMatrix::identity(3), 1)).passed());
    BilinearFormData neg(QiMatrix{{0, -1}, {1, 0}}, -1);
    EXPECT_TRUE(check_polarization(torus(), neg).failed("positivity"));
    EXPECT_THROW(check_polarization(torus(), BilinearFormData(QiMatrix::identity(2), 1)), std::invalid_argument);
    EXPECT_THROW(BilinearFormData(QiMatrix{{1, 1}, {0, 1}}, 1), std::invalid_argument);
}

TEST(Polarization, OrthogonalityFailure) {
    // Weight 2 with H^{2,0} + H^{0,2} and H^{1,1}; a form coupling H^{1,1}
    // with H^{2,0} breaks orthogonality.
    HodgeStructureData h(3, 2, {{{2, 0}, Subspace::span(QiMatrix::vector({1, I, 0}))},
                                {{0, 2}, Subspace::span(QiMatrix::vector({1, -I, 0}))},
                                {{1, 1}, Subspace::coordinate(3, 2, 1)}});
    ASSERT_TRUE(validate_hodge_structure(h).passed());
    EXPECT_TRUE(check_polarization(h, BilinearFormData(QiMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, 1)).passed());
    EXPECT_TRUE(check_polarization(h, BilinearFormData(QiMatrix{{-1, 0, 1}, {0, -1, 0}, {1, 0, 1}}, 1)).failed("orthogonality"));
}

TEST(HardLefschetz, Examples) {
    EXPECT_TRUE(hard_lefschetz_check(p2_model(), 2).passed());
    LefschetzOperator zero(QiMatrix(3, 3), GradedSpace({{Rational(0), 1}, {Rational(2), 1}, {Rational(4), 1}}));
    EXPECT_TRUE(hard_lefschetz_check(zero, 2).failed("hard_lefschetz[p=2]"));
    LefschetzOperator odd(QiMatrix(2, 2), GradedSpace({{Rational(1), 1}, {Rational(3), 1}}));
    EXPECT_TRUE(hard_lefschetz_check(odd, 2).failed("hard_lefschetz[p=1]"));
    LefschetzOperator middle(QiMatrix(2, 2), GradedSpace({{Rational(2), 2}}));
    EXPECT_TRUE(hard_lefschetz_check(middle, 2).passed());
    EXPECT_THROW(LefschetzOperator(QiMatrix::identity(3), p2_model().grading()), std::invalid_argument);
}

TEST(Primitive, Examples) {
    auto l = p2_model();
    EXPECT_EQ(primitive_subspace(l, 2, 0), Subspace::coordinate(3, 0, 1));
    EXPECT_TRUE(primitive_subspace(l, 2, 2).is_zero());
    auto m = p1xp1_model();
    Subspace mid = primitive_subspace(m, 2, 2);
    QiMatrix anti(4, 1);
    anti(1, 0) = 1;
    anti(2, 0) = -1;
    EXPECT_EQ(mid, Subspace::span(anti));
}

TEST(Decomposition, Examples) {
    auto d = lefschetz_decomposition(p2_model(), 2);
    ASSERT_EQ(d[2].size(), 1u);
    EXPECT_EQ(d[2][0].first, 1);
    EXPECT_EQ(d[2][0].second.dim(), 1u);
    ASSERT_EQ(d[0].size(), 1u);
    EXPECT_EQ(d[0][0].second, Subspace::coordinate(3, 0, 1));
    auto e = lefschetz_decomposition(p1xp1_model(), 2);
    ASSERT_EQ(e[2].size(), 2u);
    for (const auto &[p, s] : e[2]) EXPECT_EQ(s.dim(), 1u);
    LefschetzOperator zero(QiMatrix(3, 3), p2_model().grading());
    EXPECT_THROW(lefschetz_decomposition(zero, 2), LefschetzError);
}

TEST(HodgeProperty, RoundTrip) {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        auto s = random_hodge_structure(rng, 8);
        ASSERT_TRUE(validate_hodge_structure(s.hodge).passed());
        auto back = pieces_from_filtration(filtration_from_pieces(s.hodge), s.hodge.weight());
        for (int p = 0; p <= s.hodge.weight(); ++p) EXPECT_EQ(back.piece(p), s.hodge.piece(p));
    }
}

TEST(HodgeProperty, WeilSquare) {
    Rng rng(22);
    for (int t = 0; t < 60; ++t) {
        auto s = random_hodge_structure(rng, 8);
        QiMatrix c = weil_operator(s.hodge);
        const std::size_t d = s.hodge.ambient_dim();
        EXPECT_EQ(c * c, QiMatrix::identity(d) * GaussRational(s.hodge.weight() % 2 == 0 ? 1 : -1));
        EXPECT_TRUE(c.is_real());
    }
}

TEST(HodgeProperty, PolarizationBasisInvariance) {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        auto s = random_hodge_structure(rng, 6);
        BilinearFormData q = s.form;
        if (rng.coin()) q = BilinearFormData(q.gram() * GaussRational(-1), q.symmetry_sign());
        bool verdict = check_polarization(s.hodge, q).passed();
        std::map<Bidegree, Subspace> rebased;
        for (const auto &[pq, sub] : s.hodge.pieces()) {
            QiMatrix mix = random_invertible(rng, sub.dim());
            rebased.emplace(pq, Subspace::span(sub.basis() * mix));
        }
        HodgeStructureData h2(s.hodge.ambient_dim(), s.hodge.weight(), rebased);
        EXPECT_EQ(check_polarization(h2, q).passed(), verdict);
    }
}

TEST(HodgeProperty, GeneratedFormsPolarize) {
    Rng rng(24);
    for (int t = 0; t < 60; ++t) {
        auto s = random_hodge_structure(rng, 8);
        EXPECT_TRUE(check_polarization(s.hodge, s.form).passed());
        BilinearFormData neg(s.form.gram() * GaussRational(-1), s.form.symmetry_sign());
        EXPECT_TRUE(check_polarization(s.hodge, neg).failed("positivity"));
    }
}

TEST(HodgeProperty, LefschetzStrings) {
    // HL holds iff every string is centered; the decomposition then
    // reconstructs every degree block.
    Rng rng(25);
    for (int t = 0; t < 80; ++t) {
        int n = static_cast<int>(rng.uniform(0, 4));
        std::vector<unsigned> lengths;
        std::vector<int> starts;
        bool centered = true;
        const long count = rng.uniform(1, 4);
        for (long a = 0; a < count; ++a) {
            int j0 = static_cast<int>(rng.uniform(0, n));
            int len = n - j0 + 1;
            if (len > 1 && rng.uniform(0, 4) == 0) {
                --len;
                centered = false;
            }
            lengths.push_back(static_cast<unsigned>(len));
            starts.push_back(j0);
        }
        auto l = string_model(lengths, starts);
        bool hl = hard_lefschetz_check(l, n).passed();
        EXPECT_EQ(hl, centered);
        if (!hl) {
            EXPECT_THROW(lefschetz_decomposition(l, n), LefschetzError);
            continue;
        }
        auto dec = lefschetz_decomposition(l, n);
        for (int k = 0; k <= n; ++k) {
            std::size_t total = 0;
            Subspace acc(l.grading().total_dim());
            for (const auto &[p, s] : dec[k]) {
                total += s.dim();
                acc = sum(acc, s);
            }
            EXPECT_EQ(total, l.grading().dim_of(Rational(k)));
            EXPECT_EQ(acc, l.grading().block_subspace(Rational(k)));
        }
    }
}
