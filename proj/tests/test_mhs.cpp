#include "generators.hpp"

#include <gtest/gtest.h>

using namespace orbhodge;
using namespace orbhodge::testing;

namespace {

const GaussRational I = GaussRational::imaginary_unit();

struct Model {
    Bigrading bigrading;
    BilinearFormData form;
    std::vector<NilpotentOperator> n;
    int k = 0;
};

// H*(P^1): e0 in degree 0, e1 in degree 2, I^{1,1} = H^0, I^{0,0} = H^2.
Model p1(int sign = 1) {
    return {Bigrading(2, {{{1, 1}, Subspace::coordinate(2, 0, 1)}, {{0, 0}, Subspace::coordinate(2, 1, 1)}}),
            BilinearFormData(QiMatrix{{0, sign}, {-sign, 0}}, -1),
            {NilpotentOperator(QiMatrix{{0, 0}, {1, 0}})},
            1};
}

// H*(P^1 x P^1): 1, H1, H2, pt. L1 = H1 wedge, L2 = H2 wedge.
Model p1xp1() {
    QiMatrix l1(4, 4), l2(4, 4), g(4, 4);
    l1(1, 0) = 1;
    l1(3, 2) = 1;
    l2(2, 0) = 1;
    l2(3, 1) = 1;
    g(0, 3) = g(3, 0) = 1;
    g(1, 2) = g(2, 1) = -1;
    return {Bigrading(4, {{{2, 2}, Subspace::coordinate(4, 0, 1)},
                          {{1, 1}, Subspace::coordinate(4, 1, 2)},
                          {{0, 0}, Subspace::coordinate(4, 3, 1)}}),
            BilinearFormData(g, 1),
            {NilpotentOperator(l1), NilpotentOperator(l2)},
            2};
}

OrbitPoint at(const Model &m, std::vector<GaussRational> z) { return {std::move(z), m.n}; }

bool failed_with_prefix(const Report &r, const std::string &prefix) {
    for (const auto &f : r.failures())
        if (f.check_id.rfind(prefix, 0) == 0) return true;
    return false;
}

} // namespace

TEST(WeightFiltration, Examples) {
    auto w0 = weight_filtration(NilpotentOperator(QiMatrix(3, 3)));
    EXPECT_TRUE(w0[-1].is_zero());
    EXPECT_TRUE(w0[0].is_full());

    QiMatrix j{{0, 0}, {1, 0}};
    auto w = weight_filtration(NilpotentOperator(j));
    EXPECT_TRUE(w[-2].is_zero());
    EXPECT_EQ(w[-1], image(j));
    EXPECT_EQ(w[-1].dim(), 1u);
    EXPECT_TRUE(w[1].is_full());

    QiMatrix b(4, 4);
    b(1, 0) = 1;
    b(2, 1) = 1;
    auto w31 = weight_filtration(NilpotentOperator(b));
    EXPECT_EQ(w31[-2].dim() - w31[-3].dim(), 1u);
    EXPECT_EQ(w31[0].dim() - w31[-1].dim(), 2u);
    EXPECT_EQ(w31[2].dim() - w31[1].dim(), 1u);
    EXPECT_TRUE(weight_filtration_properties(b, w31).passed());
}

TEST(WeightFiltration, RejectsNonNilpotent) {
    EXPECT_THROW(NilpotentOperator(QiMatrix::identity(2)), std::invalid_argument);
    EXPECT_THROW(NilpotentOperator(QiMatrix{{0, I}, {0, 0}}), std::invalid_argument);
}

TEST(Shift, Examples) {
    QiMatrix j{{0, 0}, {1, 0}};
    auto w = weight_filtration(NilpotentOperator(j));
    EXPECT_EQ(shift_filtration(w, 0), w);
    auto w0 = weight_filtration(NilpotentOperator(QiMatrix(2, 2)));
    EXPECT_EQ(shift_filtration(w0, -3).jumps(), std::vector<int>{3});
    EXPECT_EQ(shift_filtration(w, -1).jumps(), (std::vector<int>{0, 2}));
}

TEST(Bigrading, Examples) {
    Bigrading real(2, {{{1, 1}, Subspace::coordinate(2, 0, 1)}, {{0, 0}, Subspace::coordinate(2, 1, 1)}});
    auto m = mhs_from_bigrading(real);
    EXPECT_TRUE(m.report.passed());
    EXPECT_TRUE(m.split);
    EXPECT_TRUE(is_split_over_R(real));
    EXPECT_EQ(m.weight[0], Subspace::coordinate(2, 1, 1));
    EXPECT_TRUE(m.weight[2].is_full());
    EXPECT_EQ(m.hodge[1], Subspace::coordinate(2, 0, 1));

    Bigrading torus(2, {{{1, 0}, Subspace::span(QiMatrix::vector({1, I}))}, {{0, 1}, Subspace::span(QiMatrix::vector({1, -I}))}});
    EXPECT_TRUE(is_split_over_R(torus));
    EXPECT_TRUE(mhs_from_bigrading(torus).report.passed());

    Bigrading bad(2, {{{1, 0}, Subspace::span(QiMatrix::vector({1, I}))}, {{0, 1}, Subspace::span(QiMatrix::vector({1, 2 * I}))}});
    EXPECT_FALSE(mhs_from_bigrading(bad).report.passed());
    EXPECT_FALSE(is_split_over_R(bad));
}

TEST(Bigrading, MorphismBidegree) {
    auto m = p1xp1();
    EXPECT_TRUE(check_morphism_bidegree(QiMatrix::identity(4), m.bigrading, 0, 0));
    EXPECT_TRUE(check_morphism_bidegree(QiMatrix(4, 4), m.bigrading, 3, -5));
    for (const auto &n : m.n) {
        EXPECT_TRUE(check_morphism_bidegree(n.matrix(), m.bigrading, -1, -1));
        EXPECT_FALSE(check_morphism_bidegree(n.matrix(), m.bigrading, 0, 0));
    }
}

TEST(Pmhs, P1Model) {
    auto m = p1();
    auto mhs = mhs_from_bigrading(m.bigrading);
    EXPECT_TRUE(check_pmhs(mhs.weight, mhs.hodge, m.form, m.n[0], m.k).passed());
    auto neg = p1(-1);
    Report r = check_pmhs(mhs.weight, mhs.hodge, neg.form, neg.n[0], neg.k);
    EXPECT_TRUE(failed_with_prefix(r, "item4[l=1]"));
}

TEST(Pmhs, DegenerateIsPolarizedHs) {
    HodgeStructureData torus(2, 1, {{{1, 0}, Subspace::span(QiMatrix::vector({1, I}))}, {{0, 1}, Subspace::span(QiMatrix::vector({1, -I}))}});
    IncreasingFiltration w(2, 1, {Subspace::full(2)});
    BilinearFormData q(QiMatrix{{0, 1}, {-1, 0}}, -1);
    EXPECT_TRUE(check_pmhs(w, filtration_from_pieces(torus), q, NilpotentOperator(QiMatrix(2, 2)), 1).passed());
}

TEST(Pmhs, WrongWeightFiltration) {
    auto m = p1();
    auto mhs = mhs_from_bigrading(m.bigrading);
    IncreasingFiltration w(2, 0, {Subspace::full(2)});
    EXPECT_TRUE(check_pmhs_weight_conditions(w, m.n[0], 1).failed("item2"));
    EXPECT_TRUE(check_pmhs_weight_conditions(mhs.weight, m.n[0], 1).passed());
}

TEST(Orbit, Evaluate) {
    auto m = p1();
    auto f = mhs_from_bigrading(m.bigrading).hodge;
    EXPECT_EQ(evaluate_orbit(f, at(m, {0})), f);
    auto fz = evaluate_orbit(f, at(m, {I}));
    EXPECT_EQ(fz[1], Subspace::span(QiMatrix::vector({1, I})));
    auto q = p1xp1();
    auto g = evaluate_orbit(mhs_from_bigrading(q.bigrading).hodge, at(q, {I, 2 * I}));
    EXPECT_EQ(g[2], Subspace::span(QiMatrix::vector({1, I, 2 * I, -2})));
    EXPECT_EQ(g[1].dim(), 3u);
}

TEST(Orbit, Polarized) {
    auto m = p1();
    auto f = mhs_from_bigrading(m.bigrading).hodge;
    EXPECT_TRUE(check_orbit_polarized_at(f, at(m, {I}), 1, m.form).passed());
    Report r = check_orbit_polarized_at(f, at(m, {-I}), 1, m.form);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.has_caveat());
    auto q = p1xp1();
    auto g = mhs_from_bigrading(q.bigrading).hodge;
    EXPECT_TRUE(check_orbit_polarized_at(g, at(q, {I, I}), 2, q.form).passed());
    EXPECT_FALSE(check_orbit_polarized_at(g, at(q, {I, -I}), 2, q.form).passed());
}

TEST(Orbit, DefaultSamples) {
    EXPECT_EQ(default_sample_values().size(), 5u);
    EXPECT_EQ(default_orbit_samples(2).size(), 25u);
    for (const auto &s : default_orbit_samples(1)) EXPECT_GT(sgn(s[0].im()), 0);
}

TEST(MhsProperty, WeightFiltrationOracles) {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        auto s = random_nilpotent(rng, 8);
        auto w = weight_filtration(NilpotentOperator(s.n));
        auto a = jordan_oracle(s);
        auto b = kernel_image_oracle(s.n);
        for (int l = -9; l <= 9; ++l) {
            ASSERT_EQ(w[l], a[l]) << "trial " << t << " l=" << l;
            ASSERT_EQ(w[l], b[l]) << "trial " << t << " l=" << l;
        }
        EXPECT_TRUE(weight_filtration_properties(s.n, w).passed());
    }
}

TEST(MhsProperty, Equivariance) {
    Rng rng(32);
    for (int t = 0; t < 60; ++t) {
        auto s = random_nilpotent(rng, 6);
        QiMatrix g = random_invertible(rng, s.n.rows());
        auto w = weight_filtration(NilpotentOperator(s.n));
        auto wg = weight_filtration(NilpotentOperator(g * s.n * *inverse(g)));
        EXPECT_EQ(wg, transform(g, w));
    }
}

TEST(MhsProperty, DegeneratePmhsAndSignFlip) {
    Rng rng(33);
    for (int t = 0; t < 40; ++t) {
        auto s = random_hodge_structure(rng, 6);
        const std::size_t d = s.hodge.ambient_dim();
        const int k = s.hodge.weight();
        IncreasingFiltration w(d, k, {Subspace::full(d)});
        auto f = filtration_from_pieces(s.hodge);
        NilpotentOperator zero(QiMatrix(d, d));
        EXPECT_TRUE(check_pmhs(w, f, s.form, zero, k).passed());
        BilinearFormData neg(s.form.gram() * GaussRational(-1), s.form.symmetry_sign());
        EXPECT_TRUE(failed_with_prefix(check_pmhs(w, f, neg, zero, k), "item4[l=0]"));
    }
}

TEST(MhsProperty, OrbitGroupAction) {
    Rng rng(34);
    for (int t = 0; t < 40; ++t) {
        auto s = random_nilpotent(rng, 6);
        const std::size_t d = s.n.rows();
        QiMatrix n2 = s.n * s.n + s.n * GaussRational(small_rational(rng));
        std::vector<NilpotentOperator> ops{NilpotentOperator(s.n), NilpotentOperator(n2)};
        std::vector<Subspace> steps{Subspace::full(d)};
        QiMatrix gen = random_gauss_matrix(rng, d, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d))));
        steps.push_back(Subspace::span(gen));
        if (!steps.back().is_full() && !steps.back().is_zero()) steps.push_back(Subspace::zero(d));
        DecreasingFiltration f(d, 0, steps);
        std::vector<GaussRational> z{small_gauss(rng), small_gauss(rng)}, u{small_gauss(rng), small_gauss(rng)};
        auto step = evaluate_orbit(evaluate_orbit(f, {z, ops}), {u, ops});
        auto once = evaluate_orbit(f, {{z[0] + u[0], z[1] + u[1]}, ops});
        EXPECT_EQ(step, once);
    }
}

TEST(MhsProperty, NoncommutingRejected) {
    NilpotentOperator a(QiMatrix{{0, 0}, {1, 0}}), b(QiMatrix{{0, 1}, {0, 0}});
    DecreasingFiltration f(2, 0, {Subspace::full(2)});
    EXPECT_THROW(evaluate_orbit(f, {{I, I}, {a, b}}), std::invalid_argument);
}
