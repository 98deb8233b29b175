#include "fixtures.hpp"
#include "gmf/random.hpp"
#include "oracles.hpp"

using namespace gmf;
using namespace gmf::test;

namespace {

using V = std::vector<std::size_t>;

template <Coefficient K>
void expect_complex(const std::vector<GradedMatrix<K>>& res, const GradedRing& ring, const Polynomial<K>* W) {
    for (std::size_t k = 0; k + 1 < res.size(); ++k) {
        auto c = matrix_compose(res[k], res[k + 1]);
        if (W) c = reduce_mod(c, *W);
        EXPECT_TRUE(c.is_zero()) << "composite " << k;
    }
    for (const auto& d : res)
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) EXPECT_FALSE(d(i, j).is_constant() && !d(i, j).is_zero());
    (void)ring;
}

}  // namespace

TEST(Resolution, ResidueFieldOverLine) {
    auto c = qq({"x"});
    auto res = minimal_resolution(c.mat({1}, {0}, 0, {"x"}), 5, c.ring);
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].source().degrees(), std::vector<int>{1});
}

TEST(Resolution, Koszul) {
    auto c = qq({"x", "y"});
    auto res = minimal_resolution(c.mat({1, 1}, {0}, 0, {"x", "y"}), 5, c.ring);
    ASSERT_EQ(res.size(), 2u);
    EXPECT_EQ(res[1].source().degrees(), std::vector<int>{2});
    EXPECT_EQ(res[1].target().degrees(), (std::vector<int>{1, 1}));
    expect_complex(res, c.ring, static_cast<const Polynomial<Rational>*>(nullptr));
}

TEST(Resolution, PeriodicOverHypersurface) {
    auto c = qq({"x"}, "x^3");
    auto res = minimal_resolution(c.mat({1}, {0}, 0, {"x"}), 4, c.ring, &*c.W);
    ASSERT_EQ(res.size(), 4u);
    std::vector<std::string> want = {"x", "x^2", "x", "x^2"};
    std::vector<int> degs = {0, 1, 3, 4, 6};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(to_string(res[k](0, 0), c.ring), want[k]);
        EXPECT_EQ(res[k].target().degree(0), degs[k]);
        EXPECT_EQ(res[k].source().degree(0), degs[k + 1]);
    }
    expect_complex(res, c.ring, &*c.W);
}

TEST(Resolution, MinimizesUnitEntries) {
    auto c = qq({"x", "y"});
    // second generator is redundant: e1 = x e0
    auto R = c.mat({1, 2, 2}, {0, 1}, 0, {"x", "0", "y^2", "-1", "y", "0"});
    auto m = minimize_presentation(R, c.ring);
    EXPECT_EQ(m.rows(), 1u);
    EXPECT_EQ(m.target().degrees(), std::vector<int>{0});
    EXPECT_EQ(hilbert_function(ModulePresentation<Rational>(c.ring, m.target(), m), 0, 3),
              hilbert_function(ModulePresentation<Rational>(c.ring, R.target(), R), 0, 3));
}

TEST(Resolution, RandomComplexesAreExactAndMinimal) {
    auto c = qq({"x", "y", "z"});
    Rng rng(7);
    for (int trial = 0; trial < 4; ++trial) {
        GradedFreeModule tgt({0, 1}), src({2, 2, 3});
        auto R = random_matrix<Rational>(c.ring, src, tgt, 0, rng, 0.7);
        auto res = minimal_resolution(R, 5, c.ring);
        expect_complex(res, c.ring, static_cast<const Polynomial<Rational>*>(nullptr));
        for (std::size_t k = 1; k < res.size(); ++k) {
            int top = res[k].source().rank() ? *std::max_element(res[k].source().degrees().begin(), res[k].source().degrees().end()) : 0;
            for (int e = 0; e <= top + 2; ++e)
                EXPECT_EQ(oracle::span_dim(res[k], c.ring, e), oracle::nullity(res[k - 1], c.ring, e)) << "k=" << k << " e=" << e;
        }
    }
}

TEST(Hilbert, Examples) {
    auto a = qq({"x"}, "x^3");
    EXPECT_EQ(hilbert_function(a.free({0}), 0, 5), (V{1, 1, 1, 0, 0, 0}));
    auto b = qq({"x", "y", "z"});
    EXPECT_EQ(hilbert_function(b.residue_field(), -1, 3), (V{0, 1, 0, 0, 0}));
    auto q = qq({"x", "y"});
    EXPECT_EQ(hilbert_function(q.module({0}, {{"x"}, {"y"}}, false), 0, 3), (V{1, 0, 0, 0}));
    EXPECT_EQ(hilbert_function(q.free({0}), 0, 3), (V{1, 2, 3, 4}));
    EXPECT_THROW(hilbert_function(q.free({0}), 3, 2), InputError);
}

TEST(Truncate, Examples) {
    auto b = qq({"x"});
    auto t = truncate_tail(b.free({0}), 2);
    EXPECT_EQ(t.generators().degrees(), std::vector<int>{2});
    EXPECT_EQ(t.relations().cols(), 0u);
    auto k = truncate_tail(b.residue_field(), 1);
    EXPECT_EQ(k.generators().rank(), 0u);
    auto a = qq({"x"}, "x^3");
    auto t2 = truncate_tail(a.free({-1}), 0);
    EXPECT_EQ(hilbert_function(t2, -1, 4), (V{0, 1, 1, 0, 0, 0}));
}

TEST(Truncate, HilbertProperty) {
    auto c = Ctx<Zp>({"x", "y"}, {1, 2}, Field::prime_field(101), "x^4+y^2");
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        GradedFreeModule G({0, 1}), S({2, 3});
        auto R = random_matrix<Zp>(c.ring, S, G, 0, rng, 0.8);
        ModulePresentation<Zp> M(c.ring, G, R, c.W);
        for (int p : {-1, 1, 2, 3}) {
            auto h = hilbert_function(M, -2, 8);
            auto ht = hilbert_function(truncate_tail(M, p), -2, 8);
            for (int e = -2; e <= 8; ++e) EXPECT_EQ(ht[e + 2], e >= p ? h[e + 2] : 0u) << p << " " << e;
        }
    }
}

TEST(Syzygy, Examples) {
    auto b = qq({"x"});
    auto s = syzygy_module(b.residue_field(), 1);
    EXPECT_EQ(s.generators().degrees(), std::vector<int>{1});
    EXPECT_EQ(s.relations().cols(), 0u);
    auto a = qq({"x"}, "x^3");
    auto s2 = syzygy_module(a.residue_field(), 1);
    EXPECT_EQ(s2.generators().degrees(), std::vector<int>{1});
    ASSERT_EQ(s2.relations().cols(), 1u);
    EXPECT_EQ(to_string(s2.relations()(0, 0), a.ring), "x^2");
    auto k = a.residue_field();
    EXPECT_EQ(hilbert_function(syzygy_module(k, 0), 0, 3), hilbert_function(k, 0, 3));
}

TEST(Ext, FreeAndSelfInjective) {
    auto a = qq({"x"}, "x^2");
    auto t = ext_against_A(a.free({0}), 3);
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(t.vanishes(i));
    auto tk = ext_against_A(a.residue_field(), 4);
    for (int i = 1; i <= 4; ++i) EXPECT_TRUE(tk.vanishes(i)) << i;
    std::size_t total = 0;
    for (int e = tk.lo; e <= tk.hi; ++e) {
        std::size_t d = tk.dims[0][e - tk.lo];
        total += d;
        if (d) {
            EXPECT_EQ(e, 1);
        }
    }
    EXPECT_EQ(total, 1u);
}

TEST(Ext, NonMcmModuleHasExt) {
    auto c = qq({"x", "y"}, "x*y");
    auto k = c.residue_field();
    auto t = ext_against_A(k, 3);
    EXPECT_FALSE(t.vanishes(1) && t.vanishes(2) && t.vanishes(3));
    EXPECT_FALSE(is_mcm(k));
    EXPECT_TRUE(is_mcm(c.module({0}, {{"x"}})));
}

TEST(Ext, DimensionShiftUnderSyzygy) {
    auto c = qq({"x", "y"}, "x^3+y^3");
    std::vector<ModulePresentation<Rational>> ms = {c.residue_field(), c.module({0}, {{"x^2"}, {"y"}}), c.module({0, 0}, {{"x", "y"}, {"y^2", "0"}})};
    for (const auto& M : ms) {
        auto S = syzygy_module(M, 1);
        auto tm = ext_against_A(M, 3, std::pair{-8, 8});
        auto ts = ext_against_A(S, 2, std::pair{-8, 8});
        for (int i = 1; i <= 2; ++i) EXPECT_EQ(ts.dims[i], tm.dims[i + 1]) << i;
    }
}

TEST(Gorenstein, Parameter) {
    auto pn = qq({"x0", "x1", "x2", "x3"});
    EXPECT_EQ(gorenstein_parameter<Rational>(pn.ring, nullptr), 4);
    auto e = qq({"x", "y", "z"}, "x^3+y^3+z^3");
    EXPECT_EQ(gorenstein_parameter(e.ring, &*e.W), 0);
    for (int n = 1; n <= 4; ++n) {
        std::string w = "x^" + std::to_string(n + 1);
        auto a = qq({"x"}, w.c_str());
        EXPECT_EQ(gorenstein_parameter(a.ring, &*a.W), -n);
        auto t = ext_against_A(a.residue_field(), 1);
        for (int d = t.lo; d <= t.hi; ++d)
            if (t.dims[0][d - t.lo]) {
                EXPECT_EQ(-d, gorenstein_parameter(a.ring, &*a.W));
            }
    }
    auto bad = qq({"x", "y"});
    auto inh = bad.P("x^2+y");
    EXPECT_THROW(gorenstein_parameter(bad.ring, &inh), InputError);
}

TEST(ModuleHom, Examples) {
    auto a = qq({"x"}, "x^3");
    auto k = a.residue_field();
    auto q = a.module({0}, {{"x^2"}});
    EXPECT_EQ(module_hom(a.free({0}), q).dimension(), 1u);
    EXPECT_EQ(module_hom(a.free({0}), a.free({-1})).dimension(), 1u);
    EXPECT_EQ(module_hom(k, q).dimension(), 0u);
    EXPECT_EQ(module_hom(q, k).dimension(), 1u);
    EXPECT_EQ(module_hom(q, q).dimension(), 1u);
    EXPECT_EQ(module_hom(k, a.free({-2})).dimension(), 1u);
}

TEST(StableHom, Examples) {
    auto a2 = qq({"x"}, "x^2");
    auto k2 = a2.residue_field();
    EXPECT_EQ(stable_hom(k2, k2).dimension(), 1u);
    auto a = qq({"x"}, "x^3");
    auto q = a.module({0}, {{"x^2"}});
    EXPECT_EQ(stable_hom(q, a.residue_field()).dimension(), 1u);
    EXPECT_EQ(stable_hom(a.free({0}), q).dimension(), 0u);
    EXPECT_EQ(stable_hom(a.free({0}), a.free({0})).dimension(), 0u);
    auto s = stable_hom(a.residue_field(), a.residue_field());
    EXPECT_EQ(s.certification, Certification::exact);
    auto c = qq({"x", "y"}, "x*y");
    auto bad = stable_hom(c.residue_field(), c.residue_field());
    EXPECT_EQ(bad.certification, Certification::violated);
    EXPECT_FALSE(bad.warnings.empty());
}

TEST(StableHom, BoundedByModuleHom) {
    auto c = qq({"x", "y"}, "x^3+y^3");
    std::vector<ModulePresentation<Rational>> ms = {c.module({0}, {{"x"}, {"y^2"}}), c.module({0}, {{"x+y"}}),
                                                    c.module({0, 0}, {{"x", "y"}, {"y^2", "x*y"}}), c.free({0})};
    for (const auto& M : ms)
        for (const auto& N : ms) EXPECT_LE(stable_hom(M, N).dimension(), module_hom(M, N).dimension());
}

TEST(DsingHom, Examples) {
    auto a2 = qq({"x"}, "x^2");
    auto k = a2.residue_field();
    EXPECT_EQ(dsing_hom(k, k, 0).dimension(), 1u);
    for (int p = -2; p <= 2; ++p) EXPECT_EQ(dsing_hom(a2.free({0}), k, p).dimension(), 0u);
    // k[2] = k(-2) over x^2
    EXPECT_EQ(dsing_hom(k, k, 2).dimension(), dsing_hom(k, k.twist(-2), 0).dimension());
    EXPECT_EQ(dsing_hom(k, k, 1).dimension(), 0u);
    EXPECT_EQ(dsing_hom(k, k.twist(-1), 1).dimension(), 1u);
}

TEST(DsingHom, InvariantUnderSyzygy) {
    auto c = qq({"x", "y"}, "x*y");
    std::vector<ModulePresentation<Rational>> ms = {c.residue_field(), c.module({0}, {{"x"}}), c.module({0}, {{"y"}}),
                                                    c.module({0}, {{"x^2"}, {"y"}})};
    for (const auto& M : ms)
        for (const auto& N : ms)
            for (int p = -1; p <= 1; ++p)
                EXPECT_EQ(dsing_hom(M, N, p).dimension(), dsing_hom(syzygy_module(M, 1), syzygy_module(N, 1), p).dimension());
}
