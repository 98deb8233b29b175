#include "gmf/free_module.hpp"
#include "gmf/random.hpp"

#include <gtest/gtest.h>

using namespace gmf;

namespace {

const Field QQ = Field::rationals();
const Field F = Field::prime_field(32003);

template <class K>
void check_field_axioms(const Field& f, std::uint64_t seed) {
    Rng rng(seed);
    for (int n = 0; n < 10000; ++n) {
        K a = generic_coefficient<K>(f, rng), b = generic_coefficient<K>(f, rng), c = generic_coefficient<K>(f, rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE((a + (-a)).is_zero());
        if (!a.is_zero()) {
            ASSERT_TRUE((a * a.inverse()).is_one());
        }
    }
}

}  // namespace

TEST(Field, AxiomsHoldExactly) {
    check_field_axioms<Zp>(F, 1);
    check_field_axioms<Rational>(QQ, 2);
}

TEST(Field, PrimeFieldRepresentativesAreCanonical) {
    EXPECT_EQ(Zp::from_int(F, -1).value(), 32002u);
    EXPECT_EQ(Zp::from_int(F, 32003 * 5 + 7).value(), 7u);
    EXPECT_EQ(Zp::from_int(F, -1).to_string(), "-1");
    EXPECT_THROW(Field::prime_field(32004), InputError);
    EXPECT_THROW(Field::prime_field(1ull << 31), InputError);
}

TEST(Parse, HomogeneousCubic) {
    auto ring = GradedRing::standard({"x", "y"}, QQ);
    auto p = parse_polynomial<Rational>("x^3+y^3", ring);
    ASSERT_TRUE(p.degree().has_value());
    EXPECT_EQ(*p.degree(), 3);
    EXPECT_EQ(to_string(p, ring), "x^3+y^3");
}

TEST(Parse, CommutativityCancels) {
    auto ring = GradedRing::standard({"x", "y"}, QQ);
    EXPECT_TRUE(parse_polynomial<Rational>("x*y - y*x", ring).is_zero());
}

TEST(Parse, WeightedDegree) {
    GradedRing ring({"x", "y"}, {3, 2}, QQ);
    auto p = parse_polynomial<Rational>("x^2+y^3", ring);
    ASSERT_TRUE(p.degree().has_value());
    EXPECT_EQ(*p.degree(), 6);
}

TEST(Parse, InhomogeneousIsRecorded) {
    auto ring = GradedRing::standard({"x", "y"}, QQ);
    auto p = parse_polynomial<Rational>("x^2 + y", ring);
    EXPECT_FALSE(p.is_homogeneous());
    EXPECT_FALSE(p.degree().has_value());
}

TEST(Parse, RationalCoefficientsAndParentheses) {
    auto ring = GradedRing::standard({"x", "y"}, QQ);
    auto p = parse_polynomial<Rational>("-(3/2*x - y)^2 + 9/4*x^2", ring);
    EXPECT_EQ(to_string(p, ring), "3*x*y-y^2");
    auto q = parse_polynomial<Rational>("x*-y", ring);
    EXPECT_EQ(to_string(q, ring), "-x*y");
}

TEST(Parse, Errors) {
    auto ring = GradedRing::standard({"x", "y"}, F);
    EXPECT_THROW(parse_polynomial<Zp>("x + z", ring), ParseError);
    EXPECT_THROW(parse_polynomial<Zp>("x + ", ring), ParseError);
    EXPECT_THROW(parse_polynomial<Zp>("(x", ring), ParseError);
    EXPECT_THROW(parse_polynomial<Zp>("x^", ring), ParseError);
    EXPECT_THROW(parse_polynomial<Zp>("1/32003*x", ring), ParseError);
    EXPECT_THROW(parse_polynomial<Zp>("", ring), ParseError);
    EXPECT_NO_THROW(parse_polynomial<Zp>("1/2*x", ring));
}

TEST(Parse, GrevlexPrintOrder) {
    auto ring = GradedRing::standard({"x", "y", "z"}, QQ);
    auto p = parse_polynomial<Rational>("z^2 + x*z + y^2 + x*y + x^2", ring);
    EXPECT_EQ(to_string(p, ring), "x^2+x*y+y^2+x*z+z^2");
}

TEST(Parse, PrintParseRoundTripOnRandomPolynomials) {
    GradedRing ring({"x", "y", "z"}, {1, 2, 3}, F);
    GradedRing qring({"x", "y", "z"}, {1, 2, 3}, QQ);
    Rng rng(7);
    for (int n = 0; n < 300; ++n) {
        int e = static_cast<int>(rng() % 9);
        auto p = random_homogeneous<Zp>(ring, e, rng);
        EXPECT_EQ(parse_polynomial<Zp>(to_string(p, ring), ring), p);
        auto q = random_homogeneous<Rational>(qring, e, rng, 0.6, 50) * Rational::from_fraction(QQ, 1, 7);
        EXPECT_EQ(parse_polynomial<Rational>(to_string(q, qring), qring), q);
    }
}

TEST(Matrix, ComposeExamples) {
    auto ring = GradedRing::standard({"x", "y"}, QQ);
    auto P = [&](const char* s) { return parse_polynomial<Rational>(s, ring); };
    GradedFreeModule B0({0}), B1({1}), B2({2});
    GradedMatrix<Rational> fx(B1, B0, 0, {P("x")});
    GradedMatrix<Rational> gy(B2, B1, 0, {P("y")});
    auto c = matrix_compose(fx, gy);
    EXPECT_EQ(c(0, 0), P("x*y"));
    EXPECT_EQ(c.source(), B2);
    EXPECT_EQ(c.target(), B0);
    EXPECT_EQ(matrix_compose(fx, GradedMatrix<Rational>::identity(B1, QQ)), fx);
    EXPECT_THROW(matrix_compose(fx, fx), InputError);

    auto r1 = GradedRing::standard({"x"}, QQ);
    GradedMatrix<Rational> a(GradedFreeModule({0}), GradedFreeModule({0}), 1, {parse_polynomial<Rational>("x", r1)});
    GradedMatrix<Rational> b(GradedFreeModule({0}), GradedFreeModule({0}), 2, {parse_polynomial<Rational>("x^2", r1)});
    auto ab = matrix_compose(a, b);
    EXPECT_EQ(ab.degree(), 3);
    EXPECT_EQ(ab(0, 0), parse_polynomial<Rational>("x^3", r1));
    EXPECT_TRUE(validate_matrix(ab).valid);
}

TEST(Matrix, ValidateExamples) {
    auto ring = GradedRing::standard({"x", "y"}, QQ);
    GradedMatrix<Rational> bad(GradedFreeModule({2}), GradedFreeModule({0}), 0, {parse_polynomial<Rational>("y", ring)});
    auto rep = validate_matrix(bad);
    EXPECT_FALSE(rep.valid);
    ASSERT_EQ(rep.violations.size(), 1u);
    EXPECT_EQ(rep.violations[0].row, 0u);
    EXPECT_EQ(rep.violations[0].col, 0u);
    EXPECT_EQ(rep.violations[0].expected_degree, 2);

    EXPECT_TRUE(validate_matrix(GradedMatrix<Rational>(GradedFreeModule({0, 3}), GradedFreeModule({1}), 0)).valid);

    GradedMatrix<Rational> p1(GradedFreeModule({1}), GradedFreeModule({0}), 0, {parse_polynomial<Rational>("x", ring)});
    EXPECT_TRUE(validate_matrix(p1).valid);
    EXPECT_EQ(p1.entry_degree(0, 0), 1);
}

TEST(Matrix, CompositionAssociativeAndDegreeAdditive) {
    GradedRing ring({"x", "y"}, {1, 2}, F);
    Rng rng(11);
    std::uniform_int_distribution<int> gd(0, 3), rk(1, 3), dd(0, 2);
    for (int n = 0; n < 100; ++n) {
        auto mod = [&] {
            std::vector<int> d(static_cast<std::size_t>(rk(rng)));
            for (auto& g : d) g = gd(rng);
            return GradedFreeModule(d);
        };
        GradedFreeModule A = mod(), B = mod(), C = mod(), D = mod();
        auto h = random_matrix<Zp>(ring, A, B, dd(rng), rng);
        auto g = random_matrix<Zp>(ring, B, C, dd(rng), rng);
        auto f = random_matrix<Zp>(ring, C, D, dd(rng), rng);
        auto left = matrix_compose(matrix_compose(f, g), h);
        auto right = matrix_compose(f, matrix_compose(g, h));
        EXPECT_EQ(left, right);
        EXPECT_EQ(left.degree(), f.degree() + g.degree() + h.degree());
        EXPECT_TRUE(validate_matrix(left).valid);
    }
}

TEST(FreeModule, TwistRoundTrip) {
    GradedFreeModule m({0, 3, -2});
    EXPECT_EQ(m.twist(4).twist(-4), m);
    EXPECT_EQ(m.twist(1).degrees(), (std::vector<int>{-1, 2, -3}));
}
