#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stf/stgroup.hpp"

using namespace stf;

namespace {

double check_tables(const MomentSequence& ms, const std::vector<double>& expected) {
    REQUIRE(ms.values.size() >= expected.size());
    double worst = 0;
    for (size_t n = 0; n < expected.size(); ++n)
        worst = std::max(worst, std::fabs(ms.values[n] - expected[n]));
    return worst;
}

CMat sandwich(const CMat& a, const CMat& m, const CMat& b) { return mul(mul(a, m), b); }

} // namespace

TEST_CASE("builtin names round-trip") {
    for (BuiltinGroup b : all_builtin_groups()) {
        auto back = builtin_by_name(builtin_group_name(b));
        REQUIRE(back.has_value());
        CHECK(*back == b);
    }
    CHECK(!builtin_by_name("so3").has_value());
    CHECK(builtin_by_name("st-c2-generic") == BuiltinGroup::ST_C2_generic);
}

TEST_CASE("generators are symplectic unitary") {
    for (BuiltinGroup b : all_builtin_groups()) {
        STGroup G = builtin_group(b);
        CMat h = symplectic_form(G.g);
        CMat id = CMat::ident(2 * G.g);
        for (const CMat& g : G.gens) {
            CHECK(max_abs_diff(mul(g, adjoint(g)), id) < 1e-12);
            CHECK(max_abs_diff(sandwich(transpose(g), h, g), h) < 1e-12);
        }
        CMat t = torus_element(G, std::vector<double>((size_t)G.n_params, 0.83));
        CHECK(max_abs_diff(mul(t, adjoint(t)), id) < 1e-12);
        CHECK(max_abs_diff(sandwich(transpose(t), h, t), h) < 1e-12);
    }
    CMat h = symplectic_form(3);
    CMat neg_id = CMat::ident(6);
    for (int i = 0; i < 6; ++i) neg_id.at(i, i) = -1;
    CHECK(max_abs_diff(mul(h, h), neg_id) < 1e-15);
    CHECK(max_abs_diff(transpose(h), adjoint(h)) < 1e-15); // real matrix
}

TEST_CASE("torus membership") {
    STGroup G = builtin_group(BuiltinGroup::ST_C1_generic);
    CHECK(in_torus(G, torus_element(G, {0.3, -1.2})));
    CHECK(in_torus(G, CMat::ident(6)));
    CHECK(!in_torus(G, G.gens[0]));
    CHECK(!in_torus(G, G.gens[2]));

    // blocks tied to one parameter must carry equal angles
    STGroup two = builtin_group(BuiltinGroup::U1_2);
    CMat m(4);
    cplx u{std::cos(0.5L), std::sin(0.5L)}, v{std::cos(0.9L), std::sin(0.9L)};
    m.at(0, 0) = u;
    m.at(1, 1) = std::conj(u);
    m.at(2, 2) = v;
    m.at(3, 3) = std::conj(v);
    CHECK(!in_torus(two, m));
    m.at(2, 2) = u;
    m.at(3, 3) = std::conj(u);
    CHECK(in_torus(two, m));

    CHECK_THROWS_AS((void)torus_element(G, {0.3}), std::invalid_argument);
}

TEST_CASE("component counts and profiles") {
    auto profile = [](BuiltinGroup b) { return component_group_profile(builtin_group(b)); };

    ComponentProfile p = profile(BuiltinGroup::U1);
    CHECK(p.order == 1);
    CHECK(p.abelian);

    p = profile(BuiltinGroup::N_U1);
    CHECK(p.order == 2);
    CHECK(p.abelian);
    CHECK(p.element_orders == std::vector<int>{1, 2});

    for (BuiltinGroup b : {BuiltinGroup::U1_2, BuiltinGroup::U1_3, BuiltinGroup::U1_2xU1})
        CHECK(profile(b).order == 1);

    // dihedral-times-order-2 profile shared by the 4-dim group and the
    // genus-3 generic y^2 = x^8 + c group
    std::vector<int> d4c2{1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4};
    p = profile(BuiltinGroup::JD4);
    CHECK(p.order == 16);
    CHECK(!p.abelian);
    CHECK(p.element_orders == d4c2);
    p = profile(BuiltinGroup::ST_C1_generic);
    CHECK(p.order == 16);
    CHECK(!p.abelian);
    CHECK(p.element_orders == d4c2);

    p = profile(BuiltinGroup::D61);
    CHECK(p.order == 12);
    CHECK(!p.abelian);
    CHECK(p.element_orders == std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6});

    p = profile(BuiltinGroup::ST_C1_sub4);
    CHECK(p.order == 8);
    CHECK(p.abelian);
    CHECK(p.element_orders == std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2});

    p = profile(BuiltinGroup::ST_C1_sub2);
    CHECK(p.order == 4);
    CHECK(p.abelian);
    CHECK(p.element_orders == std::vector<int>{1, 2, 2, 2});

    p = profile(BuiltinGroup::ST_C2_generic);
    CHECK(p.order == 24);
    CHECK(!p.abelian);
    CHECK(p.element_orders == std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3,
                                               4, 4, 4, 4, 4, 4, 6, 6, 6, 6, 6, 6});

    p = profile(BuiltinGroup::ST_C2_cube);
    CHECK(p.order == 8);
    CHECK(!p.abelian);
    CHECK(p.element_orders == std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4});
}

TEST_CASE("component count is stable under tolerance and generator order") {
    for (BuiltinGroup b : {BuiltinGroup::ST_C1_generic, BuiltinGroup::ST_C2_generic}) {
        STGroup G = builtin_group(b);
        size_t expected = enumerate_components(G).size();
        for (double tol : {1e-10, 1e-8, 1e-6})
            CHECK(enumerate_components(G, tol).size() == expected);
        std::reverse(G.gens.begin(), G.gens.end());
        CHECK(enumerate_components(G).size() == expected);
    }
}

TEST_CASE("presentation relations hold modulo the torus") {
    STGroup c1 = builtin_group(BuiltinGroup::ST_C1_generic);
    const CMat &r1 = c1.gens[0], &s1 = c1.gens[1], &t1 = c1.gens[2];
    CHECK(in_torus(c1, mul(r1, r1)));
    CHECK(in_torus(c1, mul(s1, s1)));
    CHECK(in_torus(c1, mul(mul(t1, t1), mul(t1, t1))));
    CMat rs = mul(r1, s1);
    CHECK(in_torus(c1, mul(rs, rs)));
    CMat rt = mul(r1, t1);
    CHECK(in_torus(c1, mul(rt, rt)));
    CMat st = mul(s1, t1);
    CHECK(in_torus(c1, mul(st, mul(st, mul(t1, t1))))); // s t s t^3
    CHECK(!in_torus(c1, t1));
    CHECK(!in_torus(c1, rs));

    STGroup c2 = builtin_group(BuiltinGroup::ST_C2_generic);
    const CMat &r2 = c2.gens[0], &s2 = c2.gens[1], &t2 = c2.gens[2];
    CHECK(in_torus(c2, mul(r2, r2)));
    CHECK(in_torus(c2, mul(s2, s2)));
    CHECK(in_torus(c2, mul(t2, mul(t2, t2))));
    CMat rs2 = mul(r2, s2);
    CHECK(in_torus(c2, mul(mul(rs2, rs2), mul(rs2, rs2))));
    CHECK(!in_torus(c2, mul(rs2, rs2)));
    CMat rt2 = mul(r2, t2);
    CHECK(in_torus(c2, mul(rt2, rt2)));
    CMat st2 = mul(s2, t2);
    CHECK(in_torus(c2, mul(st2, mul(st2, t2)))); // s t s t^2
}

TEST_CASE("runaway closure throws") {
    STGroup G = builtin_group(BuiltinGroup::U1);
    CMat rot(2); // rotation by 1 radian: never torus-diagonal, infinite order
    rot.at(0, 0) = std::cos(1.0L);
    rot.at(0, 1) = std::sin(1.0L);
    rot.at(1, 0) = -std::sin(1.0L);
    rot.at(1, 1) = std::cos(1.0L);
    CHECK_THROWS_AS((void)closure_mod_torus(G, {rot}), std::runtime_error);
}

TEST_CASE("characteristic coefficients via trace recurrence") {
    auto c = charpoly_coeffs(CMat::ident(6));
    CHECK(c[0] == doctest::Approx(-6).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(15).epsilon(1e-12));
    CHECK(c[2] == doctest::Approx(-20).epsilon(1e-12));

    // J has eigenvalues +-i: det(I - JT) = 1 + T^2
    c = charpoly_coeffs(symplectic_form(1));
    CHECK(std::fabs(c[0]) < 1e-15);
    CHECK(c[1] == doctest::Approx(1).epsilon(1e-12));
    CHECK(std::fabs(c[2]) < 1e-15);

    // diag torus element: a1 = -(2cos u + 2cos u + 2cos v) etc.
    STGroup G = builtin_group(BuiltinGroup::ST_C1_generic);
    double u = 0.77, v = -0.31;
    c = charpoly_coeffs(torus_element(G, {u, v}));
    CHECK(c[0] == doctest::Approx(-(4 * std::cos(u) + 2 * std::cos(v))).epsilon(1e-12));
}

TEST_CASE("haar moments: torus families") {
    auto u1 = haar_moments(builtin_group(BuiltinGroup::U1), CharCoeff::A1, 10);
    CHECK(check_tables(u1, {1, 0, 2, 0, 6, 0, 20, 0, 70, 0, 252}) < 1e-6);

    auto nu1 = haar_moments(builtin_group(BuiltinGroup::N_U1), CharCoeff::A1, 8);
    CHECK(check_tables(nu1, {1, 0, 1, 0, 3, 0, 10, 0, 35}) < 1e-6);

    auto u1a2 = haar_moments(builtin_group(BuiltinGroup::U1), CharCoeff::A2, 8);
    CHECK(check_tables(u1a2, {1, 1, 1, 1, 1, 1, 1, 1, 1}) < 1e-6);

    auto u12 = haar_moments(builtin_group(BuiltinGroup::U1_2), CharCoeff::A1, 10);
    CHECK(check_tables(u12, {1, 0, 8, 0, 96, 0, 1280, 0, 17920, 0, 258048}) < 1e-6);

    auto u13 = haar_moments(builtin_group(BuiltinGroup::U1_3), CharCoeff::A1, 10);
    CHECK(check_tables(u13, {1, 0, 18, 0, 486, 0, 14580, 0, 459270, 0, 14880348}) < 1e-6);

    auto u12xu1 = haar_moments(builtin_group(BuiltinGroup::U1_2xU1), CharCoeff::A1, 10);
    CHECK(check_tables(u12xu1, {1, 0, 10, 0, 198, 0, 4900, 0, 134470, 0, 3912300}) < 1e-6);
}

TEST_CASE("haar moments: genus-3 groups") {
    STGroup c1 = builtin_group(BuiltinGroup::ST_C1_generic);
    CHECK(check_tables(haar_moments(c1, CharCoeff::A1, 8),
                       {1, 0, 2, 0, 24, 0, 470, 0, 11235}) < 1e-6);
    CHECK(check_tables(haar_moments(c1, CharCoeff::A2, 8),
                       {1, 2, 9, 56, 492, 5172, 59691, 726945, 9178434}) < 1e-6);
    CHECK(check_tables(haar_moments(c1, CharCoeff::A3, 8),
                       {1, 0, 9, 0, 1245, 0, 284880, 0, 79208745}) < 1e-6);

    STGroup c2 = builtin_group(BuiltinGroup::ST_C2_generic);
    CHECK(check_tables(haar_moments(c2, CharCoeff::A1, 8),
                       {1, 0, 2, 0, 30, 0, 720, 0, 20650}) < 1e-6);
    CHECK(check_tables(haar_moments(c2, CharCoeff::A2, 8),
                       {1, 2, 10, 75, 784, 9607, 126378, 1721715, 23928108}) < 1e-6);
    CHECK(check_tables(haar_moments(c2, CharCoeff::A3, 8),
                       {1, 0, 11, 0, 2181, 0, 660790, 0, 224864661}) < 1e-6);
}

TEST_CASE("quadrature is exact once fine enough") {
    CHECK_THROWS_AS((void)haar_moments(builtin_group(BuiltinGroup::U1), CharCoeff::A1, 10, 30),
                    std::invalid_argument);

    auto coarse = haar_moments(builtin_group(BuiltinGroup::U1), CharCoeff::A1, 10, 31);
    auto fine = haar_moments(builtin_group(BuiltinGroup::U1), CharCoeff::A1, 10, 256);
    for (size_t n = 0; n < coarse.values.size(); ++n)
        CHECK(std::fabs(coarse.values[n] - fine.values[n]) < 1e-12);

    auto c2_coarse = haar_moments(builtin_group(BuiltinGroup::ST_C2_generic), CharCoeff::A3, 4, 13);
    auto c2_fine = haar_moments(builtin_group(BuiltinGroup::ST_C2_generic), CharCoeff::A3, 4, 64);
    for (size_t n = 0; n < c2_coarse.values.size(); ++n)
        CHECK(std::fabs(c2_coarse.values[n] - c2_fine.values[n]) < 1e-9);
}

TEST_CASE("direct-sum convolution and scaling") {
    auto u1 = haar_moments(builtin_group(BuiltinGroup::U1), CharCoeff::A1, 10);
    auto u12 = haar_moments(builtin_group(BuiltinGroup::U1_2), CharCoeff::A1, 10);
    auto conv = binomial_convolution(u12, u1);
    auto direct = haar_moments(builtin_group(BuiltinGroup::U1_2xU1), CharCoeff::A1, 10);
    for (size_t n = 0; n < conv.values.size(); ++n)
        CHECK(std::fabs(conv.values[n] - direct.values[n]) < 1e-9);
    CHECK(conv.values[8] == doctest::Approx(134470).epsilon(1e-12));

    auto scaled = scaled_moments(u1, 3);
    auto u13 = haar_moments(builtin_group(BuiltinGroup::U1_3), CharCoeff::A1, 10);
    for (size_t n = 0; n < scaled.values.size(); ++n)
        CHECK(std::fabs(scaled.values[n] - u13.values[n]) <=
              1e-12 * std::max(1.0, std::fabs(u13.values[n])));

    auto a2 = haar_moments(builtin_group(BuiltinGroup::U1), CharCoeff::A2, 4);
    CHECK_THROWS_AS((void)binomial_convolution(u1, a2), std::invalid_argument);
}

TEST_CASE("moments are invariant under symplectic-unitary conjugation") {
    for (BuiltinGroup b : {BuiltinGroup::ST_C1_generic, BuiltinGroup::ST_C2_generic}) {
        STGroup G = builtin_group(b);
        std::vector<double> angles(G.n_params == 2 ? std::vector<double>{0.7, 0.3}
                                                   : std::vector<double>{0.7});
        CMat w = mul(G.gens[0], mul(G.gens[1], torus_element(G, angles)));
        STGroup H = conjugate_group(G, w);

        CMat h = symplectic_form(G.g);
        for (const CMat& g : H.gens) {
            CHECK(max_abs_diff(mul(g, adjoint(g)), CMat::ident(2 * G.g)) < 1e-12);
            CHECK(max_abs_diff(sandwich(transpose(g), h, g), h) < 1e-12);
        }
        CHECK(in_torus(H, torus_element(H, angles)));
        CHECK(enumerate_components(H).size() == enumerate_components(G).size());

        for (CharCoeff cc : {CharCoeff::A1, CharCoeff::A2, CharCoeff::A3}) {
            auto mg = haar_moments(G, cc, 6);
            auto mh = haar_moments(H, cc, 6);
            for (size_t n = 0; n < mg.values.size(); ++n)
                CHECK(std::fabs(mg.values[n] - mh.values[n]) <
                      1e-8 * std::max(1.0, std::fabs(mg.values[n])));
        }
    }
}

TEST_CASE("component representatives stay symplectic unitary") {
    STGroup G = builtin_group(BuiltinGroup::ST_C2_generic);
    CMat h = symplectic_form(3);
    for (const CMat& g : enumerate_components(G)) {
        CHECK(max_abs_diff(mul(g, adjoint(g)), CMat::ident(6)) < 1e-12);
        CHECK(max_abs_diff(sandwich(transpose(g), h, g), h) < 1e-12);
    }
}
