#include <doctest.h>

#include "metaplectic/symplectic.hpp"

using namespace metaplectic;

namespace {
PadicContext ctx3() { return PadicContext(3); }
}

TEST_CASE("make_gsp and similitude") {
    PadicContext ctx = ctx3();
    CHECK(make_gsp(RatMat::identity(4), ctx).lambda() == 1);
    GSpElement il = i_lambda(2, Rat(5));
    CHECK(il.lambda() == 5);
    CHECK(make_gsp(il.mat(), ctx).lambda() == 5);
    GSpElement j = make_gsp(RatMat::symplectic_form(2), ctx);
    CHECK(j.lambda() == 1);

    RatMat bad = RatMat::identity(4);
    bad(0, 1) = 7;
    CHECK_THROWS_AS(make_gsp(bad, ctx), NotSimilitude);
    // lambda is multiplicative
    std::mt19937_64 rng(1);
    GSpElement a = random_gsp(2, ctx, rng), b = random_gsp(2, ctx, rng);
    CHECK((a * b).lambda() == a.lambda() * b.lambda());
    CHECK(make_gsp((a * b).mat(), ctx).lambda() == a.lambda() * b.lambda());
}

TEST_CASE("g_one") {
    PadicContext ctx = ctx3();
    std::mt19937_64 rng(2);
    GSpElement s = random_sp(2, ctx, rng);
    CHECK(g_one(s) == s);
    CHECK(g_one(i_lambda(2, Rat(4))) == sp_identity(2));
    GSpElement g = i_lambda(2, Rat(4)) * s;
    CHECK(g_one(g) == s);
    CHECK(g == i_lambda(2, g.lambda()) * g_one(g));
}

TEST_CASE("embed_i_rn") {
    PadicContext ctx = ctx3();
    CHECK(embed_i_rn(sp_identity(1), 1, 3) == sp_identity(3));
    std::mt19937_64 rng(3);
    GSpElement h = random_gsp(1, ctx, rng);
    CHECK(embed_i_rn(h, 1, 1) == h);
    GSpElement e = embed_i_rn(h, 1, 3);
    CHECK(e.lambda() == h.lambda());
    CHECK(make_gsp(e.mat(), ctx).lambda() == h.lambda());
    GSpElement s = random_sp(1, ctx, rng);
    CHECK(embed_i_rn(s, 1, 2).is_sp());
    CHECK_THROWS_AS(embed_i_rn(h, 1, 0), ShapeMismatch);
    // homomorphism through the embedding
    GSpElement h2 = random_gsp(1, ctx, rng);
    CHECK(embed_i_rn(h, 1, 3) * embed_i_rn(h2, 1, 3) == embed_i_rn(h * h2, 1, 3));
}

TEST_CASE("cell rank") {
    PadicContext ctx = ctx3();
    RatMat s(2, 2);
    s(0, 1) = Rat(1, 2);
    s(1, 0) = Rat(1, 2);
    CHECK(cell_rank(shear_u(s)) == 0);
    CHECK(cell_rank(make_gsp(RatMat::symplectic_form(2), ctx)) == 2);
    CHECK(cell_rank(embed_i_rn(tau_cell(1, 1), 1, 2)) == 1); // crafted rank-1 corner
    CHECK(cell_rank(i_lambda(3, Rat(7)) * tau_cell(3, 2)) == 2); // GSp input via g_1
}

TEST_CASE("bruhat factorization") {
    PadicContext ctx = ctx3();
    std::mt19937_64 rng(4);
    // Omega_0 inputs factor trivially
    GSpElement p = random_omega0(2, ctx, rng);
    auto f0 = bruhat_factor(p, ctx);
    CHECK(f0.j == 0);
    CHECK(f0.p1 == p);
    CHECK(f0.p2 == sp_identity(2));
    // J_{2n} roundtrip
    for (std::size_t n : {1u, 2u, 3u}) {
        GSpElement j = make_gsp(RatMat::symplectic_form(n), ctx);
        auto f = bruhat_factor(j, ctx);
        CHECK(f.j == n);
        CHECK(f.p1 * f.tau * f.p2 == j);
    }
    // random roundtrips with randomized pivots
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 2 + rng() % 2;
        GSpElement g = random_sp(n, ctx, rng);
        std::mt19937_64 pivots(rng());
        auto f = bruhat_factor(g, ctx, &pivots);
        CHECK(f.p1 * f.tau * f.p2 == g);
        CHECK(in_omega0(f.p1));
        CHECK(in_omega0(f.p2));
        CHECK(f.j == cell_rank(g));
    }
}

TEST_CASE("x map") {
    PadicContext ctx = ctx3();
    // Omega_0: det of the a-block
    RatMat a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 1;
    CHECK(x_of(levi_m(a), ctx) == square_class(Rat(2), ctx));
    CHECK(x_of(sp_identity(3), ctx) == square_class(Rat(1), ctx));
    // Kubota calibration: x(J_2) = class(-1) = class(2) at p = 3
    CHECK(x_of(tau_cell(1, 1), ctx) == square_class(Rat(-1), ctx));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        GSpElement g = random_sp(1, ctx, rng);
        CHECK(x_of(g, ctx) == x_kubota(g, ctx));
    }
}

TEST_CASE("random generator contract") {
    PadicContext ctx = ctx3();
    std::mt19937_64 r1(99), r2(99);
    CHECK(random_sp(2, ctx, r1) == random_sp(2, ctx, r2)); // determinism
    std::mt19937_64 rng(7);
    std::vector<bool> seen(3, false);
    for (int i = 0; i < 1000; ++i) {
        GSpElement g = random_sp(2, ctx, rng);
        CHECK(g.is_sp());
        seen[cell_rank(g)] = true;
    }
    CHECK((seen[0] && seen[1] && seen[2])); // all cells reached
}
