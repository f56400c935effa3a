#include <doctest.h>

#include "metaplectic/center.hpp"

using namespace metaplectic;

TEST_CASE("cocycle on Omega_0 and unipotents") {
    PadicContext ctx(3);
    std::mt19937_64 rng(11);
    // unipotents have x = 1, so the cocycle splits
    RatMat s(2, 2);
    s(0, 0) = Rat(1, 2);
    RatMat z = RatMat::identity(2);
    z(0, 1) = 3;
    auto v = cocycle_sp(shear_u(s), levi_m(z), ctx);
    CHECK(v.sign == 1);
    CHECK(v.path == CocyclePath::OmegaZeroLeft);
    // c(g, g^{-1}) = (x(g), -1) for g in Omega_0
    for (int i = 0; i < 50; ++i) {
        GSpElement g = random_omega0(2, ctx, rng);
        int want = hilbert_symbol(x_of(g, ctx).rep(), Rat(-1), ctx);
        CHECK(cocycle_sp(g, g.inverse(), ctx).sign == want);
    }
}

TEST_CASE("kubota closed form is a 2-cocycle and matches the rules") {
    PadicContext ctx(5);
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        GSpElement a = random_sp(1, ctx, rng), b = random_sp(1, ctx, rng),
                   c = random_sp(1, ctx, rng);
        CHECK(kubota_cocycle(a, b, ctx) * kubota_cocycle(a * b, c, ctx) ==
              kubota_cocycle(a, b * c, ctx) * kubota_cocycle(b, c, ctx));
        CHECK(cocycle_sp(a, b, ctx).sign == kubota_cocycle(a, b, ctx));
    }
}

TEST_CASE("no rule for big-cell pairs at n = 2") {
    PadicContext ctx(3);
    GSpElement j = make_gsp_unchecked(RatMat::symplectic_form(2), 1);
    RatMat s(2, 2);
    s(0, 0) = 1;
    GSpElement g = j * shear_u(s) * j; // both factors land outside Omega_0
    GSpElement h = j * shear_u(s);
    REQUIRE(cell_rank(h) == 2);
    CHECK_THROWS_AS(cocycle_sp(h, h, ctx), UnsupportedCocyclePath);
    (void)g;
}

TEST_CASE("v_lambda") {
    PadicContext ctx(3);
    std::mt19937_64 rng(13);
    // lambda a square: trivial on Omega_0
    GSpElement p = random_omega0(2, ctx, rng);
    CHECK(v_lambda(p, Rat(4), ctx) == 1);
    // j = 0 with x(g) = u: the value is (u, lambda)
    RatMat a = RatMat::identity(2);
    a(0, 0) = 2;
    for (const auto& l : all_classes(ctx))
        CHECK(v_lambda(levi_m(a), l.rep(), ctx) == hilbert_symbol(Rat(2), l.rep(), ctx));
    // g = J_2 (j = 1): exponent j + 1 kills the first factor
    for (const auto& l : all_classes(ctx)) CHECK(v_lambda(tau_cell(1, 1), l.rep(), ctx) == 1);
}

TEST_CASE("extension cocycle") {
    PadicContext ctx(3);
    std::mt19937_64 rng(14);
    // c~(i(y), s) = 1
    for (int i = 0; i < 100; ++i) {
        Rat y = Rat(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 7));
        if (rng() % 2) y = -y;
        GSpElement s = random_gsp(1 + rng() % 2, ctx, rng);
        CHECK(cocycle_gsp(i_lambda(s.n(), y), s, ctx).sign == 1);
    }
    // restriction to Sp x Sp agrees with cocycle_sp
    for (int i = 0; i < 200; ++i) {
        GSpElement a = random_sp(1, ctx, rng), b = random_sp(1, ctx, rng);
        CHECK(cocycle_gsp(a, b, ctx).sign == cocycle_sp(a, b, ctx).sign);
    }
    // full 2-cocycle identity over GSp(2) through the Kubota base
    for (int i = 0; i < 500; ++i) {
        GSpElement a = random_gsp(1, ctx, rng), b = random_gsp(1, ctx, rng),
                   c = random_gsp(1, ctx, rng);
        int lhs = cocycle_gsp(a, b, ctx).sign * cocycle_gsp(a * b, c, ctx).sign;
        int rhs = cocycle_gsp(a, b * c, ctx).sign * cocycle_gsp(b, c, ctx).sign;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cover multiplication and inverse") {
    PadicContext ctx(3);
    std::mt19937_64 rng(15);
    CoverElement id = cover_identity(1);
    for (int i = 0; i < 100; ++i) {
        CoverElement s{random_gsp(1, ctx, rng), (rng() % 2) ? 1 : -1};
        CHECK(cover_mul(s, id, ctx) == s);
        CHECK(cover_mul(id, s, ctx) == s);
        CoverElement inv = cover_inverse(s, ctx);
        CHECK(cover_mul(s, inv, ctx) == id);
        CHECK(cover_mul(inv, s, ctx) == id);
    }
    // (I, -1) is central of order 2
    CoverElement minus{sp_identity(1), -1};
    CHECK(cover_mul(minus, minus, ctx) == id);
    // associativity over the full n = 1 group law
    for (int i = 0; i < 2000; ++i) {
        CoverElement a{random_gsp(1, ctx, rng), (rng() % 2) ? 1 : -1};
        CoverElement b{random_gsp(1, ctx, rng), (rng() % 2) ? 1 : -1};
        CoverElement c{random_gsp(1, ctx, rng), (rng() % 2) ? 1 : -1};
        CHECK(cover_mul(cover_mul(a, b, ctx), c, ctx) == cover_mul(a, cover_mul(b, c, ctx), ctx));
    }
}

TEST_CASE("conjugation") {
    PadicContext ctx(3);
    std::mt19937_64 rng(16);
    // central conjugator with square similitude: d = 1
    std::vector<Rat> tt{Rat(2), Rat(3)};
    GSpElement center = make_torus(std::vector<Rat>(2, Rat(5)), Rat(25));
    CoverElement tau{make_torus(tt, Rat(1)), 1};
    CHECK(conj_by(center, tau, ctx) == tau);
    // d = (x(h_1), lambda(g)) for central h: the (u, p) = -1 case at p = 3
    GSpElement g = i_lambda(1, Rat(3)); // lambda(g) = p
    CoverElement h{make_torus({Rat(2)}, Rat(1)), 1}; // x(h_1) = u = 2
    CoverElement moved = conj_by(g, h, ctx);
    CHECK(moved.g == h.g);
    CHECK(moved.eps == -1);
    // agreement with the brute-force cover product at n = 1
    for (int i = 0; i < 500; ++i) {
        GSpElement c = random_gsp(1, ctx, rng);
        if (!in_omega0(g_one(c))) continue;
        CoverElement t{random_gsp(1, ctx, rng), (rng() % 2) ? 1 : -1};
        CoverElement sg{c, 1};
        CHECK(conj_by(c, t, ctx) ==
              cover_mul(cover_mul(sg, t, ctx), cover_inverse(sg, ctx), ctx));
    }
    // conjugator outside Omega_0 is rejected
    GSpElement big = tau_cell(2, 2);
    CHECK_THROWS_AS(conj_by(big, tau, ctx), ConjugatorNotOmegaZero);
}
