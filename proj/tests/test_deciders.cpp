#include <doctest.h>

#include "metaplectic/deciders.hpp"

using namespace metaplectic;

namespace {
PrincipalSeriesDatum datum2(const PadicContext& ctx, const Character& a, const Character& b) {
    return {2, {a, b}, PsiSpec(ctx), std::nullopt};
}
} // namespace

TEST_CASE("weyl orbits") {
    PadicContext ctx(3);
    Character triv = Character::trivial(ctx);
    CHECK(weyl_orbit(datum2(ctx, triv, triv)).size() == 1);
    Character absc = Character::abs_power(ctx, 1.0);
    auto orb = weyl_orbit(datum2(ctx, absc, triv));
    CHECK(orb.size() == 4); // (|.|^{+-1}, triv) and swaps
}

TEST_CASE("gsp4 reducibility conditions") {
    PadicContext ctx(3);
    Character triv = Character::trivial(ctx);
    // II: the |.|^{s +- 1/2} family
    Character xi = Character::eta_char(ctx, Rat(2));
    Verdict v2 = gsp4_reducibility(
        datum2(ctx, xi * Character::abs_power(ctx, 0.8), xi * Character::abs_power(ctx, -0.2)));
    CHECK(v2.status == VerdictStatus::Reducible);
    CHECK(v2.witness.substr(0, 2) == "II");
    // III: chi_2 = eta_b |.|^{1/2}
    Verdict v3 = gsp4_reducibility(datum2(
        ctx, Character::from_data(ctx, 1, ZpVal::root_of_unity(1, 8)),
        Character::eta_char(ctx, Rat(3)) * Character::abs_power(ctx, 0.5)));
    CHECK(v3.status == VerdictStatus::Reducible);
    CHECK(v3.witness.substr(0, 3) == "III");
    // I: the order-4 datum, witnessed by (chi^{-1}, chi^{-1}) = (chi eta_u, chi eta_u)
    Character c4 = Character::unramified_order4(ctx);
    Verdict v1 = gsp4_reducibility(datum2(ctx, c4, c4));
    CHECK(v1.status == VerdictStatus::Reducible);
    CHECK(v1.witness.substr(0, 2) == "I:");
    // generic unitary pair: irreducible
    Verdict vg = gsp4_reducibility(
        datum2(ctx, Character::from_data(ctx, 0, ZpVal::from_complex(std::polar(1.0, 1.0))),
               Character::from_data(ctx, 0, ZpVal::from_complex(std::polar(1.0, 2.0)))));
    CHECK(vg.status == VerdictStatus::Irreducible);
    CHECK(!vg.orbit.empty());
    // p = 2 rejected
    PadicContext c2(2);
    Character t2 = Character::trivial(c2);
    CHECK_THROWS_AS(gsp4_reducibility(datum2(c2, t2, t2)), UnsupportedPrime);
}

TEST_CASE("odd unitary rule") {
    PadicContext ctx(5);
    Character u1 = Character::from_data(ctx, 1, ZpVal::root_of_unity(1, 3));
    Character u2 = Character::from_data(ctx, 2, ZpVal::root_of_unity(1, 5));
    Character u3 = Character::from_data(ctx, 3, ZpVal::root_of_unity(2, 7));
    Verdict v = odd_unitary_rule({3, {u1, u2, u3}, PsiSpec(ctx), std::nullopt});
    CHECK(v.status == VerdictStatus::Irreducible);
    // n = 2 delegates to the GSp(4) decider
    Character c4 = Character::unramified_order4(ctx);
    CHECK(odd_unitary_rule({2, {c4, c4}, PsiSpec(ctx), std::nullopt}).status ==
          VerdictStatus::Reducible);
    // n = 4 unitary: reducible examples exist, but no classification: Unknown
    CHECK(odd_unitary_rule({4, {c4, c4, c4, c4}, PsiSpec(ctx), std::nullopt}).status ==
          VerdictStatus::Unknown);
    // non-unitary input falls outside the rule
    CHECK(odd_unitary_rule({3, {Character::abs_power(ctx, 1.0), u1, u2}, PsiSpec(ctx),
                            std::nullopt})
              .status == VerdictStatus::Unknown);
}

TEST_CASE("counterexample construction") {
    for (long p : {3L, 5L, 7L}) {
        PadicContext ctx(p);
        auto [datum, log] = counterexample_build(ctx);
        CHECK(log.all_ok());
        CHECK(datum.n == 2);
        CHECK(log.chi.order() == 4);
        // chi eta_b(p) = i * (-1) = -i = chi^{-1}(p)
        Character twisted = log.chi * Character::eta_char(ctx, log.b.rep());
        CHECK(std::abs(twisted.evaluate(Rat(p)) - Cplx(0, -1)) < 1e-12);
        CHECK(std::abs(log.chi.inverse().evaluate(Rat(p)) - Cplx(0, -1)) < 1e-12);
        // b is the least non-residue unit
        CHECK(log.b.rep() == Rat(least_nonresidue(p)));
        // the datum lands in condition I
        Verdict v = gsp4_reducibility(datum);
        CHECK(v.status == VerdictStatus::Reducible);
        CHECK(v.witness.substr(0, 2) == "I:");
    }
    CHECK(counterexample_build(PadicContext(5), 2).second.parity_constraint);
}

TEST_CASE("whittaker orbit counts") {
    PadicContext c3(3);
    // one orbit under T' for every shape
    for (const char* s : {"1;1", "2;0", "1,1;0", "2;1", ";2"}) {
        LeviShape t = parse_shape(s);
        if (nondeg_coeff_count(t) == 0) continue;
        CHECK(whittaker_orbit_count(t, TorusGroup::Tprime, c3).count == 1);
    }
    // shape (1;1) under T at p = 3: [F*:F*^2] = 4 orbits with psi^{i(a)} reps
    WhittakerOrbits w = whittaker_orbit_count(parse_shape("1;1"), TorusGroup::T, c3);
    CHECK(w.count == 4);
    std::set<int> longs;
    for (const auto& r : w.reps) longs.insert(r.coeffs.back().index());
    CHECK(longs.size() == 4);
    // tail zero: single orbit under T
    CHECK(whittaker_orbit_count(parse_shape("2;0"), TorusGroup::T, c3).count == 1);
    CHECK(whittaker_orbit_count(parse_shape("1,1;0"), TorusGroup::T, c3).count == 1);
    // T+ behaves like T on coefficient classes
    CHECK(whittaker_orbit_count(parse_shape(";2"), TorusGroup::Tplus, c3).count == 4);
    // orbit-stabilizer consistency
    for (std::size_t k = 0; k < w.reps.size(); ++k)
        CHECK(whittaker_stabilizer_order(parse_shape("1;1"), TorusGroup::T, c3, w.reps[k]) *
                  w.orbit_sizes[k] ==
              w.acting_group_order);
}

TEST_CASE("torus group parsing") {
    CHECK(parse_torus_group("T") == TorusGroup::T);
    CHECK(parse_torus_group("T+") == TorusGroup::Tplus);
    CHECK(parse_torus_group("T'") == TorusGroup::Tprime);
    CHECK_THROWS(parse_torus_group("B"));
}
