#include <doctest.h>

#include "metaplectic/characters.hpp"

using namespace metaplectic;

TEST_CASE("character evaluation") {
    PadicContext c3(3);
    Character triv = Character::trivial(c3);
    CHECK(std::abs(triv.evaluate(Rat(17, 5)) - Cplx(1, 0)) < 1e-12);
    Character abs1 = Character::abs_power(c3, 2.0);
    CHECK(std::abs(abs1.evaluate(Rat(3)) - Cplx(1.0 / 9.0, 0)) < 1e-12);
    Character eu = Character::eta_char(c3, Rat(2));
    CHECK(std::abs(eu.evaluate(Rat(3)) - Cplx(-1, 0)) < 1e-12);
    // multiplicativity across valuation/unit decompositions
    Character chi = Character::from_data(c3, 1, ZpVal::root_of_unity(1, 4));
    for (const Rat& a : {Rat(2), Rat(3, 5), Rat(-9, 2)})
        for (const Rat& b : {Rat(7), Rat(1, 3), Rat(-4)})
            CHECK(std::abs(chi.evaluate(a * b) - chi.evaluate(a) * chi.evaluate(b)) < 1e-12);
    CHECK_THROWS_AS(chi.evaluate(Rat(0)), ZeroInput);
}

TEST_CASE("character algebra") {
    PadicContext c5(5);
    Character c4 = Character::unramified_order4(c5);
    CHECK(c4.order() == 4);
    CHECK(c4.is_unitary());
    CHECK(!c4.is_quadratic());
    CHECK((c4 * c4).is_quadratic());
    CHECK(c4.pow(4).is_trivial());
    CHECK(c4.inverse() * c4 == Character::trivial(c5));
    Character eta_u = Character::eta_char(c5, Rat(least_nonresidue(5)));
    CHECK(eta_u.is_quadratic());
    CHECK(eta_u.unit_exp() == 0); // unramified
    CHECK(c4 * eta_u == c4.inverse());
    CHECK(!Character::abs_power(c5, 0.5).is_unitary());
}

TEST_CASE("parse characters") {
    PadicContext c3(3);
    CHECK(parse_character("triv", c3).is_trivial());
    CHECK(parse_character("ord4", c3) == Character::unramified_order4(c3));
    CHECK(parse_character("eta:2", c3) == Character::eta_char(c3, Rat(2)));
    CHECK(parse_character("abs:1.0", c3) == Character::abs_power(c3, 1.0));
    CHECK(parse_character("e=1;zp=0,1", c3) ==
          Character::from_data(c3, 1, ZpVal::root_of_unity(1, 4)));
    CHECK_THROWS_AS(parse_character("level:2", c3), UnsupportedRamification);
}

TEST_CASE("omega sets") {
    PadicContext c3(3);
    PsiSpec psi(c3);
    std::vector<Character> triv2{Character::trivial(c3), Character::trivial(c3)};
    CHECK(omega_set(triv2, LeviShape{{2}, 0}, psi).size() == 1);
    auto os = omega_set(triv2, LeviShape{{1}, 0}, psi);
    CHECK(os.size() == 4);
    // pairwise distinct on z_t representatives
    auto reps = z_t_reps(LeviShape{{1}, 0}, c3);
    for (std::size_t i = 0; i < os.size(); ++i)
        for (std::size_t j = i + 1; j < os.size(); ++j) {
            bool differ = false;
            for (const auto& z : reps)
                if (std::abs(os[i].evaluate(z) - os[j].evaluate(z)) > 1e-9) differ = true;
            CHECK(differ);
        }
    // all extensions agree on Z(M'): x trivial there
    CentralElement zsq{LeviShape{{1}, 0}, {Rat(4)}, Rat(3), 1};
    REQUIRE(x_on_center(zsq, c3).is_trivial());
    for (std::size_t i = 1; i < os.size(); ++i)
        CHECK(std::abs(os[i].evaluate(zsq) - os[0].evaluate(zsq)) < 1e-12);
    PadicContext c2(2);
    std::vector<Character> triv2p2{Character::trivial(c2), Character::trivial(c2)};
    CHECK(omega_set(triv2p2, LeviShape{{1}, 0}, PsiSpec(c2)).size() == 8);
}

TEST_CASE("conjugation of central characters") {
    PadicContext c3(3);
    PsiSpec psi(c3);
    GenuineCentralCharacter w = genuine_center_char(Character::trivial(c3), psi, 3);
    CHECK(conj_char(w, Rat(1)).equals(w));
    CHECK(conj_char(w, Rat(49)).equals(w));
    GenuineCentralCharacter moved = conj_char(w, Rat(3));
    CHECK(!moved.equals(w));
    // differs at a central element with x(z_1) = u
    CentralElement z{LeviShape{{}, 3}, {}, Rat(2), 1};
    REQUIRE(x_on_center(z, c3) == square_class(Rat(2), c3));
    CHECK(std::abs(moved.evaluate(z) + w.evaluate(z)) < 1e-12); // (3,2)_3 = -1 twist
    // orbit under class twists has full size
    std::vector<GenuineCentralCharacter> orbit;
    for (const auto& a : all_classes(c3)) {
        GenuineCentralCharacter t = conj_char(w, a.rep());
        bool dup = false;
        for (const auto& o : orbit) dup = dup || o.equals(t);
        if (!dup) orbit.push_back(t);
    }
    CHECK(orbit.size() == 4);
}

TEST_CASE("genuine scalar-center characters") {
    PadicContext c5(5);
    PsiSpec psi(c5);
    WeilTable wt(psi);
    Character ep = Character::eta_char(c5, Rat(2));
    // n even: gamma factor disappears, value is eps eta'(a)
    GenuineCentralCharacter even = genuine_center_char(ep, psi, 2);
    for (const Rat& a : {Rat(2), Rat(5), Rat(7, 3)}) {
        CentralElement z{LeviShape{{}, 2}, {}, a, -1};
        CHECK(std::abs(even.evaluate(z) - Cplx(-1, 0) * ep.evaluate(a)) < 1e-12);
    }
    // n = 1 at a = p: eps eta'(p) gamma(p)
    GenuineCentralCharacter odd = genuine_center_char(ep, psi, 1);
    CentralElement zp{LeviShape{{}, 1}, {}, Rat(5), 1};
    CHECK(std::abs(odd.evaluate(zp) - ep.evaluate(Rat(5)) * wt.gamma(Rat(5)).value()) < 1e-12);
    // genuineness
    CentralElement zneg{LeviShape{{}, 1}, {}, Rat(1), -1};
    CHECK(std::abs(odd.evaluate(zneg) + Cplx(1, 0)) < 1e-12);
}

TEST_CASE("duality central identity") {
    PadicContext c3(3);
    PsiSpec psi(c3);
    for (long n : {1L, 2L, 3L}) {
        CHECK(dual_central_identity(Character::trivial(c3), psi, n));
        CHECK(dual_central_identity(Character::eta_char(c3, Rat(2)), psi, n));
        CHECK(dual_central_identity(Character::unramified_order4(c3), psi, n));
        CHECK(dual_central_identity(Character::abs_power(c3, 1.5), psi, n));
    }
}
