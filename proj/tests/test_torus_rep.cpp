#include <doctest.h>

#include "metaplectic/torus_rep.hpp"

using namespace metaplectic;

namespace {

GenuineTorusChar sample_char(const PadicContext& ctx) {
    std::vector<Character> xi{Character::from_data(ctx, 1, ZpVal::root_of_unity(1, 4))};
    Character xi0 = Character::eta_char(ctx, Rat(2));
    return GenuineTorusChar(std::move(xi), std::move(xi0), PsiSpec(ctx));
}

} // namespace

TEST_CASE("genuine torus characters are multiplicative on the covered T+") {
    PadicContext ctx(3);
    GenuineTorusChar chi = sample_char(ctx);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto pt = [&](bool) {
            Rat t(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 9));
            if (rng() % 2) t = -t;
            Rat s(1 + static_cast<long>(rng() % 9));
            return CoverElement{make_torus({t}, s * s), (rng() % 2) ? 1 : -1};
        };
        CoverElement a = pt(true), b = pt(true);
        Cplx lhs = chi.evaluate(cover_mul(a, b, ctx));
        Cplx rhs = chi.evaluate(a) * chi.evaluate(b);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // non-square similitude is rejected
    CHECK_THROWS(chi.evaluate(CoverElement{make_torus({Rat(1)}, Rat(3)), 1}));
}

TEST_CASE("induced representation basics") {
    PadicContext ctx(3);
    TorusRep rho = induce(sample_char(ctx));
    CHECK(rho.dim() == 4);
    CHECK(rho.evaluate({sp_identity(1), 1}).dist(CplxMat::identity(4)) < 1e-12);
    CHECK(rho.evaluate({sp_identity(1), -1}).dist(CplxMat::identity(4).scaled(-1.0)) < 1e-12);
    // homomorphism across cosets
    std::mt19937_64 rng(32);
    auto classes = all_classes(ctx);
    for (int i = 0; i < 300; ++i) {
        Rat t1(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 9));
        Rat t2(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 9));
        Rat l1 = classes[rng() % 4].rep() * Rat(1 + static_cast<long>(rng() % 5));
        Rat l2 = classes[rng() % 4].rep();
        if (rng() % 2) l1 = l1 * Rat(1, 1 + static_cast<long>(rng() % 5));
        CoverElement a{make_torus({t1}, l1 * l1) , 1};
        a = {make_torus({t1}, classes[rng() % 4].rep()), (rng() % 2) ? 1 : -1};
        CoverElement b{make_torus({t2}, l2), (rng() % 2) ? 1 : -1};
        CplxMat lhs = rho.evaluate(cover_mul(a, b, ctx));
        CplxMat rhs = rho.evaluate(a) * rho.evaluate(b);
        CHECK(lhs.dist(rhs) < 1e-10);
    }
}

TEST_CASE("restriction decomposes with multiplicity one") {
    PadicContext ctx(3);
    TorusRep rho = induce(sample_char(ctx));
    auto decomp = restrict_decompose(rho);
    CHECK(decomp.size() == 4);
    long total = 0;
    for (const auto& [w, dim] : decomp) {
        CHECK(dim == 1);
        total += dim;
    }
    CHECK(total == 4);
    // eigen-projections: idempotent, orthogonal, complete
    std::vector<CplxMat> projs;
    for (const auto& [w, dim] : decomp) projs.push_back(eigen_project(rho, w));
    CplxMat sum(4);
    for (const auto& p : projs) sum = sum + p;
    CHECK(sum.dist(CplxMat::identity(4)) < 1e-12);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j)
                CHECK((projs[i] * projs[i]).dist(projs[i]) < 1e-12);
            else
                CHECK((projs[i] * projs[j]).max_abs() < 1e-12);
        }
}

TEST_CASE("induction roundtrip") {
    PadicContext ctx(3);
    std::mt19937_64 rng(33);
    for (int i = 0; i < 8; ++i) {
        std::vector<Character> xi{Character::from_data(
            ctx, static_cast<long>(rng() % 2),
            i % 3 == 2 ? ZpVal::real_power(2.0) // non-unitary data stays algebraic
                       : ZpVal::root_of_unity(static_cast<long>(rng() % 8), 8))};
        GenuineTorusChar chi(std::move(xi), Character::trivial(ctx), PsiSpec(ctx));
        TorusRep rho = induce(chi);
        auto decomp = restrict_decompose(rho);
        for (const auto& [w, dim] : decomp) CHECK(induction_roundtrip(rho, w));
    }
}
