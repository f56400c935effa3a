#include "metaplectic/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace metaplectic {

namespace {

constexpr std::size_t kMaxStoredFailures = 25;

struct Checker {
    SuiteReport& rep;

    void check(bool ok, const std::string& input, const std::string& expected,
               const std::string& actual) {
        ++rep.checks;
        if (!ok && rep.failures.size() < kMaxStoredFailures)
            rep.failures.push_back({input, expected, actual});
        else if (!ok)
            rep.failures.back().actual += ""; // counted via checks vs failures? keep bounded
    }
    void check_eq(bool ok, const std::string& input, const std::string& what) {
        check(ok, input, what, ok ? what : "violated");
    }
};

Rat random_rational(std::mt19937_64& rng, long p, bool with_valuation = true) {
    auto draw = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    long num = draw(-99, 99);
    while (num == 0) num = draw(-99, 99);
    long den = draw(1, 99);
    Rat r(num, den);
    if (with_valuation) {
        long v = draw(-2, 2);
        for (; v > 0; --v) r *= p;
        for (; v < 0; ++v) r /= p;
    }
    return r;
}

std::string fr_str(const FourthRoot& f) { return f.str(); }

std::string cx_str(const Cplx& z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

std::vector<LeviShape> shapes_up_to(long nmax) {
    std::vector<LeviShape> out;
    // all compositions of n - tail, for every n <= nmax and tail
    std::function<void(long, LeviShape&)> rec = [&](long rem, LeviShape& cur) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = 1; part <= rem; ++part) {
            cur.parts.push_back(part);
            rec(rem - part, cur);
            cur.parts.pop_back();
        }
    };
    for (long n = 1; n <= nmax; ++n)
        for (long tail = 0; tail <= n; ++tail) {
            LeviShape cur{{}, tail};
            rec(n - tail, cur);
        }
    return out;
}

// ---------------------------------------------------------------- hilbert suite

void suite_hilbert(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    auto classes = all_classes(ctx);
    // closed form vs solvability oracle on random pairs
    for (long i = 0; i < samples; ++i) {
        Rat a = random_rational(rng, ctx.p);
        Rat b = random_rational(rng, ctx.p);
        int h = hilbert_symbol(a, b, ctx);
        int o = hilbert_oracle(a, b, ctx);
        ck.check(h == o, "(" + rat_str(a) + "," + rat_str(b) + ")_" + std::to_string(ctx.p),
                 "oracle " + std::to_string(o), "closed " + std::to_string(h));
    }
    // bilinearity, symmetry, (a,b) = (a,-ab), non-degeneracy over classes
    for (const auto& a : classes)
        for (const auto& b : classes) {
            int ab = hilbert_symbol(a.rep(), b.rep(), ctx);
            ck.check(ab == hilbert_symbol(b.rep(), a.rep(), ctx),
                     "symmetry " + rat_str(a.rep()) + "," + rat_str(b.rep()), "symmetric",
                     "asymmetric");
            ck.check(ab == hilbert_symbol(a.rep(), -a.rep() * b.rep(), ctx),
                     "(a,b)=(a,-ab) " + rat_str(a.rep()) + "," + rat_str(b.rep()), "equal",
                     "unequal");
            for (const auto& c : classes) {
                int lhs = hilbert_symbol(a.rep() * b.rep(), c.rep(), ctx);
                int rhs = hilbert_symbol(a.rep(), c.rep(), ctx) *
                          hilbert_symbol(b.rep(), c.rep(), ctx);
                ck.check(lhs == rhs,
                         "bilinearity " + rat_str(a.rep()) + "," + rat_str(b.rep()) + "," +
                             rat_str(c.rep()),
                         "multiplicative", "not multiplicative");
            }
        }
    for (const auto& a : classes) {
        if (a.is_trivial()) continue;
        bool found = false;
        for (const auto& b : classes)
            if (hilbert_symbol(a.rep(), b.rep(), ctx) == -1) found = true;
        ck.check(found, "non-degeneracy at " + rat_str(a.rep()), "some (a,b) = -1", "none");
    }
    // class arithmetic: canonicalization is idempotent and class-invariant
    for (long i = 0; i < samples / 10 + 10; ++i) {
        Rat a = random_rational(rng, ctx.p);
        SquareClass c = square_class(a, ctx);
        Rat s = random_rational(rng, ctx.p, false);
        ck.check(square_class(a * s * s, ctx) == c, "class invariance " + rat_str(a),
                 "same class", "class moved");
        ck.check(square_class(c.rep(), ctx) == c, "idempotence " + rat_str(a), "fixed",
                 "not fixed");
    }
}

// ------------------------------------------------------------------- weil suite

void suite_weil(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    auto classes = all_classes(ctx);
    PsiSpec psi(ctx);
    bool exact = ctx.p != 2;
    WeilTable wt(psi);
    // gamma(ab) = gamma(a) gamma(b) (a,b) over class pairs
    for (const auto& a : classes)
        for (const auto& b : classes) {
            FourthRoot lhs = wt.gamma(a.rep() * b.rep());
            FourthRoot rhs =
                wt.gamma(a) * wt.gamma(b) * hilbert_symbol(a.rep(), b.rep(), ctx);
            ck.check(lhs == rhs, "gammaprop " + rat_str(a.rep()) + "," + rat_str(b.rep()),
                     fr_str(rhs), fr_str(lhs));
        }
    // gamma_{psi_b} = eta_b gamma_psi over class pairs
    for (const auto& b : classes) {
        PsiSpec psib(ctx, b.rep());
        WeilTable wtb(psib);
        for (const auto& a : classes) {
            FourthRoot lhs = wtb.gamma(a);
            FourthRoot rhs = wt.gamma(a) * hilbert_symbol(b.rep(), a.rep(), ctx);
            ck.check(lhs == rhs, "shifted gamma b=" + rat_str(b.rep()) + " a=" + rat_str(a.rep()),
                     fr_str(rhs), fr_str(lhs));
        }
    }
    // gamma trivial on squares
    for (long i = 0; i < std::min(samples / 50 + 4, 24L); ++i) {
        Rat s = random_rational(rng, ctx.p);
        FourthRoot g = wt.gamma(s * s);
        ck.check(g == FourthRoot::one(), "gamma(square) s=" + rat_str(s), "1", fr_str(g));
    }
    if (exact) {
        // gamma(p)^2 = (p,p)
        FourthRoot g2 = wt.gamma(Rat(ctx.p)) * wt.gamma(Rat(ctx.p));
        int pp = hilbert_symbol(Rat(ctx.p), Rat(ctx.p), ctx);
        ck.check(g2 == FourthRoot::one() * pp, "gamma(p)^2 = (p,p)", std::to_string(pp),
                 fr_str(g2));
    }
    // table vs the stabilized Gauss-sum oracle
    for (const auto& a : classes) {
        Cplx o = weil_gauss_oracle(psi, a.rep());
        double diff = std::abs(o - wt.gamma(a).value());
        ck.check(diff < 1e-9, "oracle vs table at " + rat_str(a.rep()), "within 1e-9",
                 "diff " + std::to_string(diff));
    }
}

// ------------------------------------------------------------------- xmap suite

void suite_xmap(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    auto classes = all_classes(ctx);
    // n = 1 Kubota convention
    for (long i = 0; i < samples / 2 + 50; ++i) {
        GSpElement g = random_sp(1, ctx, rng);
        ck.check(x_of(g, ctx) == x_kubota(g, ctx), "n=1 kubota sample " + std::to_string(i),
                 "agree", "disagree");
    }
    for (std::size_t n : {2u, 3u}) {
        std::vector<bool> rank_seen(n + 1, false);
        for (long i = 0; i < samples; ++i) {
            GSpElement g = random_sp(n, ctx, rng);
            std::size_t j = cell_rank(g);
            rank_seen[j] = true;
            SquareClass xg = x_of(g, ctx);
            // eq. (2.4)
            GSpElement p1 = random_omega0(n, ctx, rng);
            GSpElement p2 = random_omega0(n, ctx, rng);
            SquareClass lhs = x_of(p1 * g * p2, ctx);
            SquareClass rhs = x_of(p1, ctx) * xg * x_of(p2, ctx);
            ck.check(lhs == rhs, "x(p1 g p2) n=" + std::to_string(n) + " i=" + std::to_string(i),
                     rat_str(rhs.rep()), rat_str(lhs.rep()));
            // eq. (2.5)
            SquareClass xi = x_of(g.inverse(), ctx);
            SquareClass want = (j % 2) ? xg * square_class(Rat(-1), ctx) : xg;
            ck.check(xi == want, "x(g^-1) n=" + std::to_string(n) + " i=" + std::to_string(i),
                     rat_str(want.rep()), rat_str(xi.rep()));
            ck.check(cell_rank(g.inverse()) == j, "cell(g^-1) i=" + std::to_string(i),
                     std::to_string(j), "moved");
            // eq. (x lambda) and cell invariance over class representatives
            for (const auto& l : classes) {
                GSpElement gc = conj_i_lambda(g, l.rep());
                SquareClass xl = x_of(gc, ctx);
                SquareClass wl = xg;
                if (j % 2) wl = wl * l;
                ck.check(xl == wl, "x(g^{i(l)}) l=" + rat_str(l.rep()) + " i=" + std::to_string(i),
                         rat_str(wl.rep()), rat_str(xl.rep()));
                ck.check(cell_rank(gc) == j, "cell(g^{i(l)}) i=" + std::to_string(i),
                         std::to_string(j), "moved");
            }
            // Omega_0 values and well-definedness under pivot randomization
            ck.check(x_of(p1, ctx) == square_class(p1.block_a().det(), ctx),
                     "x = det(a) on Omega_0 i=" + std::to_string(i), "equal", "unequal");
            if (i % 2 == 0) {
                std::mt19937_64 r1(rng()), r2(rng());
                SquareClass xa = x_of(g, ctx, &r1);
                SquareClass xb = x_of(g, ctx, &r2);
                ck.check(xa == xb && xa == xg,
                         "pivot-independence i=" + std::to_string(i), "stable", "varies");
            }
        }
        bool all_ranks = true;
        for (std::size_t j = 0; j + 1 <= n + 1; ++j) all_ranks = all_ranks && rank_seen[j];
        ck.check(all_ranks, "cell coverage n=" + std::to_string(n), "all ranks hit",
                 "some rank missed");
    }
}

// ---------------------------------------------------------------- cocycle suite

GSpElement random_unipotent(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng) {
    (void)ctx;
    // element of the standard maximal unipotent: strictly upper z-block and shear
    GSpElement g = sp_identity(n);
    for (int w = 0; w < 3; ++w) {
        RatMat z = RatMat::identity(n);
        if (n > 1) {
            std::size_t i = rng() % (n - 1);
            std::size_t j = i + 1 + rng() % (n - 1 - i);
            z(i, j) = Rat(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
        }
        RatMat s(n, n);
        std::size_t a = rng() % n, b = rng() % n;
        Rat c(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
        s(a, b) = c;
        s(b, a) = c;
        g = g * levi_m(z) * shear_u(s);
    }
    return g;
}

void suite_cocycle(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    // 2-cocycle identity, full group law at n = 1
    for (long i = 0; i < samples; ++i) {
        GSpElement a = random_sp(1, ctx, rng), b = random_sp(1, ctx, rng),
                   c = random_sp(1, ctx, rng);
        int lhs = cocycle_sp(a, b, ctx).sign * cocycle_sp(a * b, c, ctx).sign;
        int rhs = cocycle_sp(a, b * c, ctx).sign * cocycle_sp(b, c, ctx).sign;
        ck.check(lhs == rhs, "2-cocycle n=1 i=" + std::to_string(i), "equal", "unequal");
    }
    // rule-covered triples at n = 2: both left factors in Omega_0
    long n2 = std::max(samples / 10, 50L);
    for (long i = 0; i < n2; ++i) {
        GSpElement a = random_omega0(2, ctx, rng), b = random_omega0(2, ctx, rng),
                   c = random_sp(2, ctx, rng);
        int lhs = cocycle_sp(a, b, ctx).sign * cocycle_sp(a * b, c, ctx).sign;
        int rhs = cocycle_sp(a, b * c, ctx).sign * cocycle_sp(b, c, ctx).sign;
        ck.check(lhs == rhs, "2-cocycle n=2 i=" + std::to_string(i), "equal", "unequal");
    }
    // inverse closed form: lemma value at lambda = 1 equals eq. (coc inv)
    long n3 = std::max(samples / 20, 50L);
    for (long i = 0; i < n3; ++i) {
        std::size_t n = 1 + rng() % 2;
        GSpElement g = random_sp(n, ctx, rng);
        CoverElement s{g, 1};
        CoverElement inv = cover_inverse(s, ctx); // Lemma 3.1 route
        int direct = cocycle_sp(g, g.inverse(), ctx).sign; // eq. (coc inv) route
        ck.check(inv.eps == direct, "inverse sign i=" + std::to_string(i),
                 std::to_string(direct), std::to_string(inv.eps));
        CoverElement prod = cover_mul(s, inv, ctx);
        ck.check(prod.g == sp_identity(n) && prod.eps == 1,
                 "roundtrip to identity i=" + std::to_string(i), "(I,1)", "off");
    }
    // c~(i(y), s) = 1
    for (long i = 0; i < n3; ++i) {
        std::size_t n = 1 + rng() % 2;
        Rat y = random_rational(rng, ctx.p);
        GSpElement s = random_gsp(n, ctx, rng);
        CocycleValue v = cocycle_gsp(i_lambda(n, y), s, ctx);
        ck.check(v.sign == 1, "c~(i(y),s) i=" + std::to_string(i), "+1",
                 std::to_string(v.sign));
    }
    // Lemma 3.2 d(g,h) vs brute-force conjugation at n = 1
    long n4 = std::max(samples / 10, 100L);
    for (long i = 0; i < n4; ++i) {
        GSpElement g = random_gsp(1, ctx, rng);
        if (!in_omega0(g_one(g))) continue;
        GSpElement h = random_gsp(1, ctx, rng);
        CoverElement tau{h, (rng() % 2) ? 1 : -1};
        CoverElement fast = conj_by(g, tau, ctx);
        CoverElement sg{g, 1};
        CoverElement brute = cover_mul(cover_mul(sg, tau, ctx), cover_inverse(sg, ctx), ctx);
        ck.check(fast == brute, "lemma 3.2 vs brute i=" + std::to_string(i), "agree",
                 "disagree");
    }
    // splitting over unipotents: products of (U,1) stay at sign +1
    for (long i = 0; i < n3; ++i) {
        std::size_t n = 1 + rng() % 2;
        GSpElement u1 = random_unipotent(n, ctx, rng), u2 = random_unipotent(n, ctx, rng);
        CoverElement prod = cover_mul({u1, 1}, {u2, 1}, ctx);
        ck.check(prod.eps == 1, "unipotent splitting i=" + std::to_string(i), "+1",
                 std::to_string(prod.eps));
    }
    // commutation criterion on covered-torus pairs (projections commute)
    for (long i = 0; i < n3; ++i) {
        std::size_t n = 1 + rng() % 2;
        std::vector<Rat> t1, t2;
        for (std::size_t k = 0; k < n; ++k) {
            t1.push_back(random_rational(rng, ctx.p));
            t2.push_back(random_rational(rng, ctx.p));
        }
        Rat s1 = random_rational(rng, ctx.p, false);
        Rat s2 = random_rational(rng, ctx.p, false);
        CoverElement a{make_torus(t1, s1 * s1), 1};
        CoverElement b{make_torus(t2, s2 * s2), 1};
        CoverElement ab = cover_mul(a, b, ctx), ba = cover_mul(b, a, ctx);
        ck.check(ab == ba, "GSp+ torus commutation i=" + std::to_string(i), "commute",
                 "fail to commute");
    }
    // v_lambda is an action: v_{lm}(g) = v_l(g^{i(m)}) v_m(g)
    auto classes = all_classes(ctx);
    for (long i = 0; i < n3 / 2 + 10; ++i) {
        GSpElement g = random_sp(2, ctx, rng);
        for (const auto& l : classes)
            for (const auto& m : classes) {
                int lhs = v_lambda(g, l.rep() * m.rep(), ctx);
                int rhs = v_lambda(conj_i_lambda(g, m.rep()), l.rep(), ctx) *
                          v_lambda(g, m.rep(), ctx);
                ck.check(lhs == rhs, "v action i=" + std::to_string(i), "equal", "unequal");
            }
    }
}

// -------------------------------------------------------------- structure suite

void suite_structure(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    auto classes = all_classes(ctx);
    auto shapes = shapes_up_to(4);
    for (const auto& t : shapes) {
        bool odd = levi_type(t) == LeviType::Odd;
        // Lemma 3.5: image of x on the center
        auto image = center_image(t, ctx);
        if (odd)
            ck.check(image.size() == classes.size(), "center image " + shape_str(t),
                     "all " + std::to_string(classes.size()) + " classes",
                     std::to_string(image.size()));
        else
            ck.check(image.size() == 1 && image[0].is_trivial(), "center image " + shape_str(t),
                     "{1}", std::to_string(image.size()) + " classes");
        // z_t representatives biject onto classes via x (odd type)
        auto reps = z_t_reps(t, ctx);
        if (odd) {
            std::set<int> seen;
            for (const auto& z : reps) seen.insert(x_on_center(z, ctx).index());
            ck.check(reps.size() == classes.size() && seen.size() == classes.size(),
                     "z_t reps " + shape_str(t), std::to_string(classes.size()) + " distinct",
                     std::to_string(seen.size()));
        } else {
            ck.check(reps.size() == 1, "z_t reps " + shape_str(t), "singleton",
                     std::to_string(reps.size()));
        }
        // x_on_center agrees with the independent x_of route
        for (long trial = 0; trial < std::min(samples / 100 + 2, 8L); ++trial) {
            CentralElement c{t, {}, Rat(0), 1};
            for (std::size_t k = 0; k < t.parts.size(); ++k)
                c.a.push_back(random_rational(rng, ctx.p));
            c.b = random_rational(rng, ctx.p);
            SquareClass lhs = x_on_center(c, ctx);
            SquareClass rhs = x_of(g_one(c.to_gsp()), ctx);
            ck.check(lhs == rhs, "x formula vs x_of " + shape_str(t), rat_str(rhs.rep()),
                     rat_str(lhs.rep()));
        }
        // eq. (center structure) vs the cover product, all class parameter pairs
        for (const auto& z1 : reps)
            for (const auto& z2 : reps) {
                CentralElement prod = center_mul(z1, z2, ctx);
                CoverElement cov = cover_mul(z1.to_cover(), z2.to_cover(), ctx);
                ck.check(prod.to_gsp() == cov.g && prod.eps == cov.eps,
                         "center structure " + shape_str(t), "matches cover_mul", "differs");
            }
        // quotient structure: x is multiplicative on z_t products
        for (const auto& z1 : reps)
            for (const auto& z2 : reps) {
                SquareClass lhs = x_on_center(center_mul(z1, z2, ctx), ctx);
                SquareClass rhs = x_on_center(z1, ctx) * x_on_center(z2, ctx);
                ck.check(lhs == rhs, "z_t descends " + shape_str(t), rat_str(rhs.rep()),
                         rat_str(lhs.rep()));
            }
        // Z(M'): trivial x-class commutes with i(lambda); nontrivial has a witness
        for (const auto& z : reps) {
            SquareClass x = x_on_center(z, ctx);
            bool witness = false;
            for (const auto& l : classes) {
                CoverElement conj = conj_by(i_lambda(t.n(), l.rep()), z.to_cover(), ctx);
                if (conj.eps != z.eps) witness = true;
            }
            ck.check(witness == !x.is_trivial(), "Z(M') witness " + shape_str(t),
                     x.is_trivial() ? "no witness" : "witness found", witness ? "witness" : "none");
        }
        // Centrality: the central element commutes with evaluable M+_t elements
        {
            long n = t.n();
            // a torus point of M+ and an embedded Sp(2 tail) point
            std::vector<Rat> tor;
            for (long i = 0; i < n; ++i) tor.push_back(random_rational(rng, ctx.p));
            Rat sq = random_rational(rng, ctx.p, false);
            std::vector<GSpElement> probes{make_torus(tor, sq * sq)};
            if (t.tail > 0)
                probes.push_back(
                    embed_i_rn(random_sp(static_cast<std::size_t>(t.tail), ctx, rng),
                               static_cast<std::size_t>(t.tail), static_cast<std::size_t>(n)));
            for (const auto& z : reps)
                for (const auto& m : probes) {
                    CoverElement tau{m, 1};
                    CoverElement conj = conj_by(z.to_gsp(), tau, ctx);
                    ck.check(conj == tau, "center commutes " + shape_str(t), "fixed", "moved");
                }
        }
        // semidirect piece: conjugation by central elements fixes (U, 1)
        if (t.n() <= 3) {
            GSpElement u = random_unipotent(static_cast<std::size_t>(t.n()), ctx, rng);
            for (const auto& z : reps) {
                CoverElement conj = conj_by(z.to_gsp(), {u, 1}, ctx);
                ck.check(conj.eps == 1, "unipotent sign " + shape_str(t), "+1",
                         std::to_string(conj.eps));
            }
        }
    }
}

// -------------------------------------------------------------- characters suite

void suite_characters(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    auto classes = all_classes(ctx);
    PsiSpec psi(ctx);
    // eta_a evaluation matches the Hilbert symbol; eta_a = eta_{a b^2}
    for (long i = 0; i < std::min(samples, 200L); ++i) {
        Rat a = random_rational(rng, ctx.p);
        Rat b = random_rational(rng, ctx.p);
        Character ea = Character::eta_char(ctx, a);
        Cplx v = ea.evaluate(b);
        int h = hilbert_symbol(a, b, ctx);
        ck.check(std::abs(v - Cplx(h, 0)) < 1e-12, "eta eval " + rat_str(a) + "," + rat_str(b),
                 std::to_string(h), cx_str(v));
        Rat s = random_rational(rng, ctx.p, false);
        ck.check(Character::eta_char(ctx, a * s * s) == ea, "eta_a = eta_{ab^2} " + rat_str(a),
                 "equal", "unequal");
    }
    // |.|^s at the uniformizer
    Character abs_half = Character::abs_power(ctx, 0.5);
    ck.check(std::abs(abs_half.evaluate(Rat(ctx.p)) -
                      Cplx(std::pow(static_cast<double>(ctx.p), -0.5), 0)) < 1e-12,
             "|p|^{1/2}", "p^{-1/2}", cx_str(abs_half.evaluate(Rat(ctx.p))));
    // Omega_chi cardinalities and structure per shape
    for (const auto& t : shapes_up_to(3)) {
        std::vector<Character> eta_prime(t.parts.size() + 1, Character::trivial(ctx));
        auto omega = omega_set(eta_prime, t, psi);
        bool odd = levi_type(t) == LeviType::Odd;
        std::size_t want = odd ? classes.size() : 1;
        ck.check(omega.size() == want, "Omega_chi size " + shape_str(t), std::to_string(want),
                 std::to_string(omega.size()));
        auto reps = z_t_reps(t, ctx);
        // genuineness and common restriction to Z(M')
        for (auto& w : omega) {
            CentralElement zneg = central_identity(t);
            zneg.eps = -1;
            ck.check(std::abs(w.evaluate(zneg) - Cplx(-1, 0)) < 1e-12,
                     "genuineness " + shape_str(t), "-1", cx_str(w.evaluate(zneg)));
            // multiplicativity through eq. (center structure)
            for (const auto& z1 : reps)
                for (const auto& z2 : reps) {
                    Cplx lhs = w.evaluate(center_mul(z1, z2, ctx));
                    Cplx rhs = w.evaluate(z1) * w.evaluate(z2);
                    ck.check(std::abs(lhs - rhs) < 1e-9, "omega multiplicative " + shape_str(t),
                             cx_str(rhs), cx_str(lhs));
                }
        }
        if (odd) {
            // {i(a)} acts simply transitively on Omega_chi
            const auto& w0 = omega.front();
            std::vector<bool> hit(omega.size(), false);
            for (const auto& a : classes) {
                GenuineCentralCharacter tw = conj_char(w0, a.rep());
                long found = -1;
                for (std::size_t k = 0; k < omega.size(); ++k)
                    if (omega[k].equals(tw)) found = static_cast<long>(k);
                ck.check(found >= 0, "conj_char lands in Omega_chi " + shape_str(t), "member",
                         "not a member");
                if (found >= 0) {
                    ck.check(!hit[found], "simple transitivity " + shape_str(t), "fresh element",
                             "repeat");
                    hit[found] = true;
                }
            }
            // square similitude fixes, non-square moves
            ck.check(conj_char(w0, Rat(4)).equals(w0), "square conj fixes " + shape_str(t),
                     "fixed", "moved");
            ck.check(!conj_char(w0, Rat(ctx.p)).equals(w0), "p-conj moves " + shape_str(t),
                     "moved", "fixed");
        }
    }
    // central-character duality identity, n in {1,2,3}
    std::vector<Character> etas{Character::trivial(ctx), Character::eta_char(ctx, Rat(ctx.p))};
    if (ctx.p != 2) {
        etas.push_back(Character::eta_char(ctx, Rat(least_nonresidue(ctx.p))));
        etas.push_back(Character::unramified_order4(ctx));
        etas.push_back(Character::abs_power(ctx, 1.0));
    }
    for (long n : {1L, 2L, 3L})
        for (const auto& ep : etas)
            ck.check(dual_central_identity(ep, psi, n),
                     "dual central identity n=" + std::to_string(n) + " eta'=" + ep.str(),
                     "holds", "fails");
}

// -------------------------------------------------------------- torusreps suite

TorusPoint random_torus_point(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng,
                              bool square_only) {
    TorusPoint pt;
    for (std::size_t i = 0; i < n; ++i) pt.t.push_back(random_rational(rng, ctx.p));
    Rat s = random_rational(rng, ctx.p, false);
    pt.lambda = s * s;
    if (!square_only) {
        auto classes = all_classes(ctx);
        pt.lambda *= classes[rng() % classes.size()].rep();
    }
    pt.eps = (rng() % 2) ? 1 : -1;
    return pt;
}

GenuineTorusChar random_torus_char(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng,
                                   bool unitary) {
    std::vector<Character> xi;
    for (std::size_t i = 0; i < n; ++i) {
        long e = static_cast<long>(rng() % static_cast<std::uint64_t>(ctx.p - 1));
        ZpVal zp = unitary ? ZpVal::root_of_unity(static_cast<long>(rng() % 8), 8)
                           : ZpVal::real_power(2.0);
        xi.push_back(Character::from_data(PadicContext(ctx.p), e, zp));
    }
    Character xi0 = Character::from_data(
        PadicContext(ctx.p), static_cast<long>(rng() % static_cast<std::uint64_t>(ctx.p - 1)),
        ZpVal::root_of_unity(static_cast<long>(rng() % 4), 4));
    return GenuineTorusChar(std::move(xi), std::move(xi0), PsiSpec(ctx));
}

void suite_torusreps(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    if (ctx.p == 2)
        throw UnknownSuite("torusreps: exact gamma values require p odd");
    const std::size_t n = 1;
    auto classes = all_classes(ctx);
    GenuineTorusChar chi = random_torus_char(n, ctx, rng, true);
    TorusRep rho = induce(chi);
    ck.check(rho.dim() == classes.size(), "dimension", std::to_string(classes.size()),
             std::to_string(rho.dim()));
    // genuineness
    CplxMat mpos = rho.evaluate({sp_identity(n), 1});
    CplxMat mneg = rho.evaluate({sp_identity(n), -1});
    ck.check(mpos.dist(CplxMat::identity(rho.dim())) < 1e-12, "rho(I,1)", "Id", "off");
    ck.check(mneg.dist(CplxMat::identity(rho.dim()).scaled(-1.0)) < 1e-12, "rho(I,-1)", "-Id",
             "off");
    // homomorphism on random covered-torus pairs
    for (long i = 0; i < samples; ++i) {
        CoverElement a = random_torus_point(n, ctx, rng, false).cover();
        CoverElement b = random_torus_point(n, ctx, rng, false).cover();
        CplxMat lhs = rho.evaluate(cover_mul(a, b, ctx));
        CplxMat rhs = rho.evaluate(a) * rho.evaluate(b);
        ck.check(lhs.dist(rhs) < 1e-10, "homomorphism i=" + std::to_string(i), "within 1e-10",
                 "diff " + std::to_string(lhs.dist(rhs)));
    }
    // restriction decomposes with multiplicity one into distinct eigencharacters
    auto decomp = restrict_decompose(rho);
    long total = 0;
    for (const auto& [w, dim] : decomp) {
        total += dim;
        ck.check(dim == 1, "multiplicity one at label " + rat_str(w.label.rep()), "1",
                 std::to_string(dim));
    }
    ck.check(total == static_cast<long>(rho.dim()), "eigenspace dims sum", "d", std::to_string(total));
    auto zt = torus_zt_reps(n, ctx);
    for (std::size_t i = 0; i < decomp.size(); ++i)
        for (std::size_t j = i + 1; j < decomp.size(); ++j) {
            bool distinct = false;
            for (const auto& z : zt)
                if (std::abs(decomp[i].first.evaluate(z) - decomp[j].first.evaluate(z)) > 1e-6)
                    distinct = true;
            ck.check(distinct, "eigencharacters distinct", "distinct", "coincide");
        }
    // projections: idempotent, orthogonal, complete
    std::vector<CplxMat> projs;
    for (const auto& [w, dim] : decomp) projs.push_back(eigen_project(rho, w));
    CplxMat sum(rho.dim());
    for (const auto& ph : projs) sum = sum + ph;
    ck.check(sum.dist(CplxMat::identity(rho.dim())) < 1e-12, "sum of projectors", "Id", "off");
    for (std::size_t i = 0; i < projs.size(); ++i) {
        ck.check((projs[i] * projs[i]).dist(projs[i]) < 1e-12, "idempotence", "phi^2=phi",
                 "off");
        for (std::size_t j = 0; j < projs.size(); ++j)
            if (i != j)
                ck.check((projs[i] * projs[j]).max_abs() < 1e-12, "orthogonality", "0", "off");
    }
    // rho(i(a),1) maps the w-eigenspace onto the w^{i(a)}-eigenspace
    auto cosets = torus_coset_reps(n, ctx);
    for (std::size_t ai = 0; ai < cosets.size(); ++ai) {
        CplxMat r = rho.evaluate(cosets[ai]);
        CplxMat rinv = rho.evaluate(cover_inverse(cosets[ai], ctx));
        for (std::size_t wi = 0; wi < decomp.size(); ++wi) {
            CplxMat moved = r * projs[wi] * rinv;
            // the w_b eigenspace must land exactly on the w_{b a} eigenspace
            std::size_t want = static_cast<std::size_t>((classes[wi] * classes[ai]).index());
            ck.check(moved.dist(projs[want]) < 1e-9, "coset action permutes eigenspaces",
                     "projector at label product", "elsewhere");
        }
    }
    // induction roundtrip over random characters, including non-unitary data
    long rt = std::max(4L, std::min(samples / 50, 20L));
    for (long i = 0; i < rt; ++i) {
        GenuineTorusChar c2 = random_torus_char(n, ctx, rng, i % 3 != 2);
        TorusRep r2 = induce(c2);
        auto d2 = restrict_decompose(r2);
        const auto& w = d2[static_cast<std::size_t>(rng() % d2.size())].first;
        ck.check(induction_roundtrip(r2, w), "roundtrip i=" + std::to_string(i), "identity",
                 "fails");
    }
    // Heisenberg commutator: [s,t] = (I, d) with the predicted pairing sign
    for (long i = 0; i < std::min(samples / 10 + 10, 100L); ++i) {
        CoverElement a = random_torus_point(n, ctx, rng, false).cover();
        CoverElement b = random_torus_point(n, ctx, rng, false).cover();
        CoverElement comm = cover_mul(cover_mul(a, b, ctx),
                                      cover_inverse(cover_mul(b, a, ctx), ctx), ctx);
        Rat xa = 1, xb = 1;
        for (std::size_t k = 0; k < n; ++k) {
            xa *= a.g.mat()(k, k);
            xb *= b.g.mat()(k, k);
        }
        int want = hilbert_symbol(xa, b.g.lambda(), ctx) * hilbert_symbol(xb, a.g.lambda(), ctx);
        ck.check(comm.g == sp_identity(n) && comm.eps == want,
                 "commutator i=" + std::to_string(i), "(I," + std::to_string(want) + ")",
                 "(proj " + std::string(comm.g == sp_identity(n) ? "I" : "off") + "," +
                     std::to_string(comm.eps) + ")");
    }
    // a rank-2 torus spot check of the homomorphism property
    GenuineTorusChar chi2 = random_torus_char(2, ctx, rng, true);
    TorusRep rho2 = induce(chi2);
    for (long i = 0; i < std::min(samples / 20 + 5, 50L); ++i) {
        CoverElement a = random_torus_point(2, ctx, rng, false).cover();
        CoverElement b = random_torus_point(2, ctx, rng, false).cover();
        CplxMat lhs = rho2.evaluate(cover_mul(a, b, ctx));
        CplxMat rhs = rho2.evaluate(a) * rho2.evaluate(b);
        ck.check(lhs.dist(rhs) < 1e-10, "rank-2 homomorphism i=" + std::to_string(i),
                 "within 1e-10", "diff " + std::to_string(lhs.dist(rhs)));
    }
}

// ---------------------------------------------------------------- deciders suite

void suite_deciders(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    if (ctx.p == 2) throw UnknownSuite("deciders: the classification requires p odd");
    PsiSpec psi(ctx);
    auto mk = [&](const Character& c1, const Character& c2) {
        return PrincipalSeriesDatum{2, {c1, c2}, psi, std::nullopt};
    };
    Character triv = Character::trivial(ctx);
    // weyl orbit sizes
    ck.check(weyl_orbit(mk(triv, triv)).size() == 1, "orbit(triv,triv)", "1",
             std::to_string(weyl_orbit(mk(triv, triv)).size()));
    Character absc = Character::abs_power(ctx, 1.0);
    ck.check(weyl_orbit(mk(absc, triv)).size() == 4, "orbit(|.|,triv)", "4",
             std::to_string(weyl_orbit(mk(absc, triv)).size()));
    // orbit closure under both generators
    {
        auto orb = weyl_orbit(mk(Character::unramified_order4(ctx), absc));
        bool closed = true;
        auto member = [&](const Character& a, const Character& b) {
            for (const auto& [x, y] : orb)
                if (x == a && y == b) return true;
            return false;
        };
        for (const auto& [a, b] : orb)
            closed = closed && member(b, a) && member(a, b.inverse());
        ck.check(closed, "orbit closure", "closed", "not closed");
    }
    // condition II family
    for (long i = 0; i < 5; ++i) {
        double s = -1.5 + 0.7 * static_cast<double>(i);
        Character xi = Character::from_data(ctx, static_cast<long>(rng() % (ctx.p - 1)),
                                            ZpVal::root_of_unity(static_cast<long>(rng() % 4), 4));
        Character c1 = xi * Character::abs_power(ctx, s + 0.5);
        Character c2 = xi * Character::abs_power(ctx, s - 0.5);
        Verdict v = gsp4_reducibility(mk(c1, c2));
        ck.check(v.status == VerdictStatus::Reducible && v.witness.rfind("II", 0) == 0,
                 "II family s=" + std::to_string(s), "Reducible(II)",
                 std::string(verdict_status_name(v.status)) + " " + v.witness);
    }
    // condition III family
    for (const auto& b : all_classes(ctx)) {
        Character c2 = Character::eta_char(ctx, b.rep()) * Character::abs_power(ctx, 0.5);
        Character c1 = Character::from_data(ctx, 1, ZpVal::root_of_unity(1, 8)) *
                       Character::abs_power(ctx, 0.25);
        Verdict v = gsp4_reducibility(mk(c1, c2));
        ck.check(v.status == VerdictStatus::Reducible &&
                     (v.witness.rfind("III", 0) == 0 || v.witness.rfind("II", 0) == 0),
                 "III family b=" + rat_str(b.rep()), "Reducible(III)",
                 std::string(verdict_status_name(v.status)) + " " + v.witness);
    }
    // order-4 construction fires condition I
    {
        Character c = Character::unramified_order4(ctx);
        Verdict v = gsp4_reducibility(mk(c, c));
        ck.check(v.status == VerdictStatus::Reducible && v.witness.rfind("I:", 0) == 0,
                 "order-4 datum", "Reducible(I)",
                 std::string(verdict_status_name(v.status)) + " " + v.witness);
    }
    // generic unitary pairs are irreducible
    long gen = std::min(samples / 10, 100L);
    for (long i = 0; i < gen; ++i) {
        double a1 = 0.37 + 0.011 * static_cast<double>(i);
        double a2 = 1.11 + 0.017 * static_cast<double>(i);
        Character c1 = Character::from_data(
            ctx, static_cast<long>(rng() % (ctx.p - 1)),
            ZpVal::from_complex(std::polar(1.0, a1)));
        Character c2 = Character::from_data(
            ctx, static_cast<long>(rng() % (ctx.p - 1)),
            ZpVal::from_complex(std::polar(1.0, a2)));
        Verdict v = gsp4_reducibility(mk(c1, c2));
        ck.check(v.status == VerdictStatus::Irreducible, "generic unitary i=" + std::to_string(i),
                 "Irreducible", std::string(verdict_status_name(v.status)) + " " + v.witness);
    }
    // verdict invariance: global quadratic twist and orbit substitution
    for (long i = 0; i < 10; ++i) {
        Character c1 = Character::from_data(ctx, static_cast<long>(rng() % (ctx.p - 1)),
                                            ZpVal::root_of_unity(static_cast<long>(rng() % 6), 6));
        Character c2 = Character::from_data(ctx, static_cast<long>(rng() % (ctx.p - 1)),
                                            ZpVal::root_of_unity(static_cast<long>(rng() % 5), 5));
        Verdict v0 = gsp4_reducibility(mk(c1, c2));
        for (const auto& a : all_classes(ctx)) {
            Character ea = Character::eta_char(ctx, a.rep());
            Verdict v1 = gsp4_reducibility(mk(c1 * ea, c2 * ea));
            ck.check(v0.status == v1.status, "twist invariance i=" + std::to_string(i),
                     verdict_status_name(v0.status), verdict_status_name(v1.status));
        }
        for (const auto& [o1, o2] : v0.orbit) {
            Verdict v2 = gsp4_reducibility(mk(o1, o2));
            ck.check(v0.status == v2.status, "orbit invariance i=" + std::to_string(i),
                     verdict_status_name(v0.status), verdict_status_name(v2.status));
        }
    }
    // counterexample construction: proof log green, datum reducible via I
    {
        auto [datum, log] = counterexample_build(ctx);
        ck.check(log.all_ok(), "counterexample log", "all facts verified",
                 std::string("order4=") + (log.order_four ? "y" : "n") +
                     " quad=" + (log.eta_b_unramified_quadratic ? "y" : "n") +
                     " twist=" + (log.twist_equals_inverse ? "y" : "n") +
                     " ind=" + (log.inducing_identity ? "y" : "n") +
                     " parity=" + (log.parity_constraint ? "y" : "n"));
        Verdict v = gsp4_reducibility(datum);
        ck.check(v.status == VerdictStatus::Reducible && v.witness.rfind("I:", 0) == 0,
                 "counterexample verdict", "Reducible(I)",
                 std::string(verdict_status_name(v.status)) + " " + v.witness);
    }
    // unitary rule at n = 3 and the n = 4 Unknown
    {
        std::vector<Character> chis;
        for (int k = 0; k < 3; ++k)
            chis.push_back(Character::from_data(
                ctx, static_cast<long>(rng() % (ctx.p - 1)), ZpVal::root_of_unity(k, 7)));
        Verdict v = odd_unitary_rule({3, chis, psi, std::nullopt});
        ck.check(v.status == VerdictStatus::Irreducible, "n=3 unitary", "Irreducible",
                 verdict_status_name(v.status));
        Character c4 = Character::unramified_order4(ctx);
        Verdict v4 = odd_unitary_rule({4, {c4, c4, c4, c4}, psi, std::nullopt});
        ck.check(v4.status == VerdictStatus::Unknown, "n=4 order-4 data", "Unknown",
                 verdict_status_name(v4.status));
        Verdict vnu = odd_unitary_rule(
            {3, {Character::abs_power(ctx, 1.0), chis[0], chis[1]}, psi, std::nullopt});
        ck.check(vnu.status == VerdictStatus::Unknown, "n=3 non-unitary", "Unknown",
                 verdict_status_name(vnu.status));
    }
}

// --------------------------------------------------------------- whittaker suite

void suite_whittaker(Checker& ck, const PadicContext& ctx, std::mt19937_64& rng, long samples) {
    (void)rng;
    (void)samples;
    long d = class_count(ctx.p);
    for (const auto& t : shapes_up_to(4)) {
        if (nondeg_coeff_count(t) == 0) continue; // no non-degenerate data to classify
        for (TorusGroup g : {TorusGroup::T, TorusGroup::Tplus, TorusGroup::Tprime}) {
            WhittakerOrbits w = whittaker_orbit_count(t, g, ctx);
            long want = 1;
            if (g != TorusGroup::Tprime && t.tail > 0) want = d;
            std::string gname = g == TorusGroup::T ? "T" : (g == TorusGroup::Tplus ? "T+" : "T'");
            ck.check(w.count == want, "orbits " + shape_str(t) + " under " + gname,
                     std::to_string(want), std::to_string(w.count));
            // orbit-stabilizer consistency and the psi^{i(a)} representative structure
            long space = 1;
            for (long i = 0; i < nondeg_coeff_count(t); ++i) space *= d;
            long covered = 0;
            for (std::size_t k = 0; k < w.reps.size(); ++k) {
                covered += w.orbit_sizes[k];
                long stab = whittaker_stabilizer_order(t, g, ctx, w.reps[k]);
                ck.check(stab * w.orbit_sizes[k] == w.acting_group_order,
                         "orbit-stabilizer " + shape_str(t) + " " + gname, "product = |group|",
                         std::to_string(stab) + "*" + std::to_string(w.orbit_sizes[k]));
            }
            ck.check(covered == space, "orbits partition " + shape_str(t) + " " + gname,
                     std::to_string(space), std::to_string(covered));
            if (want == d && t.tail > 0) {
                // representatives are separated exactly by the long-root class
                std::set<int> longs;
                for (const auto& r : w.reps) longs.insert(r.coeffs.back().index());
                ck.check(static_cast<long>(longs.size()) == d,
                         "psi^{i(a)} long-root classes " + shape_str(t) + " " + gname,
                         std::to_string(d), std::to_string(longs.size()));
            }
        }
    }
}

using SuiteFn = void (*)(Checker&, const PadicContext&, std::mt19937_64&, long);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"hilbert", suite_hilbert},     {"weil", suite_weil},
        {"xmap", suite_xmap},           {"cocycle", suite_cocycle},
        {"structure", suite_structure}, {"characters", suite_characters},
        {"torusreps", suite_torusreps}, {"deciders", suite_deciders},
        {"whittaker", suite_whittaker},
    };
    return reg;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

SuiteReport run_suite(const std::string& name, long p, std::uint64_t seed, long samples) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        SuiteReport rep;
        rep.suite = name;
        rep.p = p;
        rep.samples = samples;
        rep.seed = seed;
        PadicContext ctx(p);
        std::uint64_t mixed = seed;
        for (char c : name) mixed = mixed * 1099511628211ULL + static_cast<std::uint64_t>(c);
        mixed = mixed * 1099511628211ULL + static_cast<std::uint64_t>(p);
        std::mt19937_64 rng(mixed);
        Checker ck{rep};
        auto t0 = std::chrono::steady_clock::now();
        fn(ck, ctx, rng, samples);
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return rep;
    }
    throw UnknownSuite("run_suite: unknown suite '" + name + "'");
}

AggregateReport run_all(const std::vector<long>& ps, std::uint64_t seed, long samples) {
    AggregateReport agg;
    auto t0 = std::chrono::steady_clock::now();
    for (long p : ps) {
        for (const auto& [name, fn] : registry()) {
            if (p == 2 && name != "hilbert" && name != "structure") continue;
            agg.reports.push_back(run_suite(name, p, seed, samples));
        }
    }
    for (const auto& r : agg.reports) {
        agg.total_checks += r.checks;
        agg.total_failures += static_cast<long>(r.failures.size());
    }
    agg.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return agg;
}

namespace {

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["p"] = r.p;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["checks"] = r.checks;
    // elapsed time stays out of the canonical report: same seed, same bytes
    j["failures"] = nlohmann::json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    j["passed"] = r.passed();
    return j;
}

} // namespace

std::string report_json(const SuiteReport& r) { return to_json(r).dump(2); }

std::string report_json(const AggregateReport& r) {
    nlohmann::json j;
    j["reports"] = nlohmann::json::array();
    for (const auto& s : r.reports) j["reports"].push_back(to_json(s));
    j["total_checks"] = r.total_checks;
    j["total_failures"] = r.total_failures;
    j["passed"] = r.passed();
    return j.dump(2);
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << " suite=" << r.suite << " p=" << r.p
       << " checks=" << r.checks << " failures=" << r.failures.size() << " seed=" << r.seed
       << " elapsed=" << static_cast<long>(r.elapsed_ms) << "ms";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
        os << "\n  failure: " << r.failures[i].input << " expected " << r.failures[i].expected
           << " got " << r.failures[i].actual;
    return os.str();
}

} // namespace metaplectic
