#include "metaplectic/deciders.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace metaplectic {

const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Irreducible: return "Irreducible";
        case VerdictStatus::Reducible: return "Reducible";
        default: return "Unknown";
    }
}

std::vector<std::pair<Character, Character>> weyl_orbit(const PrincipalSeriesDatum& d) {
    if (d.n != 2) throw ShapeMismatch("weyl_orbit: n = 2 only");
    using Pair = std::pair<Character, Character>;
    std::vector<Pair> orbit{{d.chi[0], d.chi[1]}};
    auto seen = [&](const Pair& p) {
        for (const auto& q : orbit)
            if (q.first == p.first && q.second == p.second) return true;
        return false;
    };
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        Pair cur = orbit[i];
        Pair swp{cur.second, cur.first};
        Pair inv{cur.first, cur.second.inverse()};
        if (!seen(swp)) orbit.push_back(swp);
        if (!seen(inv)) orbit.push_back(inv);
    }
    if (orbit.size() > 8) throw std::logic_error("weyl_orbit: orbit exceeds the group order");
    return orbit;
}

Verdict gsp4_reducibility(const PrincipalSeriesDatum& d) {
    const PadicContext& ctx = d.psi.ctx;
    if (ctx.p == 2)
        throw UnsupportedPrime("gsp4_reducibility: the classification needs odd residual characteristic");
    if (d.n != 2 || d.chi.size() != 2) throw ShapeMismatch("gsp4_reducibility: n = 2 data required");
    Verdict v;
    v.orbit = weyl_orbit(d);
    Character absc = Character::abs_power(ctx, 1.0);

    // I: some orbit element equals (chi_1 eta_a, chi_2 eta_a) with a non-square.
    for (const auto& a : all_classes(ctx)) {
        if (a.is_trivial()) continue;
        Character ea = Character::eta_char(ctx, a.rep());
        Character t1 = d.chi[0] * ea;
        Character t2 = d.chi[1] * ea;
        for (const auto& [c1, c2] : v.orbit) {
            if (c1 == t1 && c2 == t2) {
                std::ostringstream os;
                os << "I: orbit element equals (chi1 eta_a, chi2 eta_a) with a = "
                   << rat_str(a.rep());
                v.status = VerdictStatus::Reducible;
                v.witness = os.str();
                return v;
            }
        }
    }
    // II: chi'_1 (chi'_2)^{-1} = |.|  (the |.|^{s +- 1/2} family).
    for (const auto& [c1, c2] : v.orbit) {
        if (c1 == c2 * absc) {
            v.status = VerdictStatus::Reducible;
            v.witness = "II: orbit element with chi'1 / chi'2 = |.| (" + c1.str() + ", " + c2.str() + ")";
            return v;
        }
    }
    // III: (chi'_2)^2 = |.|  (the eta_b |.|^{1/2} family).
    for (const auto& [c1, c2] : v.orbit) {
        if (c2.pow(2) == absc) {
            v.status = VerdictStatus::Reducible;
            v.witness = "III: orbit element with (chi'2)^2 = |.| (" + c1.str() + ", " + c2.str() + ")";
            return v;
        }
    }
    v.status = VerdictStatus::Irreducible;
    v.witness = "orbit scan exhausted conditions I-III";
    return v;
}

Verdict odd_unitary_rule(const PrincipalSeriesDatum& d) {
    if (d.n == 2) return gsp4_reducibility(d);
    Verdict v;
    bool unitary = true;
    for (const auto& c : d.chi) unitary = unitary && c.is_unitary();
    if (d.xi) unitary = unitary && d.xi->is_unitary();
    if (!unitary) {
        v.status = VerdictStatus::Unknown;
        v.witness = "non-unitary inducing data: outside the unitary rule";
        return v;
    }
    if (d.n % 2 == 1) {
        v.status = VerdictStatus::Irreducible;
        v.witness = "odd-n unitary rule";
        return v;
    }
    v.status = VerdictStatus::Unknown;
    v.witness = "even n >= 4: reducible unitary genuine principal series exist, but no complete "
                "classification is available at this rank";
    return v;
}

std::pair<PrincipalSeriesDatum, CounterexampleLog> counterexample_build(const PadicContext& ctx,
                                                                        long n) {
    if (ctx.p == 2) throw UnsupportedPrime("counterexample_build: p odd required");
    CounterexampleLog log{Character::unramified_order4(ctx), SquareClass(ctx.p, 1),
                          Character::trivial(ctx)};
    const Character& chi = log.chi;
    Rat b = log.b.rep(); // the non-residue unit
    Character eta_b = Character::eta_char(ctx, b);

    log.order_four = chi.order() && *chi.order() == 4;
    log.eta_b_unramified_quadratic =
        eta_b.is_quadratic() && !eta_b.is_trivial() && eta_b.unit_exp() == 0;
    log.twist_equals_inverse = (chi * eta_b) == chi.inverse();

    // (chi_psi)^{i(b)} = (chi eta_b)_psi at character level: conjugation by (i(b),1)
    // multiplies the covered-torus character by eta_b(det a); checked on torus points
    // together with the gamma_{psi_b} = eta_b gamma_psi coordinate identity.
    PsiSpec psi(ctx);
    PsiSpec psi_b(ctx, b);
    WeilTable wt(psi), wt_b(psi_b);
    bool ok = true;
    for (const auto& c : all_classes(ctx)) {
        FourthRoot lhs = wt_b.gamma(c);
        FourthRoot rhs = wt.gamma(c) * hilbert_symbol(b, c.rep(), ctx);
        ok = ok && (lhs == rhs);
    }
    std::mt19937_64 rng(2027);
    for (int trial = 0; trial < 32 && ok; ++trial) {
        std::vector<Rat> t;
        Rat det = 1;
        for (long i = 0; i < n; ++i) {
            long num = 1 + static_cast<long>(rng() % 40);
            long den = 1 + static_cast<long>(rng() % 9);
            Rat e = Rat(num, den) * ((rng() % 2) ? 1 : -1);
            t.push_back(e);
            det *= e;
        }
        int eps = (rng() % 2) ? 1 : -1;
        CoverElement s{make_torus(t, Rat(1)), eps};
        auto chi_psi = [&](const CoverElement& h, const Character& c0,
                           const WeilTable& w) -> Cplx {
            Rat dd = 1;
            for (long i = 0; i < n; ++i) dd *= h.g.mat()(i, i);
            return static_cast<double>(h.eps) * c0.evaluate(dd) * w.gamma(dd).value();
        };
        CoverElement ib{i_lambda(n, b), 1};
        CoverElement conj = cover_mul(cover_mul(cover_inverse(ib, ctx), s, ctx), ib, ctx);
        Cplx lhs = chi_psi(conj, chi, wt);
        Cplx rhs = chi_psi(s, chi * eta_b, wt);
        ok = ok && std::abs(lhs - rhs) < 1e-9;
    }
    log.inducing_identity = ok;

    // xi(-1) = chi^n(-1); chi is unramified so the trivial xi works.
    log.parity_constraint =
        std::abs(log.xi.evaluate(Rat(-1)) - chi.pow(n).evaluate(Rat(-1))) < 1e-12;

    PrincipalSeriesDatum datum{n, std::vector<Character>(static_cast<std::size_t>(n), chi), psi,
                               log.xi};
    return {datum, log};
}

TorusGroup parse_torus_group(const std::string& s) {
    if (s == "T") return TorusGroup::T;
    if (s == "T+" || s == "Tplus") return TorusGroup::Tplus;
    if (s == "T'" || s == "Tprime") return TorusGroup::Tprime;
    throw std::domain_error("parse_torus_group: expected T, T+ or T'");
}

long nondeg_coeff_count(const LeviShape& shape) {
    long m = 0;
    for (long p : shape.parts) m += p - 1;
    if (shape.tail > 0) m += shape.tail; // tail-1 chain roots + the long root
    return m;
}

namespace {

// Simple roots of N_t as index pairs on the diagonal torus entries; the long
// root is marked with second = -1.
std::vector<std::pair<long, long>> root_list(const LeviShape& shape) {
    std::vector<std::pair<long, long>> roots;
    long off = 0;
    for (long p : shape.parts) {
        for (long i = 0; i + 1 < p; ++i) roots.emplace_back(off + i, off + i + 1);
        off += p;
    }
    if (shape.tail > 0) {
        for (long i = 0; i + 1 < shape.tail; ++i) roots.emplace_back(off + i, off + i + 1);
        roots.emplace_back(off + shape.tail - 1, -1); // long root t_n^2 / lambda
    }
    return roots;
}

} // namespace

WhittakerOrbits whittaker_orbit_count(const LeviShape& shape, TorusGroup group,
                                      const PadicContext& ctx) {
    const long d = class_count(ctx.p);
    const long n = shape.n();
    auto roots = root_list(shape);
    const long m = static_cast<long>(roots.size());
    if (m != nondeg_coeff_count(shape)) throw std::logic_error("whittaker: root count mismatch");

    // Multiplication table on class indices.
    auto classes = all_classes(ctx);
    std::vector<std::vector<int>> mul(d, std::vector<int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) mul[i][j] = (classes[i] * classes[j]).index();

    long space = 1;
    for (long i = 0; i < m; ++i) space *= d;
    auto decode = [&](long code) {
        std::vector<int> t(m);
        for (long i = 0; i < m; ++i) {
            t[i] = static_cast<int>(code % d);
            code /= d;
        }
        return t;
    };
    auto encode = [&](const std::vector<int>& t) {
        long code = 0;
        for (long i = m - 1; i >= 0; --i) code = code * d + t[i];
        return code;
    };

    // Acting group: torus entry classes (c_1..c_n) and a similitude class (trivial
    // unless the group is T').
    long lam_choices = (group == TorusGroup::Tprime) ? d : 1;
    long group_order = lam_choices;
    for (long i = 0; i < n; ++i) group_order *= d;

    auto act = [&](long code, long gcode) {
        std::vector<int> t(n);
        long g = gcode;
        for (long i = 0; i < n; ++i) {
            t[i] = static_cast<int>(g % d);
            g /= d;
        }
        int lam = static_cast<int>(g % lam_choices); // 0 when the group fixes lambda in squares
        std::vector<int> c = decode(code);
        for (long r = 0; r < m; ++r) {
            auto [i1, i2] = roots[r];
            if (i2 >= 0)
                c[r] = mul[c[r]][mul[t[i1]][t[i2]]];
            else
                c[r] = mul[c[r]][lam]; // t_n^2 / lambda acts through class(lambda)
        }
        return encode(c);
    };

    // Single-coordinate generators suffice for the (abelian) orbit search.
    std::vector<long> gens;
    for (long i = 0; i < n; ++i) {
        long base = 1;
        for (long k = 0; k < i; ++k) base *= d;
        for (int u = 1; u < d; ++u) gens.push_back(base * u);
    }
    if (group == TorusGroup::Tprime) {
        long base = 1;
        for (long k = 0; k < n; ++k) base *= d;
        for (int u = 1; u < d; ++u) gens.push_back(base * u);
    }

    std::vector<int> orbit_id(space, -1);
    WhittakerOrbits out{0, {}, {}, group_order};
    for (long start = 0; start < space; ++start) {
        if (orbit_id[start] >= 0) continue;
        int id = static_cast<int>(out.count++);
        std::vector<long> stack{start};
        orbit_id[start] = id;
        long size = 0;
        while (!stack.empty()) {
            long cur = stack.back();
            stack.pop_back();
            ++size;
            for (long g : gens) {
                long nxt = act(cur, g);
                if (orbit_id[nxt] < 0) {
                    orbit_id[nxt] = id;
                    stack.push_back(nxt);
                }
            }
        }
        std::vector<int> t = decode(start);
        NondegChar rep{shape, {}};
        for (int v : t) rep.coeffs.emplace_back(ctx.p, v);
        out.reps.push_back(std::move(rep));
        out.orbit_sizes.push_back(size);
    }
    return out;
}

long whittaker_stabilizer_order(const LeviShape& shape, TorusGroup group, const PadicContext& ctx,
                                const NondegChar& rep) {
    const long d = class_count(ctx.p);
    const long n = shape.n();
    auto roots = root_list(shape);
    auto classes = all_classes(ctx);
    long lam_choices = (group == TorusGroup::Tprime) ? d : 1;
    long group_order = lam_choices;
    for (long i = 0; i < n; ++i) group_order *= d;
    long stab = 0;
    for (long g = 0; g < group_order; ++g) {
        std::vector<int> t(n);
        long gg = g;
        for (long i = 0; i < n; ++i) {
            t[i] = static_cast<int>(gg % d);
            gg /= d;
        }
        int lam = static_cast<int>(gg % lam_choices);
        bool fixed = true;
        for (std::size_t r = 0; r < roots.size() && fixed; ++r) {
            auto [i1, i2] = roots[r];
            SquareClass c = rep.coeffs[r];
            SquareClass moved = (i2 >= 0) ? c * classes[t[i1]] * classes[t[i2]]
                                          : c * classes[lam];
            fixed = moved == c;
        }
        if (fixed) ++stab;
    }
    return stab;
}

} // namespace metaplectic
