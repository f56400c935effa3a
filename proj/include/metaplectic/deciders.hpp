#pragma once

#include "metaplectic/torus_rep.hpp"

namespace metaplectic {

// Inducing data of a genuine principal series: chi_1 x ... x chi_n boxtimes gamma_psi,
// optionally extended over the similitude center by xi.
struct PrincipalSeriesDatum {
    long n;
    std::vector<Character> chi;
    PsiSpec psi;
    std::optional<Character> xi;
};

enum class VerdictStatus { Irreducible, Reducible, Unknown };

const char* verdict_status_name(VerdictStatus s);

struct Verdict {
    VerdictStatus status;
    std::string witness; // condition tag (I/II/III or rule name) + exhibiting orbit element
    std::vector<std::pair<Character, Character>> orbit; // the scanned Weyl orbit (n = 2)
};

// Orbit of (chi_1, chi_2) under the order-8 group generated by the swap and the
// inversion of the second coordinate (gamma_psi treated as inert).
std::vector<std::pair<Character, Character>> weyl_orbit(const PrincipalSeriesDatum& d);

// The GSp(4) reducibility list (p odd): Reducible iff some Weyl-orbit element is
//   I.  (chi_1 eta_a, chi_2 eta_a) for a non-square a,
//   II. chi'_1 (chi'_2)^{-1} = |.|,
//   III.(chi'_2)^2 = |.|.
Verdict gsp4_reducibility(const PrincipalSeriesDatum& d);

// Unitary-data rule: n odd -> Irreducible; n = 2 delegates to the GSp(4) list;
// even n >= 4 -> Unknown (reducible unitary data exist but no complete list).
Verdict odd_unitary_rule(const PrincipalSeriesDatum& d);

// Machine-checked facts behind the reducible unitary construction: chi of order 4,
// a non-square b with chi eta_b = chi^{-1}, the inducing-data identity, the
// central-extension parity constraint.
struct CounterexampleLog {
    Character chi;
    SquareClass b;
    Character xi;
    bool order_four = false;
    bool eta_b_unramified_quadratic = false;
    bool twist_equals_inverse = false;
    bool inducing_identity = false; // (chi_psi)^{i(b)} = (chi eta_b)_psi at character level
    bool parity_constraint = false; // xi(-1) = chi^n(-1)
    bool all_ok() const {
        return order_four && eta_b_unramified_quadratic && twist_equals_inverse &&
               inducing_identity && parity_constraint;
    }
};

std::pair<PrincipalSeriesDatum, CounterexampleLog> counterexample_build(const PadicContext& ctx,
                                                                        long n = 2);

enum class TorusGroup { T, Tplus, Tprime };

TorusGroup parse_torus_group(const std::string& s);

// Non-degenerate character of N_t, recorded by its simple-root coefficients
// modulo squares.
struct NondegChar {
    LeviShape shape;
    std::vector<SquareClass> coeffs;
};

struct WhittakerOrbits {
    long count;
    std::vector<NondegChar> reps;
    std::vector<long> orbit_sizes;
    long acting_group_order;
};

// Number of simple roots of N_t (chain roots of the GL blocks, chain + long roots
// of the Sp tail).
long nondeg_coeff_count(const LeviShape& shape);

// Orbits of non-degenerate characters of N_t under the torus action, computed
// exhaustively on the square-class coefficient space.
WhittakerOrbits whittaker_orbit_count(const LeviShape& shape, TorusGroup group,
                                      const PadicContext& ctx);

// Order of the stabilizer of a representative in the acting class group
// (orbit-stabilizer consistency checks).
long whittaker_stabilizer_order(const LeviShape& shape, TorusGroup group, const PadicContext& ctx,
                                const NondegChar& rep);

} // namespace metaplectic
