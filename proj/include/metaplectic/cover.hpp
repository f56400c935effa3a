#pragma once

#include "metaplectic/symplectic.hpp"

namespace metaplectic {

// Which closed formula produced a cocycle value; recorded for auditability.
enum class CocyclePath { OmegaZeroLeft, OmegaZeroRight, InversePair, KubotaN1, CentralFactor };

const char* cocycle_path_name(CocyclePath p);

struct CocycleValue {
    int sign;
    CocyclePath path;
};

// Metaplectic cover element (g, eps), eps in {+1, -1}.
struct CoverElement {
    GSpElement g;
    int eps;

    bool operator==(const CoverElement& o) const { return g == o.g && eps == o.eps; }
    bool operator!=(const CoverElement& o) const { return !(*this == o); }
};

inline CoverElement cover_identity(std::size_t n) { return CoverElement{sp_identity(n), 1}; }

// Kubota's SL2 cocycle c(g, h) = (x(gh) x(g)^{-1}, x(gh) x(h)^{-1})_F,
// x = lower-left entry if nonzero else lower-right.
int kubota_cocycle(const GSpElement& g, const GSpElement& h, const PadicContext& ctx);

// Rao's cocycle on Sp(2n), rule-based: inverse pair, Omega_0 factor, or n = 1.
CocycleValue cocycle_sp(const GSpElement& g, const GSpElement& h, const PadicContext& ctx);

// v_lambda(g) = (x(g), lambda^{j+1})_F (lambda, lambda)_F^{j(j-1)/2}, g in Sp.
int v_lambda(const GSpElement& g, const Rat& lambda, const PadicContext& ctx);

// Extension cocycle on GSp: c~(g,h) = v_{lambda(h)}(g_1) c(g_1^{i(lambda(h))}, h_1).
CocycleValue cocycle_gsp(const GSpElement& g, const GSpElement& h, const PadicContext& ctx);

// path_out, when given, records which closed formula evaluated the cocycle.
CoverElement cover_mul(const CoverElement& s, const CoverElement& t, const PadicContext& ctx,
                       CocyclePath* path_out = nullptr);

// Inverse via the closed form c~(g, g^{-1}) = (-lambda,-1)^{j(j-1)/2} (x(g_1), (-lambda)^{j+1});
// always evaluable.
CoverElement cover_inverse(const CoverElement& s, const PadicContext& ctx);

// d(g,h) = (x(g_1), lambda(h)) (x(h_1), lambda^{j+1}) (lambda, lambda)^{j(j-1)/2},
// lambda = lambda(g), j the cell of h_1; requires g_1 in Omega_0.
int d_conj(const GSpElement& g, const GSpElement& h, const PadicContext& ctx);

// (g,.) tau (g,.)^{-1} = (g h g^{-1}, eps' d(g,h)); independent of the conjugator's sign.
CoverElement conj_by(const GSpElement& g, const CoverElement& tau, const PadicContext& ctx);

} // namespace metaplectic
