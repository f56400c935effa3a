#include "metaplectic/cover.hpp"

namespace metaplectic {

const char* cocycle_path_name(CocyclePath p) {
    switch (p) {
        case CocyclePath::OmegaZeroLeft: return "OmegaZeroLeft";
        case CocyclePath::OmegaZeroRight: return "OmegaZeroRight";
        case CocyclePath::InversePair: return "InversePair";
        case CocyclePath::KubotaN1: return "KubotaN1";
        default: return "CentralFactor";
    }
}

int kubota_cocycle(const GSpElement& g, const GSpElement& h, const PadicContext& ctx) {
    if (g.n() != 1 || h.n() != 1) throw ShapeMismatch("kubota_cocycle: n = 1 only");
    SquareClass xg = x_kubota(g, ctx);
    SquareClass xh = x_kubota(h, ctx);
    SquareClass xgh = x_kubota(g * h, ctx);
    return hilbert_symbol((xgh * xg).rep(), (xgh * xh).rep(), ctx);
}

CocycleValue cocycle_sp(const GSpElement& g, const GSpElement& h, const PadicContext& ctx) {
    if (!g.is_sp() || !h.is_sp()) throw std::domain_error("cocycle_sp: arguments must lie in Sp");
    if (h == g.inverse()) {
        std::size_t j = cell_rank(g);
        Rat xg = x_of(g, ctx).rep();
        int s = hilbert_symbol(xg, ((j % 2) ? -xg : xg), ctx);
        if ((j * (j - 1) / 2) % 2) s *= hilbert_symbol(Rat(-1), Rat(-1), ctx);
        return {s, CocyclePath::InversePair};
    }
    if (in_omega0(g)) {
        int s = hilbert_symbol(x_of(g, ctx).rep(), x_of(h, ctx).rep(), ctx);
        return {s, CocyclePath::OmegaZeroLeft};
    }
    if (in_omega0(h)) {
        int s = hilbert_symbol(x_of(g, ctx).rep(), x_of(h, ctx).rep(), ctx);
        return {s, CocyclePath::OmegaZeroRight};
    }
    if (g.n() == 1) return {kubota_cocycle(g, h, ctx), CocyclePath::KubotaN1};
    throw UnsupportedCocyclePath(
        "cocycle_sp: no rule for this pair (n >= 2, both factors in big cells, h != g^{-1})");
}

int v_lambda(const GSpElement& g, const Rat& lambda, const PadicContext& ctx) {
    if (!g.is_sp()) throw std::domain_error("v_lambda: g must lie in Sp");
    if (lambda == 0) throw ZeroInput("v_lambda: zero lambda");
    std::size_t j = cell_rank(g);
    int s = 1;
    if ((j + 1) % 2) s *= hilbert_symbol(x_of(g, ctx).rep(), lambda, ctx);
    if ((j * (j - 1) / 2) % 2) s *= hilbert_symbol(lambda, lambda, ctx);
    return s;
}

CocycleValue cocycle_gsp(const GSpElement& g, const GSpElement& h, const PadicContext& ctx) {
    GSpElement g1 = g.is_sp() ? g : g_one(g);
    GSpElement h1 = h.is_sp() ? h : g_one(h);
    const Rat& lh = h.lambda();
    int v = v_lambda(g1, lh, ctx);
    GSpElement g1c = (lh == 1) ? g1 : conj_i_lambda(g1, lh);
    CocycleValue inner = cocycle_sp(g1c, h1, ctx);
    return {v * inner.sign, inner.path};
}

CoverElement cover_mul(const CoverElement& s, const CoverElement& t, const PadicContext& ctx,
                       CocyclePath* path_out) {
    CocycleValue c = cocycle_gsp(s.g, t.g, ctx);
    if (path_out) *path_out = c.path;
    return {s.g * t.g, s.eps * t.eps * c.sign};
}

CoverElement cover_inverse(const CoverElement& s, const PadicContext& ctx) {
    GSpElement g1 = s.g.is_sp() ? s.g : g_one(s.g);
    std::size_t j = cell_rank(g1);
    const Rat& lambda = s.g.lambda();
    int c = 1;
    if ((j * (j - 1) / 2) % 2) c *= hilbert_symbol(-lambda, Rat(-1), ctx);
    if ((j + 1) % 2) c *= hilbert_symbol(x_of(g1, ctx).rep(), -lambda, ctx);
    return {s.g.inverse(), s.eps * c};
}

int d_conj(const GSpElement& g, const GSpElement& h, const PadicContext& ctx) {
    GSpElement g1 = g.is_sp() ? g : g_one(g);
    if (!in_omega0(g1)) throw ConjugatorNotOmegaZero("d_conj: g_1 must lie in Omega_0");
    GSpElement h1 = h.is_sp() ? h : g_one(h);
    std::size_t j = cell_rank(h1);
    const Rat& lambda = g.lambda();
    int d = hilbert_symbol(x_of(g1, ctx).rep(), h.lambda(), ctx);
    if ((j + 1) % 2) d *= hilbert_symbol(x_of(h1, ctx).rep(), lambda, ctx);
    if ((j * (j - 1) / 2) % 2) d *= hilbert_symbol(lambda, lambda, ctx);
    return d;
}

CoverElement conj_by(const GSpElement& g, const CoverElement& tau, const PadicContext& ctx) {
    int d = d_conj(g, tau.g, ctx);
    return {g * tau.g * g.inverse(), tau.eps * d};
}

} // namespace metaplectic
