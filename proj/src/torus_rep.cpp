#include "metaplectic/torus_rep.hpp"

namespace metaplectic {

namespace {

std::vector<Rat> diag_entries(const GSpElement& g) {
    std::size_t n = g.n();
    std::vector<Rat> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < 2 * n; ++j)
            if (g.mat()(i, j) != 0 && j != i)
                throw std::domain_error("torus element expected (off-diagonal entry)");
        t[i] = g.mat()(i, i);
    }
    return t;
}

} // namespace

GenuineTorusChar::GenuineTorusChar(std::vector<Character> xi, Character xi0, const PsiSpec& psi)
    : xi_(std::move(xi)), xi0_(std::move(xi0)), psi_(psi),
      wt_(std::make_shared<WeilTable>(psi)) {
    if (xi_.empty()) throw ShapeMismatch("GenuineTorusChar: rank >= 1 required");
}

Cplx GenuineTorusChar::evaluate(const CoverElement& s) const {
    const PadicContext& ctx = psi_.ctx;
    if (!square_class(s.g.lambda(), ctx).is_trivial())
        throw std::domain_error("GenuineTorusChar: element must lie in the covered T+");
    std::vector<Rat> t = diag_entries(s.g);
    if (t.size() != xi_.size()) throw ShapeMismatch("GenuineTorusChar: rank mismatch");
    Cplx v(static_cast<double>(s.eps), 0.0);
    Rat prod = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        v *= xi_[i].evaluate(t[i]);
        prod *= t[i];
    }
    v *= xi0_.evaluate(s.g.lambda());
    v *= wt_->gamma(prod).value();
    return v;
}

Cplx TorusEigenChar::evaluate(const CoverElement& s) const {
    const PadicContext& ctx = base.psi().ctx;
    CoverElement ia{i_lambda(s.g.n(), label.rep()), 1};
    CoverElement conj = cover_mul(cover_mul(ia, s, ctx), cover_inverse(ia, ctx), ctx);
    return base.evaluate(conj);
}

TorusRep::TorusRep(const GenuineTorusChar& base) : base_(base) {
    PadicContext ctx = base.psi().ctx;
    labels_ = all_classes(ctx);
}

CplxMat TorusRep::evaluate(const CoverElement& s) const {
    const PadicContext& ctx = base_.psi().ctx;
    std::size_t n = s.g.n();
    if (n != base_.rank()) throw ShapeMismatch("TorusRep: rank mismatch");
    SquareClass ls = square_class(s.g.lambda(), ctx);
    CplxMat m(labels_.size());
    for (std::size_t col = 0; col < labels_.size(); ++col) {
        SquareClass a = labels_[col];
        SquareClass ap = a * ls;
        std::size_t row = static_cast<std::size_t>(ap.index());
        // h = (i(a'),1) s (i(a),1)^{-1} lies in the covered T+.
        CoverElement iap{i_lambda(n, ap.rep()), 1};
        CoverElement ia{i_lambda(n, a.rep()), 1};
        CoverElement h = cover_mul(cover_mul(iap, s, ctx), cover_inverse(ia, ctx), ctx);
        m(row, col) = base_.evaluate(h);
    }
    return m;
}

std::vector<CoverElement> torus_coset_reps(std::size_t n, const PadicContext& ctx) {
    std::vector<CoverElement> reps;
    for (const auto& a : all_classes(ctx)) reps.push_back({i_lambda(n, a.rep()), 1});
    return reps;
}

std::vector<CoverElement> torus_zt_reps(std::size_t n, const PadicContext& ctx) {
    std::vector<CoverElement> reps;
    for (const auto& c : all_classes(ctx)) {
        std::vector<Rat> t(n, Rat(1));
        t[0] = c.rep();
        reps.push_back({make_torus(t, Rat(1)), 1});
    }
    return reps;
}

std::vector<std::pair<TorusEigenChar, long>> restrict_decompose(const TorusRep& rho) {
    std::vector<std::pair<TorusEigenChar, long>> out;
    for (const auto& a : rho.labels()) {
        TorusEigenChar w{rho.base(), a};
        CplxMat proj = eigen_project(rho, w);
        long dim = std::lround(proj.trace().real());
        out.emplace_back(std::move(w), dim);
    }
    return out;
}

CplxMat eigen_project(const TorusRep& rho, const TorusEigenChar& w) {
    const PadicContext& ctx = rho.base().psi().ctx;
    auto zt = torus_zt_reps(rho.base().rank(), ctx);
    CplxMat acc(rho.dim());
    for (const auto& z : zt) {
        Cplx coef = Cplx(1.0, 0.0) / w.evaluate(z);
        acc = acc + rho.evaluate(z).scaled(coef);
    }
    return acc.scaled(Cplx(1.0 / static_cast<double>(zt.size()), 0.0));
}

bool induction_roundtrip(const TorusRep& rho, const TorusEigenChar& w, double tol) {
    const PadicContext& ctx = rho.base().psi().ctx;
    CplxMat phi = eigen_project(rho, w);
    auto cosets = torus_coset_reps(rho.base().rank(), ctx);
    CplxMat t(rho.dim());
    for (const auto& ia : cosets) {
        CplxMat r = rho.evaluate(ia);
        CplxMat rinv = rho.evaluate(cover_inverse(ia, ctx));
        t = t + r * phi * rinv;
    }
    for (const auto& iy : cosets) {
        CplxMat lhs = phi * rho.evaluate(iy) * t;
        CplxMat rhs = phi * rho.evaluate(iy);
        if (lhs.dist(rhs) > tol) return false;
    }
    return true;
}

} // namespace metaplectic
