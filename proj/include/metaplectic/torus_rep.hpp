#pragma once

#include "metaplectic/characters.hpp"

namespace metaplectic {

// Small dense complex matrix for the induced representations.
class CplxMat {
  public:
    CplxMat() : d_(0) {}
    explicit CplxMat(std::size_t d) : d_(d), a_(d * d) {}
    static CplxMat identity(std::size_t d) {
        CplxMat m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return d_; }
    Cplx& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    const Cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

    CplxMat operator*(const CplxMat& o) const {
        CplxMat r(d_);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t k = 0; k < d_; ++k) {
                Cplx x = (*this)(i, k);
                if (x == Cplx(0.0, 0.0)) continue;
                for (std::size_t j = 0; j < d_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    CplxMat operator+(const CplxMat& o) const {
        CplxMat r(d_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    CplxMat operator-(const CplxMat& o) const {
        CplxMat r(d_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    CplxMat scaled(const Cplx& c) const {
        CplxMat r(d_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }
    double max_abs() const {
        double m = 0;
        for (const auto& x : a_) m = std::max(m, std::abs(x));
        return m;
    }
    double dist(const CplxMat& o) const { return (*this - o).max_abs(); }
    Cplx trace() const {
        Cplx t = 0;
        for (std::size_t i = 0; i < d_; ++i) t += (*this)(i, i);
        return t;
    }

  private:
    std::size_t d_;
    std::vector<Cplx> a_;
};

// Covered-torus point of T'(2n): diag(t_1..t_n, lambda/t_1..lambda/t_n) with a sign.
struct TorusPoint {
    std::vector<Rat> t;
    Rat lambda;
    int eps;

    CoverElement cover() const { return {make_torus(t, lambda), eps}; }
};

// Genuine character of the covered T+(2n):
// (t, eps) -> eps . prod xi_i(t_i) . xi0(lambda) . gamma_psi(x(t_1)),
// with x(t_1) = class(prod t_i).
class GenuineTorusChar {
  public:
    GenuineTorusChar(std::vector<Character> xi, Character xi0, const PsiSpec& psi);

    std::size_t rank() const { return xi_.size(); }
    const PsiSpec& psi() const { return psi_; }
    const std::vector<Character>& xi() const { return xi_; }
    const Character& xi0() const { return xi0_; }

    // s must project to a diagonal torus element with square similitude.
    Cplx evaluate(const CoverElement& s) const;

  private:
    std::vector<Character> xi_;
    Character xi0_;
    PsiSpec psi_;
    std::shared_ptr<const WeilTable> wt_;
};

// Eigencharacter of the restriction to T+(2n)-bar attached to the coset label a:
// w_a(s) = chi+((i(a),1) s (i(a),1)^{-1}).
struct TorusEigenChar {
    GenuineTorusChar base;
    SquareClass label;

    Cplx evaluate(const CoverElement& s) const;
};

// Genuine irreducible representation of T'(2n)-bar induced from a genuine
// character of T+(2n)-bar; dimension [F*:F*^2], realized on the coset labels i(a).
class TorusRep {
  public:
    explicit TorusRep(const GenuineTorusChar& base);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<SquareClass>& labels() const { return labels_; }
    const GenuineTorusChar& base() const { return base_; }

    CplxMat evaluate(const CoverElement& s) const;

  private:
    GenuineTorusChar base_;
    std::vector<SquareClass> labels_;
};

inline TorusRep induce(const GenuineTorusChar& chi_plus) { return TorusRep(chi_plus); }

// Coset representatives (i(a), 1) of T'-bar / T+-bar as cover elements.
std::vector<CoverElement> torus_coset_reps(std::size_t n, const PadicContext& ctx);

// Z_t representatives for the torus shape (1,...,1; 0), as cover elements of T+.
std::vector<CoverElement> torus_zt_reps(std::size_t n, const PadicContext& ctx);

// Restriction to T+-bar: one eigencharacter per coset label, with the dimension of
// its eigenspace (multiplicity-one: all dimensions 1).
std::vector<std::pair<TorusEigenChar, long>> restrict_decompose(const TorusRep& rho);

// phi_w = [F*:F*^2]^{-1} sum_{b in Z_t} w^{-1}(b) rho(b).
CplxMat eigen_project(const TorusRep& rho, const TorusEigenChar& w);

// The explicit maps v -> f(v), f -> v(f) compose to the identity: checks
// phi_w rho(i(y)) T = phi_w rho(i(y)) for T = sum_a rho(i(a),1) phi_w rho(i(a^{-1}),1).
bool induction_roundtrip(const TorusRep& rho, const TorusEigenChar& w, double tol = 1e-10);

} // namespace metaplectic
