#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "metaplectic/matrix.hpp"
#include "metaplectic/padic.hpp"

namespace metaplectic {

// Element of GSp(2n, Q_p): 2n x 2n exact rational matrix with cached similitude,
// g J g^t = lambda J.
class GSpElement {
  public:
    GSpElement() : n_(0) {}

    std::size_t n() const { return n_; }
    const RatMat& mat() const { return m_; }
    const Rat& lambda() const { return lambda_; }
    bool is_sp() const { return lambda_ == 1; }

    GSpElement operator*(const GSpElement& o) const;
    GSpElement inverse() const; // g^{-1} = lambda^{-1} J g^t J^{-1}, exact
    bool operator==(const GSpElement& o) const { return m_ == o.m_; }
    bool operator!=(const GSpElement& o) const { return !(*this == o); }

    RatMat block_a() const { return m_.block(0, 0, n_, n_); }
    RatMat block_b() const { return m_.block(0, n_, n_, n_); }
    RatMat block_c() const { return m_.block(n_, 0, n_, n_); }
    RatMat block_d() const { return m_.block(n_, n_, n_, n_); }

    friend GSpElement make_gsp(const RatMat& m, const PadicContext& ctx);
    friend GSpElement make_gsp_unchecked(const RatMat& m, const Rat& lambda);

  private:
    GSpElement(std::size_t n, RatMat m, Rat lambda)
        : n_(n), m_(std::move(m)), lambda_(std::move(lambda)) {}

    std::size_t n_;
    RatMat m_;
    Rat lambda_;
};

GSpElement make_gsp(const RatMat& m, const PadicContext& ctx);
GSpElement make_gsp_unchecked(const RatMat& m, const Rat& lambda);

// i(lambda) = diag(I_n, lambda I_n)
GSpElement i_lambda(std::size_t n, const Rat& lambda);

// Siegel-parabolic generators of Omega_0.
GSpElement levi_m(const RatMat& a);                   // diag(a, (a^t)^{-1}), x = det(a)
GSpElement shear_u(const RatMat& s);                  // [[I, s], [0, I]], s symmetric
GSpElement shear_l(const RatMat& s);                  // [[I, 0], [s, I]], s symmetric
GSpElement sp_identity(std::size_t n);
GSpElement tau_cell(std::size_t n, std::size_t j);    // i_{j,n}-embedding of J_{2j}

// g_1 = i(lambda(g)^{-1}) g, lands in Sp.
GSpElement g_one(const GSpElement& g);

// Block embedding GSp(2r) -> GSp(2n) (similitude preserved).
GSpElement embed_i_rn(const GSpElement& h, std::size_t r, std::size_t n);

// Conjugation g^{i(lambda)} = i(lambda)^{-1} g i(lambda).
GSpElement conj_i_lambda(const GSpElement& g, const Rat& lambda);

// Bruhat cell index: rank of the lower-left block (of g_1 for GSp inputs).
std::size_t cell_rank(const GSpElement& g);

bool in_omega0(const GSpElement& g); // cell_rank == 0

struct BruhatFactorization {
    GSpElement p1;      // in Omega_0 (Sp)
    std::size_t j;      // cell rank
    GSpElement p2;      // in Omega_0 (Sp)
    GSpElement tau;     // canonical cell representative tau_j
    SquareClass x_p1;   // det of the a-block of p1, mod squares
    SquareClass x_p2;
};

// Exact constructive factorization g = p1 tau_j p2 with p1, p2 in Omega_0.
// A seeded rng randomizes pivot choices (used by the well-definedness suite).
BruhatFactorization bruhat_factor(const GSpElement& g, const PadicContext& ctx,
                                  std::mt19937_64* rng = nullptr);

// Rao's x-map on Sp(2n), values in F*/F*^2. On Omega_0 it is det of the a-block;
// on the j-th cell it is extended through the factorization with the tau_j value
// calibrated so that n = 1 agrees with Kubota's convention.
SquareClass x_of(const GSpElement& g, const PadicContext& ctx, std::mt19937_64* rng = nullptr);

// Kubota's x for n = 1: lower-left entry if nonzero, else lower-right.
SquareClass x_kubota(const GSpElement& g, const PadicContext& ctx);

// Deterministic random Sp(2n) element: bounded word in torus, shear and
// embedded-Weyl generators with small rational parameters.
GSpElement random_sp(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng);

// random_sp twisted by i(lambda) with a random class-representative similitude.
GSpElement random_gsp(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng);

// Random element of Omega_0 with unit similitude.
GSpElement random_omega0(std::size_t n, const PadicContext& ctx, std::mt19937_64& rng);

} // namespace metaplectic
