#pragma once

#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "metaplectic/rational.hpp"

namespace metaplectic {

using Cplx = std::complex<double>;

struct PadicContext {
    long p;
    long oracle_depth; // modulus exponent ceiling for the solvability oracle
    long gauss_terms;  // truncation exponent m for the Gauss-sum oracle

    explicit PadicContext(long prime, long depth = 7, long terms = 4);

    bool operator==(const PadicContext& o) const { return p == o.p; }
};

// Canonical representative of an element of Q_p^* / (Q_p^*)^2.
// p odd: reps {1, u, p, u p} with u the least positive non-residue mod p.
// p = 2: reps {1, -1, 5, -5, 2, -2, 10, -10}.
class SquareClass {
  public:
    SquareClass() : p_(0), idx_(0) {}
    SquareClass(long p, int idx) : p_(p), idx_(idx) {}

    long p() const { return p_; }
    int index() const { return idx_; }
    Rat rep() const;
    bool is_trivial() const { return idx_ == 0; }

    SquareClass operator*(const SquareClass& o) const;
    SquareClass inverse() const { return *this; } // 2-torsion group

    bool operator==(const SquareClass& o) const { return p_ == o.p_ && idx_ == o.idx_; }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    bool operator<(const SquareClass& o) const { return idx_ < o.idx_; }

  private:
    long p_;
    int idx_;
};

// Least positive quadratic non-residue mod an odd prime.
long least_nonresidue(long p);

// Number of square classes: 4 for p odd, 8 for p = 2.
int class_count(long p);

// All class representatives in canonical order.
std::vector<SquareClass> all_classes(const PadicContext& ctx);

SquareClass square_class(const Rat& a, const PadicContext& ctx);

int hilbert_symbol(const Rat& a, const Rat& b, const PadicContext& ctx);
int hilbert_oracle(const Rat& a, const Rat& b, const PadicContext& ctx);

// The quadratic character eta_a: b -> (a,b)_F.
class Eta {
  public:
    Eta(const Rat& a, const PadicContext& ctx) : a_(square_class(a, ctx)), ctx_(ctx) {}
    int operator()(const Rat& b) const { return hilbert_symbol(a_.rep(), b, ctx_); }
    SquareClass cls() const { return a_; }

  private:
    SquareClass a_;
    PadicContext ctx_;
};

inline Eta eta(const Rat& a, const PadicContext& ctx) { return Eta(a, ctx); }

// Exact fourth root of unity, stored as a Gaussian-integer pair.
class FourthRoot {
  public:
    FourthRoot() : re_(1), im_(0) {}
    FourthRoot(int re, int im) : re_(re), im_(im) {
        if (re * re + im * im != 1) throw std::domain_error("FourthRoot: not a unit");
    }
    static FourthRoot one() { return FourthRoot(1, 0); }
    static FourthRoot i() { return FourthRoot(0, 1); }

    int re() const { return re_; }
    int im() const { return im_; }
    Cplx value() const { return Cplx(re_, im_); }

    FourthRoot operator*(const FourthRoot& o) const {
        return FourthRoot(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    FourthRoot operator*(int sign) const { return FourthRoot(re_ * sign, im_ * sign); }
    FourthRoot inverse() const { return FourthRoot(re_, -im_); }
    FourthRoot pow(long e) const;

    bool operator==(const FourthRoot& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const FourthRoot& o) const { return !(*this == o); }

    std::string str() const;

    // Snap a complex unit to the nearest fourth root; throws if off by more than tol.
    static FourthRoot from_complex(const Cplx& z, double tol = 1e-9);

  private:
    int re_, im_;
};

// Additive character data: psi_a relative to the standard character of conductor Z_p.
struct PsiSpec {
    PadicContext ctx;
    SquareClass shift;

    explicit PsiSpec(const PadicContext& c) : ctx(c), shift(square_class(1, c)) {}
    PsiSpec(const PadicContext& c, const Rat& a) : ctx(c), shift(square_class(a, c)) {}
};

// Stabilized numerical Weil-factor oracle (complex unit; within 1e-9 of a fourth root).
Cplx weil_gauss_oracle(const PsiSpec& psi, const Rat& a);

// Exact normalized Weil factor gamma_psi(a). p odd: exact table seeded once from the
// oracle and extended by eq. (gammaprop). p = 2 raises UnsupportedPrime.
FourthRoot weil_factor(const PsiSpec& psi, const Rat& a);

// gamma table usable at every prime: exact for p odd, oracle-snapped for p = 2.
class WeilTable {
  public:
    explicit WeilTable(const PsiSpec& psi);
    FourthRoot gamma(const SquareClass& c) const;
    FourthRoot gamma(const Rat& a) const;
    const PsiSpec& psi() const { return psi_; }

  private:
    PsiSpec psi_;
    std::vector<FourthRoot> table_; // indexed by class index
};

} // namespace metaplectic
