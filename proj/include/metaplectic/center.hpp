#pragma once

#include <set>

#include "metaplectic/cover.hpp"

namespace metaplectic {

enum class LeviType { Odd, Even };

// Standard Levi shape t = (n_1, ..., n_r; n_{r+1}).
struct LeviShape {
    std::vector<long> parts;
    long tail = 0;

    long n() const {
        long s = tail;
        for (long p : parts) s += p;
        return s;
    }
    bool operator==(const LeviShape& o) const { return parts == o.parts && tail == o.tail; }
};

LeviType levi_type(const LeviShape& t);

// Parse "n1,n2,...,nr;k" (empty part list allowed: ";k" or "k" for (n;0)-style input "n;0").
LeviShape parse_shape(const std::string& s);
std::string shape_str(const LeviShape& t);

// Element of the covered center of M+_t: parameters (a_1..a_r, b) realize
// diag(a_1 I, ..., a_r I, b I, b^2 a_1^{-1} I, ..., b^2 a_r^{-1} I, b I), lambda = b^2.
struct CentralElement {
    LeviShape shape;
    std::vector<Rat> a;
    Rat b;
    int eps;

    GSpElement to_gsp() const;
    CoverElement to_cover() const { return {to_gsp(), eps}; }
};

CentralElement central_identity(const LeviShape& t);

// x(g_1) = class(b^{n_{r+1}} prod_{n_k odd} a_k).
SquareClass x_on_center(const CentralElement& c, const PadicContext& ctx);

// Image of the covered center under x: all classes iff odd type, {1} iff even.
std::vector<SquareClass> center_image(const LeviShape& t, const PadicContext& ctx);

// Representatives of Z_t = Z(M+_t-bar) / Z(M'_t-bar), mapping bijectively onto
// F*/F*^2 under x(g_1) in the odd-type case; single trivial coset when even.
std::vector<CentralElement> z_t_reps(const LeviShape& t, const PadicContext& ctx);

// eq. (center structure): (g,e)(g',e') = (gg', ee' (x(g_1), x(g'_1))_F).
CentralElement center_mul(const CentralElement& c1, const CentralElement& c2,
                          const PadicContext& ctx);

// Diagonal torus element of GSp(2n): diag(t_1..t_n, lambda/t_1..lambda/t_n).
GSpElement make_torus(const std::vector<Rat>& entries, const Rat& lambda);

} // namespace metaplectic
