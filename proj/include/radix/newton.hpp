#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radix/ffpoly.hpp"
#include "radix/numutil.hpp"
#include "radix/shape.hpp"

namespace radix::oracle {

// Dense integer polynomial, c[i] is the coefficient of x^i.
using IntPoly = std::vector<BigInt>;

int ideg(const IntPoly& f);
void itrim(IntPoly& f);
IntPoly imul(const IntPoly& a, const IntPoly& b);
IntPoly isub(const IntPoly& a, const IntPoly& b);
// division by a monic divisor, exact over Z
void idivrem_monic(const IntPoly& a, const IntPoly& b, IntPoly& quo, IntPoly& rem);
BigInt ieval(const IntPoly& f, const BigInt& x);
IntPoly ideriv(const IntPoly& f);
std::string istr(const IntPoly& f);

// min over coefficients of v_p; f must be nonzero
long long gauss_valuation(const IntPoly& f, const BigInt& p);

struct PhiDevelopment {
    IntPoly phi;                                     // monic base
    std::vector<IntPoly> coeffs;                     // a_i(x), deg < deg phi
    std::vector<std::optional<long long>> valuations; // nullopt when a_i = 0
    BigInt p;
};

PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi, const BigInt& p);

struct PolygonSide {
    long long i0 = 0, v0 = 0; // left endpoint (index, valuation)
    long long i1 = 0, v1 = 0; // right endpoint
    BigInt h, e;              // slope = -h/e in lowest terms, h,e > 0
    long long length = 0;     // i1 - i0
    long long degree = 0;     // length / e
};

struct PrincipalPolygon {
    std::vector<std::pair<long long, long long>> vertices; // minimal vertex list
    std::vector<PolygonSide> sides;                        // negative slopes, increasing
};

PrincipalPolygon principal_polygon(const PhiDevelopment& dev);

struct ResidualPolynomial {
    size_t side_index = 0;
    ff::FqPoly coeffs; // over k_{p,phi} = F_p[x]/(phi mod p)
};

// kphi must be F_p[x]/(phi mod p) for the development's phi
ResidualPolynomial residual_polynomial(const PhiDevelopment& dev, const PrincipalPolygon& poly,
                                       size_t side, const ff::FqField& kphi);

struct OreResult {
    bool conclusive = false; // false means a higher dissection would be needed
    FactorShape shape;
    std::string detail;
};

// First dissection: factor shape of p in Z[x]/(f) when every residual
// polynomial is separable; otherwise reports NeedsHigherDissection.
OreResult ore_shape(const IntPoly& f, const BigInt& p);

} // namespace radix::oracle
