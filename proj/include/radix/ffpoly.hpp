#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "radix/numutil.hpp"

namespace radix::ff {

// F_{p^e} = F_p[z]/(modulus).  Elements are coefficient vectors of length e
// in the image of z.  F_4 is always F_2[z]/(z^2+z+1) with zeta_3 := z.
class FqField {
public:
    using Elem = std::vector<std::uint64_t>;

    FqField(std::uint64_t p, int e);                               // canonical modulus
    FqField(std::uint64_t p, std::vector<std::uint64_t> modulus);  // explicit modulus

    std::uint64_t p() const { return p_; }
    int e() const { return e_; }
    BigInt q() const { return bpow(BigInt(p_), e_); }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    Elem zero() const { return Elem(e_, 0); }
    Elem one() const;
    Elem gen() const; // the class of z
    Elem from_int(const BigInt& v) const;

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(Elem a, BigInt n) const;
    Elem pth_root(const Elem& a) const; // inverse Frobenius: a^(p^(e-1))

    std::string str(const Elem& a) const;

private:
    std::uint64_t p_;
    int e_;
    std::vector<std::uint64_t> mod_; // monic, length e_+1
    void check_irreducible() const;
};

// Dense polynomial over an FqField: c[i] is the coefficient of x^i.
using FqPoly = std::vector<FqField::Elem>;

int pdeg(const FqPoly& f);
void ptrim(FqPoly& f, const FqField& F);
FqPoly pzero();
FqPoly pconst(const FqField::Elem& c, const FqField& F);
bool peq(const FqPoly& a, const FqPoly& b, const FqField& F);
FqPoly padd(const FqPoly& a, const FqPoly& b, const FqField& F);
FqPoly psub(const FqPoly& a, const FqPoly& b, const FqField& F);
FqPoly pmul(const FqPoly& a, const FqPoly& b, const FqField& F);
FqPoly pscale(const FqPoly& a, const FqField::Elem& c, const FqField& F);
// division with remainder; divisor must be nonzero
void pdivrem(const FqPoly& a, const FqPoly& b, FqPoly& quo, FqPoly& rem, const FqField& F);
FqPoly pmod(const FqPoly& a, const FqPoly& b, const FqField& F);
FqPoly pmonic(const FqPoly& a, const FqField& F);
FqPoly pgcd(FqPoly a, FqPoly b, const FqField& F); // monic
FqPoly pderiv(const FqPoly& a, const FqField& F);
FqPoly ppowmod(FqPoly base, BigInt n, const FqPoly& mod, const FqField& F);
std::string pstr(const FqPoly& f, const FqField& F);

bool is_irreducible(const FqPoly& f, const FqField& F);

inline constexpr std::uint64_t FACTOR_DEFAULT_SEED = 0x5eed5eedULL;

// Full factorization into monic irreducibles with multiplicities, sorted by
// (degree, coefficients) for reproducibility.
std::vector<std::pair<FqPoly, long long>> factor(const FqPoly& poly, const FqField& F,
                                                 std::uint64_t seed = FACTOR_DEFAULT_SEED);

struct DegreeDistribution {
    std::map<long long, long long> counts; // degree -> number of factors (with multiplicity)
    bool distinct = true;                  // source polynomial squarefree

    long long total_degree() const {
        long long s = 0;
        for (auto& [f, c] : counts) s += f * c;
        return s;
    }
    bool operator==(const DegreeDistribution& o) const { return counts == o.counts; }
    std::string str() const;
};

// Degree distribution of x^d - 1 over F_q by cyclotomic cosets; gcd(d,q)=1.
DegreeDistribution cyclotomic_distribution(long long d, const BigInt& q);

// Number of monic irreducible polynomials of degree f over F_q.
BigInt irred_count(long long f, const BigInt& q);

// Degree distribution of x^n - c over the field (multiplicities included).
DegreeDistribution binomial_distribution(long long n, const FqField::Elem& c, const FqField& F,
                                         std::uint64_t seed = FACTOR_DEFAULT_SEED);

} // namespace radix::ff
