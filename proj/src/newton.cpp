#include "radix/newton.hpp"

#include <sstream>

#include "radix/arith.hpp"

namespace radix::oracle {

int ideg(const IntPoly& f) {
    int d = (int)f.size() - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;
}

void itrim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly imul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    itrim(r);
    return r;
}

IntPoly isub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    itrim(r);
    return r;
}

void idivrem_monic(const IntPoly& a, const IntPoly& b, IntPoly& quo, IntPoly& rem) {
    IntPoly bb = b;
    itrim(bb);
    if (bb.empty() || bb.back() != 1)
        throw std::invalid_argument("idivrem_monic: divisor must be monic");
    rem = a;
    itrim(rem);
    quo.assign(rem.size() >= bb.size() ? rem.size() - bb.size() + 1 : 0, 0);
    while (rem.size() >= bb.size() && !rem.empty()) {
        size_t shift = rem.size() - bb.size();
        BigInt c = rem.back();
        quo[shift] = c;
        for (size_t i = 0; i < bb.size(); ++i) rem[shift + i] -= c * bb[i];
        itrim(rem);
    }
    itrim(quo);
}

BigInt ieval(const IntPoly& f, const BigInt& x) {
    BigInt r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly ideriv(const IntPoly& f) {
    IntPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(BigInt(i) * f[i]);
    itrim(r);
    return r;
}

std::string istr(const IntPoly& f) {
    IntPoly g = f;
    itrim(g);
    if (g.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = ideg(g); i >= 0; --i) {
        if (g[i] == 0) continue;
        BigInt c = g[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        BigInt ac = c < 0 ? -c : c;
        if (i == 0 || ac != 1) os << ac;
        if (i >= 1) {
            if (ac != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

long long gauss_valuation(const IntPoly& f, const BigInt& p) {
    long long best = -1;
    for (const auto& c : f) {
        if (c == 0) continue;
        long long v = vp(c, p);
        if (best < 0 || v < best) best = v;
    }
    if (best < 0) throw std::invalid_argument("gauss_valuation: zero polynomial");
    return best;
}

PhiDevelopment phi_development(const IntPoly& f, const IntPoly& phi, const BigInt& p) {
    IntPoly ff = f, ph = phi;
    itrim(ff);
    itrim(ph);
    if (ff.empty() || ff.back() != 1 || ph.empty() || ph.back() != 1)
        throw std::invalid_argument("phi_development: f and phi must be monic");
    if (ideg(ph) < 1 || ideg(ph) > ideg(ff))
        throw std::invalid_argument("phi_development: need 1 <= deg phi <= deg f");
    PhiDevelopment dev;
    dev.phi = ph;
    dev.p = p;
    IntPoly cur = ff;
    while (!cur.empty()) {
        IntPoly quo, rem;
        idivrem_monic(cur, ph, quo, rem);
        dev.coeffs.push_back(rem);
        dev.valuations.push_back(rem.empty() ? std::nullopt
                                             : std::optional<long long>(gauss_valuation(rem, p)));
        cur = quo;
    }
    return dev;
}

PrincipalPolygon principal_polygon(const PhiDevelopment& dev) {
    std::vector<std::pair<long long, long long>> pts; // (i, v_p(a_i)), finite only
    for (size_t i = 0; i < dev.coeffs.size(); ++i)
        if (dev.valuations[i]) pts.push_back({(long long)i, *dev.valuations[i]});
    PrincipalPolygon poly;
    if (pts.size() < 2) return poly;
    // lower convex hull, strict turns only (collinear interior points dropped)
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            BigInt cross = BigInt(b.first - a.first) * (pt.second - a.second) -
                           BigInt(b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    // keep only the strictly decreasing (negative slope) part
    std::vector<std::pair<long long, long long>> principal;
    for (size_t i = 0; i < hull.size(); ++i) {
        if (i + 1 < hull.size() && hull[i + 1].second < hull[i].second)
            principal.push_back(hull[i]);
        else if (!principal.empty() && hull[i].second < principal.back().second) {
            principal.push_back(hull[i]);
            break;
        }
    }
    if (principal.size() < 2) return poly;
    poly.vertices = principal;
    for (size_t i = 0; i + 1 < principal.size(); ++i) {
        PolygonSide s;
        s.i0 = principal[i].first;
        s.v0 = principal[i].second;
        s.i1 = principal[i + 1].first;
        s.v1 = principal[i + 1].second;
        BigInt dh = s.v0 - s.v1;
        BigInt de = s.i1 - s.i0;
        BigInt g = bgcd(dh, de);
        s.h = dh / g;
        s.e = de / g;
        s.length = s.i1 - s.i0;
        s.degree = (BigInt(s.length) / s.e).convert_to<long long>();
        poly.sides.push_back(s);
    }
    return poly;
}

ResidualPolynomial residual_polynomial(const PhiDevelopment& dev, const PrincipalPolygon& poly,
                                       size_t side, const ff::FqField& kphi) {
    if (side >= poly.sides.size()) throw std::out_of_range("residual_polynomial: no such side");
    const PolygonSide& s = poly.sides[side];
    long long e = s.e.convert_to<long long>();
    long long h = s.h.convert_to<long long>();
    ResidualPolynomial res;
    res.side_index = side;
    for (long long j = 0; j <= s.degree; ++j) {
        long long i = s.i0 + j * e;
        long long vline = s.v0 - j * h;
        ff::FqField::Elem c = kphi.zero();
        if ((size_t)i < dev.coeffs.size() && dev.valuations[i] && *dev.valuations[i] == vline) {
            // red(a_i / p^vline): reduce the unit part mod (p, phi)
            const IntPoly& ai = dev.coeffs[i];
            BigInt pe = bpow(dev.p, vline);
            for (size_t d = 0; d < ai.size(); ++d) {
                BigInt u = bmod(ai[d] / pe, dev.p);
                if (u != 0) {
                    ff::FqField::Elem mono = kphi.zero();
                    mono[d] = u.convert_to<std::uint64_t>();
                    c = kphi.add(c, mono);
                }
            }
        }
        res.coeffs.push_back(c);
    }
    ff::ptrim(res.coeffs, kphi);
    return res;
}

OreResult ore_shape(const IntPoly& f, const BigInt& p) {
    IntPoly ff = f;
    itrim(ff);
    if (ff.empty() || ff.back() != 1) throw std::invalid_argument("ore_shape: f must be monic");
    OreResult out;
    std::uint64_t ps = p.convert_to<std::uint64_t>();
    ff::FqField Fp(ps, 1);
    ff::FqPoly fbar;
    for (const auto& c : ff) fbar.push_back(Fp.from_int(c));
    ff::ptrim(fbar, Fp);
    for (const auto& [phibar, mult] : ff::factor(fbar, Fp)) {
        if (mult == 1) {
            out.shape.add(1, ff::pdeg(phibar), 1);
            continue;
        }
        // lift phi with coefficients in [0, p)
        IntPoly phi;
        for (const auto& c : phibar) phi.push_back(BigInt(c[0]));
        PhiDevelopment dev = phi_development(ff, phi, p);
        PrincipalPolygon poly = principal_polygon(dev);
        long long covered = 0;
        for (const auto& s : poly.sides) covered += s.length;
        if (covered != mult) {
            out.conclusive = false;
            out.detail = "NeedsHigherDissection: polygon length does not match multiplicity";
            return out;
        }
        std::vector<std::uint64_t> mod;
        for (const auto& c : phibar) mod.push_back(c[0]);
        ff::FqField kphi(ps, mod);
        for (size_t si = 0; si < poly.sides.size(); ++si) {
            const PolygonSide& s = poly.sides[si];
            ResidualPolynomial rs = residual_polynomial(dev, poly, si, kphi);
            ff::FqPoly rp = rs.coeffs;
            if (ff::pdeg(rp) != (int)s.degree)
                throw std::logic_error("ore_shape: residual degree mismatch");
            // separability check
            ff::FqPoly g = ff::pgcd(rp, ff::pderiv(rp, kphi), kphi);
            if (ff::pdeg(g) != 0) {
                out.conclusive = false;
                out.detail = "NeedsHigherDissection: inseparable residual polynomial";
                return out;
            }
            long long e = s.e.convert_to<long long>();
            for (const auto& [psi, pm] : ff::factor(rp, kphi)) {
                if (pm != 1) throw std::logic_error("ore_shape: separable residual with repeated factor");
                out.shape.add(e, (long long)ff::pdeg(phibar) * ff::pdeg(psi), 1);
            }
        }
    }
    out.shape.canonicalize();
    out.conclusive = true;
    out.detail = "first dissection complete";
    if (out.shape.degree_sum() != ideg(ff))
        throw std::logic_error("ore_shape: degree sum mismatch");
    return out;
}

} // namespace radix::oracle
