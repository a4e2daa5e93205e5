#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "laurent/arith.hpp"
#include "laurent/rational.hpp"

namespace laurent {

// Dense univariate polynomial over the rationals, coefficient of c^i at
// index i. Just enough for squarefree-part degree counting; fiber
// locations stay symbolic as root-polynomials.
struct UniPoly {
    std::vector<Rational> c;

    static UniPoly zero() { return {}; }

    static UniPoly one_minus_power(i64 k) {
        // 1 - c^k
        UniPoly p;
        p.c.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.c[0] = 1;
        p.c[static_cast<std::size_t>(k)] = -1;
        return p;
    }

    static UniPoly monomial_c() {
        UniPoly p;
        p.c = {Rational(0), Rational(1)};
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    i64 degree() const { return static_cast<i64>(c.size()) - 1; } // -1 for zero

    UniPoly derivative() const {
        UniPoly d;
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(Rational(static_cast<long>(i)) * c[i]);
        d.trim();
        return d;
    }

    UniPoly monic() const {
        UniPoly r = *this;
        r.trim();
        if (r.is_zero()) return r;
        Rational lead = r.c.back();
        for (auto& x : r.c) x /= lead;
        return r;
    }

    // Remainder of *this by b (b nonzero).
    UniPoly rem(const UniPoly& b) const {
        UniPoly r = *this;
        r.trim();
        UniPoly d = b;
        d.trim();
        if (d.is_zero()) throw std::domain_error("UniPoly::rem: division by zero");
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational q = r.c.back() / d.c.back();
            std::size_t shift = r.c.size() - d.c.size();
            for (std::size_t i = 0; i < d.c.size(); ++i) r.c[shift + i] -= q * d.c[i];
            r.trim();
        }
        return r;
    }

    // Exact quotient (throws if remainder nonzero).
    UniPoly quo(const UniPoly& b) const {
        UniPoly r = *this;
        r.trim();
        UniPoly d = b;
        d.trim();
        if (d.is_zero()) throw std::domain_error("UniPoly::quo: division by zero");
        UniPoly q;
        if (!r.is_zero() && r.degree() >= d.degree())
            q.c.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational qc = r.c.back() / d.c.back();
            std::size_t shift = r.c.size() - d.c.size();
            q.c[shift] = qc;
            for (std::size_t i = 0; i < d.c.size(); ++i) r.c[shift + i] -= qc * d.c[i];
            r.trim();
        }
        if (!r.is_zero()) throw std::domain_error("UniPoly::quo: inexact division");
        q.trim();
        return q;
    }

    std::string str(const std::string& var = "c") const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t j = c.size(); j-- > 0;) {
            if (c[j] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (j == 0 || c[j] != 1) os << rational_str(c[j]);
            if (j >= 1) {
                if (c[j] != 1) os << "*";
                os << var;
                if (j >= 2) os << "^" << j;
            }
        }
        return os.str();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        UniPoly x = a, y = b;
        x.trim();
        y.trim();
        return x.c == y.c;
    }
};

inline UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// h / gcd(h, h'): same roots, all simple. Its degree is the number of
// distinct roots of h over the algebraic closure.
inline UniPoly squarefree_part(const UniPoly& h) {
    UniPoly g = unipoly_gcd(h, h.derivative());
    if (g.is_zero() || g.degree() == 0) {
        UniPoly r = h;
        r.trim();
        return r.monic();
    }
    return h.quo(g).monic();
}

// Monomial fibration (x, y, t) -> x^alpha * y^beta * t^gamma on a surface
// t^ell(x^p + y^q) = 1. Exactly one of alpha, beta is nonzero; the nonzero
// one must be 1 or the matching Fermat exponent.
struct FibrationSpec {
    i64 alpha = 0;
    i64 beta = 0;
    i64 gamma = 0;

    bool operator==(const FibrationSpec&) const = default;

    std::string str() const {
        std::ostringstream os;
        if (alpha != 0) { os << "x"; if (alpha != 1) os << "^" << alpha; }
        if (beta != 0) { os << "y"; if (beta != 1) os << "^" << beta; }
        if (gamma != 0) { os << "t"; if (gamma != 1) os << "^" << gamma; }
        return os.str();
    }
};

struct MultipleFiber {
    UniPoly location;          // roots locate the fibers; kept symbolic
    i64 distinctLocationCount; // degree of the squarefree part of location
    i64 multiplicity;          // >= 2
};

struct FiberReport {
    i64 p = 0, q = 0, ell = 0;
    FibrationSpec spec;
    std::vector<MultipleFiber> multipleFibers;

    // Flattened multiset of multiplicities, sorted ascending: each fiber
    // class contributes its multiplicity once per distinct location.
    std::vector<i64> multiset() const {
        std::vector<i64> out;
        for (const auto& f : multipleFibers)
            for (i64 i = 0; i < f.distinctLocationCount; ++i) out.push_back(f.multiplicity);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Degenerate (multiple) fibers of the fibration given by spec over the
// base coordinate c. Eliminate the solved block x^alpha = c * t^-gamma
// (resp. y^beta): the surface equation becomes
//   y^q = (1 - c^{p/alpha}) * t^{-ell}   provided ell*alpha == gamma*p
// so the fiber over c is a q-fold cover degenerating at the roots of
// h(c) = 1 - c^{p/alpha}, plus an alpha-fold degeneration at c = 0 when
// alpha = p (the solved block itself collapses there). Symmetrically for
// the y-side. Any other shape returns nullopt ("unsupported").
inline std::optional<FiberReport> degenerate_fibers(i64 p, i64 q, i64 ell,
                                                    const FibrationSpec& spec) {
    if (p < 1 || q < 1 || ell < 1 || gcd64(p, q) != 1) return std::nullopt;
    const bool x_side = spec.alpha != 0;
    if (x_side == (spec.beta != 0)) return std::nullopt; // exactly one block
    const i64 solved = x_side ? spec.alpha : spec.beta;
    const i64 solved_total = x_side ? p : q; // exponent of the solved variable in f
    const i64 other_total = x_side ? q : p;  // exponent of the remaining variable
    if (solved != 1 && solved != solved_total) return std::nullopt;
    if (spec.gamma < 0) return std::nullopt;
    // Residual form (other)^e = h(c) * t^-k demands matching t-exponents.
    if (ell * solved != spec.gamma * solved_total) return std::nullopt;

    const i64 power = solved_total / solved; // exponent of c in h
    UniPoly h = UniPoly::one_minus_power(power);
    UniPoly sf = squarefree_part(h);

    FiberReport report{p, q, ell, spec, {}};
    if (other_total >= 2)
        report.multipleFibers.push_back({sf, sf.degree(), other_total});
    if (solved == solved_total && solved >= 2)
        report.multipleFibers.push_back({UniPoly::monomial_c(), 1, solved});
    return report;
}

enum class MultisetComparison { equal, distinct };

inline MultisetComparison compare_fiber_multisets(const FiberReport& r1, const FiberReport& r2) {
    return r1.multiset() == r2.multiset() ? MultisetComparison::equal
                                          : MultisetComparison::distinct;
}

} // namespace laurent
