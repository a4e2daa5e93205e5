#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace laurent {

using i64 = std::int64_t;

struct XgcdResult {
    i64 g; // gcd, always > 0
    i64 s;
    i64 t; // s*u + t*v == g
};

// Extended Euclid. (u,v) != (0,0).
inline XgcdResult xgcd(i64 u, i64 v) {
    if (u == 0 && v == 0) throw std::domain_error("xgcd(0,0)");
    i64 old_r = u, r = v;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

// Representative of x mod m lying in {1,...,m}. Used to pick the second
// generic-fiber comparison target ell'' >= 1.
inline i64 normalize_mod(i64 x, i64 m) {
    if (m < 1) throw std::domain_error("normalize_mod: modulus must be >= 1");
    i64 r = x % m;
    if (r < 0) r += m;
    return r == 0 ? m : r;
}

// Witness for ell' = a*ell + b*m with gcd(a, m/d) = 1, d = gcd(ell,m) =
// gcd(ell',m). The coprimality of a with m/d is automatic (a is a unit mod
// m/d for every Bezout solution); the shift loop below only normalizes a
// for deterministic output.
struct BezoutWitness {
    i64 a;
    i64 b;
    i64 ell;
    i64 ellPrime;
    i64 m;
    i64 d;

    bool holds() const {
        return ellPrime == a * ell + b * m && d == gcd64(ell, m) && d == gcd64(ellPrime, m) &&
               gcd64(a, m / d) == 1;
    }
};

inline BezoutWitness bezout_with_unit_constraint(i64 ell, i64 ellPrime, i64 m) {
    if (ell == 0 || ellPrime == 0 || m == 0)
        throw std::domain_error("bezout_with_unit_constraint: arguments must be nonzero");
    i64 d = gcd64(ell, m);
    if (d != gcd64(ellPrime, m))
        throw std::domain_error(
            "bezout_with_unit_constraint: gcd(ell,m) != gcd(ell',m); "
            "cylinders not provably isomorphic by this construction");
    auto [g, s, t] = xgcd(ell, m); // g == d
    i64 a = s * (ellPrime / d);
    i64 b = t * (ellPrime / d);
    i64 step = m / d;
    // Normalize a into {0,...,m/d-1}, adjusting b to keep the identity.
    if (step > 1) {
        i64 k = a >= 0 ? a / step : -((-a + step - 1) / step);
        a -= k * step;
        b += k * (ell / d);
    }
    while (gcd64(a, step) != 1) { // provably immediate; kept for safety
        a += step;
        b -= ell / d;
    }
    BezoutWitness w{a, b, ell, ellPrime, m, d};
    if (!w.holds()) throw std::logic_error("bezout_with_unit_constraint: witness invariant failed");
    return w;
}

// Rows (a, n) and (alpha, beta) with a*beta - n*alpha = 1.
struct UnimodularMatrix {
    i64 a;
    i64 n;
    i64 alpha;
    i64 beta;

    i64 det() const { return a * beta - n * alpha; }
};

// Complete coprime (a, n) to an SL2(Z) matrix. Deterministic choice:
// minimal |alpha| (tie: alpha >= 0), then minimal |beta| (tie: beta >= 0)
// when a == 0 leaves beta free.
inline UnimodularMatrix unimodular_complete(i64 a, i64 n) {
    if (gcd64(a, n) != 1) throw std::domain_error("unimodular_complete: gcd(a,n) != 1");
    // Solve a*beta - n*alpha = 1.
    auto [g, s, t] = xgcd(a, n); // s*a + t*n = 1
    i64 beta0 = s, alpha0 = -t;
    // General solution: alpha = alpha0 + k*a, beta = beta0 + k*n.
    if (a != 0) {
        i64 k = -alpha0 / a; // nearest shift toward 0
        i64 best_alpha = alpha0 + k * a, best_beta = beta0 + k * n;
        for (i64 dk = -2; dk <= 2; ++dk) {
            i64 alpha = alpha0 + (k + dk) * a;
            i64 beta = beta0 + (k + dk) * n;
            auto better = [](i64 na, i64 nb, i64 oa, i64 ob) {
                auto abs = [](i64 x) { return x < 0 ? -x : x; };
                if (abs(na) != abs(oa)) return abs(na) < abs(oa);
                if ((na >= 0) != (oa >= 0)) return na >= 0;
                if (abs(nb) != abs(ob)) return abs(nb) < abs(ob);
                return nb >= 0 && ob < 0;
            };
            if (better(alpha, beta, best_alpha, best_beta)) {
                best_alpha = alpha;
                best_beta = beta;
            }
        }
        alpha0 = best_alpha;
        beta0 = best_beta;
    } else {
        // a == 0 forces n = +-1 and alpha = -1/n; beta free, pick 0.
        alpha0 = -n; // n in {1,-1}: 0*beta - n*alpha = 1
        beta0 = 0;
    }
    UnimodularMatrix u{a, n, alpha0, beta0};
    if (u.det() != 1) throw std::logic_error("unimodular_complete: determinant != 1");
    return u;
}

// Solution of a+b = 0 (mod m), a*b = 1 (mod m^2); c completes the matrix
// (a, cm; m, b) to SL2(Z): a*b - c*m^2 = 1.
struct SquarePair {
    i64 a;
    i64 b;
    i64 c;
    i64 m;
    bool nontrivial; // a mod m not in {1, m-1}

    bool holds() const {
        return a >= 1 && b >= a && (a + b) % m == 0 && a * b == 1 + c * m * m;
    }
};

// Bounded exhaustive search; the source results exhibit solutions, not a
// closed-form method, so none is attempted. Empty result never claims
// nonexistence.
inline std::vector<SquarePair> square_pair_solve(i64 m, i64 bound) {
    if (m < 2) throw std::domain_error("square_pair_solve: m must be >= 2");
    if (bound < 1) throw std::domain_error("square_pair_solve: bound must be >= 1");
    std::vector<SquarePair> out;
    const i64 m2 = m * m;
    for (i64 a = 1; a <= bound; ++a)
        for (i64 b = a; b <= bound; ++b) {
            if ((a + b) % m != 0) continue;
            if ((a * b) % m2 != 1) continue;
            i64 c = (a * b - 1) / m2;
            i64 am = a % m;
            out.push_back({a, b, c, m, am != 1 && am != m - 1});
        }
    return out;
}

} // namespace laurent
