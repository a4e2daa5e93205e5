#pragma once

#include <map>
#include <string>
#include <vector>

#include "laurent/constructions.hpp"
#include "laurent/fibrations.hpp"

namespace laurent {

// One arithmetic check inside a certificate: a human-readable statement,
// the anchor of the result justifying its relevance, and whether it holds.
// Status "cited" marks assertions taken from the source results rather
// than computed here.
struct CertificateCheck {
    std::string description;
    std::string citation;
    std::string status; // "pass" | "fail" | "cited"
};

enum class CertVerdict { certified, not_certified, preconditions_violated, heuristic };

inline const char* verdict_name(CertVerdict v) {
    switch (v) {
    case CertVerdict::certified: return "certified-noniso";
    case CertVerdict::not_certified: return "not-certified";
    case CertVerdict::preconditions_violated: return "preconditions-violated";
    case CertVerdict::heuristic: return "heuristic";
    }
    return "?";
}

// A finite list of arithmetic checks which, justified by the cited
// results, implies two varieties are not isomorphic. Never claims more
// than its checks support: a failed precondition yields
// preconditions-violated, never a certification.
struct NonIsoCertificate {
    std::string family; // "fermat" | "danielewski" | "fiber-multiset"
    std::map<std::string, i64> parameters;
    std::map<std::string, std::string> annotations;
    std::vector<CertificateCheck> checks;
    CertVerdict verdict = CertVerdict::not_certified;

    bool certified() const { return verdict == CertVerdict::certified; }
};

namespace detail {

inline bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::string not_divides(i64 d, i64 x) {
    return std::to_string(d) + " ∤ " + std::to_string(x);
}

} // namespace detail

// Non-isomorphism of X_{x^p+y^q, ell} and X_{x^p+y^q, 1} (m = pq) via the
// two-stage divisibility obstruction: for each generic-fiber target
// j in {ell, -ell mod m}, either q does not divide j-1 (no q-th root of
// t^{-(j-1)}, so the branch loci cannot match) or p does not divide j-1
// (the p-fold covering data cannot match).
inline NonIsoCertificate certify_fermat_noniso(i64 p, i64 q, i64 ell) {
    NonIsoCertificate cert;
    cert.family = "fermat";
    const i64 m = p * q;
    cert.parameters = {{"p", p}, {"q", q}, {"ell", ell}, {"m", m}};
    cert.annotations["citation-chain"] = "Lemma 1.4; Prop. 1.5; Thm. 2.3 proof";

    auto violated = [&](const std::string& why) {
        cert.checks.push_back({why, "Thm. 2.3 hypotheses", "fail"});
        cert.verdict = CertVerdict::preconditions_violated;
        return cert;
    };
    if (!detail::is_prime(p)) return violated("p = " + std::to_string(p) + " is not prime");
    if (q < 3) return violated("q must be >= 3");
    if (gcd64(p, q) != 1) return violated("gcd(p, q) != 1");
    if (gcd64(ell, m) != 1) return violated("gcd(ell, m) != 1");
    if (ell < 2) return violated("ell must be >= 2");
    const i64 r = normalize_mod(ell, m);
    if (r == 1 || r == m - 1)
        return violated("ell is congruent to +-1 mod m: the varieties are isomorphic");

    auto [j1, j2] = generic_fiber_targets(ell, ell, m); // {ell, -ell mod m}
    bool all_pass = true;
    for (i64 j : {j1, j2}) {
        bool branch = (j - 1) % q != 0;
        cert.checks.push_back({detail::not_divides(q, j - 1),
                               "Thm. 2.3 proof (branch locus)",
                               branch ? "pass" : "fail"});
        if (!branch) {
            bool covering = (j - 1) % p != 0;
            cert.checks.push_back({detail::not_divides(p, j - 1),
                                   "Thm. 2.3 proof (covering data)",
                                   covering ? "pass" : "fail"});
            if (!covering) all_pass = false;
        }
    }
    cert.verdict = all_pass ? CertVerdict::certified : CertVerdict::not_certified;
    return cert;
}

// Non-isomorphism of the factorial hypersurfaces t^ell*f_{n,m} = 1 and
// t^ell'*f_{n,m} = 1: certified iff ell' is congruent to neither ell nor
// -ell mod m. Factoriality and smoothness are cited, not recomputed.
inline NonIsoCertificate certify_danielewski_noniso(i64 n, i64 m, i64 ell, i64 ellPrime) {
    NonIsoCertificate cert;
    cert.family = "danielewski";
    cert.parameters = {{"n", n}, {"m", m}, {"ell", ell}, {"ellPrime", ellPrime}};
    cert.annotations["citation-chain"] = "Lemma 3.2; Prop. 3.4; Thm. 3.3";

    auto violated = [&](const std::string& why) {
        cert.checks.push_back({why, "Thm. 3.3 hypotheses", "fail"});
        cert.verdict = CertVerdict::preconditions_violated;
        return cert;
    };
    if (n < 1) return violated("n must be >= 1");
    if (m < 2) return violated("m must be >= 2");
    if (ell < 1 || ellPrime < 1) return violated("ell and ell' must be >= 1");
    if (gcd64(ell, m) != 1) return violated("gcd(ell, m) != 1");
    if (gcd64(ellPrime, m) != 1) return violated("gcd(ell', m) != 1");

    cert.checks.push_back({"the hypersurfaces are smooth factorial with negative logarithmic "
                           "Kodaira dimension",
                           "Lemma 3.2", "cited"});
    bool minus = (ell - ellPrime) % m != 0;
    bool plus = (ell + ellPrime) % m != 0;
    cert.checks.push_back({detail::not_divides(m, ell - ellPrime), "Prop. 3.4", minus ? "pass" : "fail"});
    cert.checks.push_back({detail::not_divides(m, ell + ellPrime), "Prop. 3.4", plus ? "pass" : "fail"});
    cert.verdict = (minus && plus) ? CertVerdict::certified : CertVerdict::not_certified;
    return cert;
}

// Non-isomorphism of X_{x^p+y^q, ell1} x (A^1_*)^n and
// X_{x^p+y^q, ell2} x (A^1_*)^n from distinct degenerate-fiber multisets.
// The compatibility argument is established for (p, q) = (2, 3); for other
// coprime (p, q) a distinct multiset yields only a "heuristic" verdict.
// Valid for every n >= 0 simultaneously.
inline NonIsoCertificate certify_fiber_distinct(i64 p, i64 q, i64 ell1, const FibrationSpec& spec1,
                                                i64 ell2, const FibrationSpec& spec2,
                                                i64 torusFactors = 0) {
    NonIsoCertificate cert;
    cert.family = "fiber-multiset";
    cert.parameters = {{"p", p}, {"q", q}, {"ell1", ell1}, {"ell2", ell2},
                       {"torusFactors", torusFactors}};
    cert.annotations["spec1"] = spec1.str();
    cert.annotations["spec2"] = spec2.str();

    if (torusFactors < 0) {
        cert.checks.push_back({"torusFactors must be >= 0", "Lemma 2.1", "fail"});
        cert.verdict = CertVerdict::preconditions_violated;
        return cert;
    }
    auto r1 = degenerate_fibers(p, q, ell1, spec1);
    auto r2 = degenerate_fibers(p, q, ell2, spec2);
    if (!r1 || !r2) {
        cert.checks.push_back({"fibration spec unsupported for these parameters", "Lemma 2.1",
                               "fail"});
        cert.verdict = CertVerdict::preconditions_violated;
        return cert;
    }
    auto fmt = [](const std::vector<i64>& ms) {
        std::string s = "{";
        for (std::size_t i = 0; i < ms.size(); ++i)
            s += (i ? "," : "") + std::to_string(ms[i]);
        return s + "}";
    };
    bool distinct = compare_fiber_multisets(*r1, *r2) == MultisetComparison::distinct;
    cert.checks.push_back({"degenerate-fiber multisets " + fmt(r1->multiset()) + " vs " +
                               fmt(r2->multiset()) + (distinct ? " are distinct" : " are equal"),
                           "Lemma 2.1", distinct ? "pass" : "fail"});
    if (!distinct) {
        cert.verdict = CertVerdict::not_certified;
    } else if (p == 2 && q == 3) {
        cert.verdict = CertVerdict::certified;
    } else {
        cert.annotations["caveat"] =
            "fibration-compatibility argument established only for (p, q) = (2, 3)";
        cert.verdict = CertVerdict::heuristic;
    }
    return cert;
}

// Unit group of the coordinate ring of X_{f, ell}: free of rank 1 over the
// constants, generated by the torus variable, provided f is irreducible
// and gcd(ell, m) = 1. Outside those hypotheses the answer is open and the
// call refuses.
struct UnitsDescription {
    i64 rank;
    std::string generator;
};

inline UnitsDescription units_description(bool f_irreducible, i64 m, i64 ell,
                                          const std::string& torus_var = "t") {
    if (!f_irreducible)
        throw std::domain_error("units_description: outside Lemma 1.4 hypotheses "
                                "(f not flagged irreducible)");
    if (gcd64(ell, m) != 1)
        throw std::domain_error("units_description: outside Lemma 1.4 hypotheses "
                                "(gcd(ell, m) != 1; open per the Remark)");
    return {1, torus_var};
}

} // namespace laurent
