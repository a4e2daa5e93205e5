#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laurent/certificates.hpp"
#include "laurent/constructions.hpp"

namespace laurent {

// Parameters of a catalog hypersurface t^ell * f - 1:
//   fermat(p, q, ell):       f = x^p + y^q, weights (q, p), m = p*q
//   danielewski(n, m, ell):  f = x_1^2...x_n^2 z - y^m,
//                            weights (1,...,1 [n+1], m-2n)
struct FamilySpec {
    enum class Kind { fermat, danielewski };
    Kind kind;
    i64 p = 0, q = 0; // fermat
    i64 n = 0, m = 0; // danielewski
    i64 ell = 1;

    static FamilySpec fermat(i64 p, i64 q, i64 ell) {
        return {Kind::fermat, p, q, 0, 0, ell};
    }
    static FamilySpec danielewski(i64 n, i64 m, i64 ell) {
        return {Kind::danielewski, 0, 0, n, m, ell};
    }

    i64 weight_m() const { return kind == Kind::fermat ? p * q : m; }

    // gcd(ell, m) = 1 is the factoriality hypothesis for the danielewski
    // family and the unit-group hypothesis for both.
    bool coprime() const { return gcd64(ell, weight_m()) == 1; }

    std::string name() const {
        if (kind == Kind::fermat)
            return "fermat(" + std::to_string(p) + "," + std::to_string(q) + "," +
                   std::to_string(ell) + ")";
        return "danielewski(" + std::to_string(n) + "," + std::to_string(m) + "," +
               std::to_string(ell) + ")";
    }
};

inline Hypersurface make_family(const FamilySpec& spec) {
    if (spec.ell < 1) throw std::invalid_argument("make_family: ell must be >= 1");
    if (spec.kind == FamilySpec::Kind::fermat) {
        if (spec.p < 1 || spec.q < 1)
            throw std::invalid_argument("make_family: fermat needs p, q >= 1");
        RingSignature sig({{"x", false}, {"y", false}});
        auto x = LaurentPolynomial::monomial(sig, 1, "x");
        auto y = LaurentPolynomial::monomial(sig, 1, "y");
        LaurentPolynomial f = x.pow(spec.p) + y.pow(spec.q);
        TorusAction action({spec.q, spec.p});
        FamilyTag tag{FamilyTag::Kind::fermat, spec.p, spec.q, 0, 0};
        bool irreducible = gcd64(spec.p, spec.q) == 1;
        return family_hypersurface(f, action, spec.ell, tag, irreducible);
    }
    if (spec.n < 1 || spec.m < 2)
        throw std::invalid_argument("make_family: danielewski needs n >= 1, m >= 2");
    std::vector<Variable> vars;
    for (i64 i = 1; i <= spec.n; ++i) vars.push_back({"x" + std::to_string(i), false});
    vars.push_back({"y", false});
    vars.push_back({"z", false});
    RingSignature sig(std::move(vars));
    LaurentPolynomial prod = LaurentPolynomial::monomial(sig, 1, "z");
    for (i64 i = 1; i <= spec.n; ++i)
        prod = prod * LaurentPolynomial::monomial(sig, 1, "x" + std::to_string(i)).pow(2);
    LaurentPolynomial f = prod - LaurentPolynomial::monomial(sig, 1, "y").pow(spec.m);
    std::vector<i64> w(static_cast<std::size_t>(spec.n) + 1, 1); // x_1..x_n, y
    w.push_back(spec.m - 2 * spec.n);                            // z
    TorusAction action(std::move(w));
    FamilyTag tag{FamilyTag::Kind::danielewski, 0, 0, spec.n, spec.m};
    return family_hypersurface(f, action, spec.ell, tag, /*irreducible=*/true);
}

// Genus of the smooth projective model of x^p + y^q = 1 for coprime p, q.
inline i64 genus(i64 p, i64 q) {
    if (p < 1 || q < 1) throw std::domain_error("genus: p, q must be >= 1");
    if (gcd64(p, q) != 1) throw std::domain_error("genus: p, q must be coprime");
    return (p - 1) * (q - 1) / 2;
}

// The log-canonical monomial fibration on t^ell(x^2 + y^3) = 1 for the
// three residues where one is established: x^2 t for ell = 1, x t for
// ell = 2, y t for ell = 3. Other parameters have no supported canonical
// choice here.
inline std::optional<FibrationSpec> canonical_fibration_spec(i64 p, i64 q, i64 ell) {
    if (p != 2 || q != 3) return std::nullopt;
    if (ell == 1) return FibrationSpec{2, 0, 1};
    if (ell == 2) return FibrationSpec{1, 0, 1};
    if (ell == 3) return FibrationSpec{0, 1, 1};
    return std::nullopt;
}

// One grid cell of a scan: cylinder-isomorphism status for the pair plus
// the strongest applicable non-isomorphism certificate for the varieties
// themselves. A counterexample row has both.
struct ScanRow {
    i64 ell, ellPrime;
    std::string cylinder_status; // "verified" | "unsupported"
    std::optional<IsoRecipe> cylinder;
    std::optional<NonIsoCertificate> certificate;
    bool counterexample = false;
};

struct ScanResult {
    FamilySpec base; // ell field unused
    i64 max = 0;
    std::vector<ScanRow> rows;

    std::vector<std::pair<i64, i64>> counterexamples() const {
        std::vector<std::pair<i64, i64>> out;
        for (const auto& r : rows)
            if (r.counterexample) out.emplace_back(r.ell, r.ellPrime);
        return out;
    }
};

// Certificate selection for a scan pair. Fermat pairs involving ell = 1
// use the divisibility criterion; (2, 3) pairs with two supported
// canonical fibrations use the fiber-multiset criterion; anything else is
// honestly not-certified.
inline std::optional<NonIsoCertificate> scan_certificate(const FamilySpec& base, i64 ell,
                                                         i64 ellPrime) {
    if (base.kind == FamilySpec::Kind::danielewski)
        return certify_danielewski_noniso(base.n, base.m, ell, ellPrime);
    if (ell == 1) return certify_fermat_noniso(base.p, base.q, ellPrime);
    if (ellPrime == 1) return certify_fermat_noniso(base.p, base.q, ell);
    auto s1 = canonical_fibration_spec(base.p, base.q, ell);
    auto s2 = canonical_fibration_spec(base.p, base.q, ellPrime);
    if (s1 && s2) return certify_fiber_distinct(base.p, base.q, ell, *s1, ellPrime, *s2);
    return std::nullopt;
}

inline ScanResult scan_family(const FamilySpec& base, i64 max, std::size_t oracle_points = 25,
                              std::uint64_t seed = 20240517u) {
    if (max < 1) throw std::domain_error("scan_family: max must be >= 1");
    ScanResult result{base, max, {}};
    const i64 m = base.weight_m();
    for (i64 ell = 1; ell <= max; ++ell)
        for (i64 ellPrime = ell + 1; ellPrime <= max; ++ellPrime) {
            ScanRow row{ell, ellPrime, "unsupported", std::nullopt, std::nullopt, false};
            if (gcd64(ell, m) == gcd64(ellPrime, m)) {
                FamilySpec tgt = base;
                tgt.ell = ell;
                row.cylinder = build_cylinder_iso(make_family(tgt), ell, ellPrime, "u",
                                                  oracle_points, seed);
                row.cylinder_status = "verified";
            }
            row.certificate = scan_certificate(base, ell, ellPrime);
            row.counterexample = row.cylinder_status == "verified" && row.certificate &&
                                 row.certificate->certified();
            result.rows.push_back(std::move(row));
        }
    return result;
}

} // namespace laurent
