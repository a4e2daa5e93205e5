#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "laurent/variety.hpp"

namespace laurent {

// Small integer matrix determinant / adjugate, cofactor expansion (torus
// blocks here have at most 4 rows).
inline i64 int_det(const std::vector<std::vector<i64>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    i64 det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<i64>> minor(n - 1, std::vector<i64>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1][cc++] = m[r][c];
        }
        i64 term = m[0][j] * int_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

inline std::vector<std::vector<i64>> int_inverse_unimodular(const std::vector<std::vector<i64>>& m) {
    const std::size_t n = m.size();
    i64 d = int_det(m);
    if (d != 1 && d != -1) throw std::domain_error("int_inverse_unimodular: determinant not +-1");
    std::vector<std::vector<i64>> inv(n, std::vector<i64>(n));
    if (n == 0) return inv;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<i64>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<i64> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(row);
            }
            i64 cof = int_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof * d; // adj(m)/det == adj(m)*det for det = +-1
        }
    return inv;
}

// One generator image: a rational coefficient times a monomial over the
// source signature.
struct MonomialImage {
    Rational coeff;
    ExponentVector exps;

    LaurentPolynomial as_polynomial(const RingSignature& sig) const {
        return LaurentPolynomial::term(sig, coeff, exps);
    }

    friend bool operator==(const MonomialImage&, const MonomialImage&) = default;
};

// Morphism source -> target of varieties in triangular monomial form,
// stored as its ring-map data: one image per target generator, expressed
// over the source signature. Every explicit isomorphism handled here has
// this shape, which makes inverse synthesis exact.
struct MonomialRingMap {
    Variety source;
    Variety target;
    std::vector<MonomialImage> images; // aligned with target.sig.vars

    friend bool operator==(const MonomialRingMap& a, const MonomialRingMap& b) {
        return a.source == b.source && a.target == b.target && a.images == b.images;
    }
};

inline MonomialRingMap identity_map(const Variety& v) {
    MonomialRingMap m{v, v, {}};
    for (std::size_t i = 0; i < v.sig.arity(); ++i) {
        ExponentVector e(v.sig.arity(), 0);
        e[i] = 1;
        m.images.push_back({Rational(1), e});
    }
    return m;
}

// Triangular monomial form check. Returns an error description, or nullopt
// when the map is well formed. A failure here is "unsupported", never
// evidence against an isomorphism claim.
inline std::optional<std::string> structural_error(const MonomialRingMap& map) {
    const auto& src = map.source.sig;
    const auto& tgt = map.target.sig;
    if (map.images.size() != tgt.arity()) return "one image per target generator required";
    auto src_inv = src.invertible_indices();
    auto tgt_inv = tgt.invertible_indices();
    auto src_amb = src.noninvertible_indices();
    auto tgt_amb = tgt.noninvertible_indices();
    if (src_inv.size() != tgt_inv.size()) return "torus ranks differ";
    if (src_amb.size() != tgt_amb.size()) return "ambient dimensions differ";

    std::vector<bool> hit(src.arity(), false);
    for (std::size_t j = 0; j < tgt.arity(); ++j) {
        const auto& im = map.images[j];
        if (im.coeff == 0) return "zero coefficient in image of '" + tgt.vars[j].name + "'";
        if (im.exps.size() != src.arity()) return "image exponent arity mismatch";
        if (tgt.vars[j].invertible) {
            for (std::size_t i : src_amb)
                if (im.exps[i] != 0)
                    return "image of invertible '" + tgt.vars[j].name +
                           "' touches non-invertible variables";
        } else {
            std::size_t count = 0, which = 0;
            for (std::size_t i : src_amb)
                if (im.exps[i] != 0) {
                    ++count;
                    which = i;
                    if (im.exps[i] != 1)
                        return "non-invertible generator image not linear in '" +
                               src.vars[i].name + "'";
                }
            if (count != 1)
                return "image of '" + tgt.vars[j].name +
                       "' must be a unit times a single generator";
            if (hit[which]) return "generator '" + src.vars[which].name + "' hit twice";
            hit[which] = true;
        }
    }
    for (std::size_t i : src_amb)
        if (!hit[i]) return "generator '" + src.vars[i].name + "' not hit";

    // Torus exponent matrix: rows = source invertible vars, cols = target
    // invertible generators.
    std::vector<std::vector<i64>> a(src_inv.size(), std::vector<i64>(tgt_inv.size()));
    for (std::size_t cj = 0; cj < tgt_inv.size(); ++cj)
        for (std::size_t ri = 0; ri < src_inv.size(); ++ri)
            a[ri][cj] = map.images[tgt_inv[cj]].exps[src_inv[ri]];
    i64 d = int_det(a);
    if (d != 1 && d != -1) {
        std::ostringstream os;
        os << "torus exponent matrix not unimodular (det = " << d << ")";
        return os.str();
    }
    return std::nullopt;
}

// Pull a target-side polynomial back along the map.
inline LaurentPolynomial pullback(const MonomialRingMap& map, const LaurentPolynomial& p) {
    if (p.signature() != map.target.sig)
        throw std::invalid_argument("pullback: polynomial not in target signature");
    std::vector<LaurentPolynomial> images;
    images.reserve(map.images.size());
    for (const auto& im : map.images) images.push_back(im.as_polynomial(map.source.sig));
    return p.substitute(images, map.source.sig);
}

// Composite of outer . inner (inner: A -> B, outer: B -> C). Exponent
// matrices multiply; images stay single monomials.
inline MonomialRingMap compose(const MonomialRingMap& outer, const MonomialRingMap& inner) {
    if (!(inner.target == outer.source))
        throw std::invalid_argument("compose: inner target differs from outer source");
    MonomialRingMap out{inner.source, outer.target, {}};
    const std::size_t n = inner.source.sig.arity();
    for (const auto& oim : outer.images) {
        Rational c = oim.coeff;
        ExponentVector e(n, 0);
        for (std::size_t k = 0; k < oim.exps.size(); ++k) {
            if (oim.exps[k] == 0) continue;
            c *= rational_pow(inner.images[k].coeff, oim.exps[k]);
            for (std::size_t i = 0; i < n; ++i) e[i] += oim.exps[k] * inner.images[k].exps[i];
        }
        out.images.push_back({c, e});
    }
    return out;
}

// Exact inverse of a well-formed triangular monomial map: invert the
// unimodular torus block, solve the unit coefficients multiplicatively,
// invert the generator permutation.
inline MonomialRingMap inverse(const MonomialRingMap& map) {
    if (auto err = structural_error(map))
        throw std::domain_error("inverse: " + *err);
    const auto& src = map.source.sig;
    const auto& tgt = map.target.sig;
    auto src_inv = src.invertible_indices();
    auto tgt_inv = tgt.invertible_indices();
    auto src_amb = src.noninvertible_indices();

    std::vector<std::vector<i64>> a(src_inv.size(), std::vector<i64>(tgt_inv.size()));
    for (std::size_t cj = 0; cj < tgt_inv.size(); ++cj)
        for (std::size_t ri = 0; ri < src_inv.size(); ++ri)
            a[ri][cj] = map.images[tgt_inv[cj]].exps[src_inv[ri]];
    auto b = int_inverse_unimodular(a); // b[j][i]: target gen j row, source var i col

    MonomialRingMap inv{map.target, map.source, std::vector<MonomialImage>(src.arity())};

    // Invertible block: source var u_k maps to e_k * prod_j v_j^{B_{jk}}
    // with e_k = prod_j d_j^{-B_{jk}}.
    for (std::size_t k = 0; k < src_inv.size(); ++k) {
        ExponentVector e(tgt.arity(), 0);
        Rational coeff(1);
        for (std::size_t j = 0; j < tgt_inv.size(); ++j) {
            e[tgt_inv[j]] = b[j][k];
            coeff *= rational_pow(map.images[tgt_inv[j]].coeff, -b[j][k]);
        }
        inv.images[src_inv[k]] = {coeff, e};
    }

    // Non-invertible block: if target gen g maps to c * U * x, then x maps
    // back to c^{-1} * psi(U)^{-1} * g, with psi the torus block above.
    for (std::size_t j : tgt.noninvertible_indices()) {
        const auto& im = map.images[j];
        std::size_t x = 0;
        for (std::size_t i : src_amb)
            if (im.exps[i] != 0) x = i;
        Rational coeff = Rational(1) / im.coeff;
        ExponentVector e(tgt.arity(), 0);
        e[j] = 1;
        for (std::size_t ri = 0; ri < src_inv.size(); ++ri) {
            i64 pwr = im.exps[src_inv[ri]];
            if (pwr == 0) continue;
            const auto& ui = inv.images[src_inv[ri]]; // psi(u_ri)
            coeff *= rational_pow(ui.coeff, -pwr);
            for (std::size_t c2 = 0; c2 < e.size(); ++c2) e[c2] -= pwr * ui.exps[c2];
        }
        inv.images[x] = {coeff, e};
    }
    return inv;
}

inline bool is_identity(const MonomialRingMap& map) {
    if (!(map.source == map.target)) return false;
    for (std::size_t i = 0; i < map.images.size(); ++i) {
        if (map.images[i].coeff != 1) return false;
        for (std::size_t k = 0; k < map.images[i].exps.size(); ++k)
            if (map.images[i].exps[k] != (k == i ? 1 : 0)) return false;
    }
    return true;
}

struct VerificationCheck {
    std::string name;
    std::string status; // "pass", "fail", "skipped"
    std::string detail;
};

// Machine check that a map is an isomorphism onto: per-equation unit
// multiples (with a principal-ideal membership fallback), exact inverse
// composition, and a seeded rational point oracle.
struct VerificationReport {
    enum class Verdict { verified, refuted, unsupported };
    Verdict verdict = Verdict::unsupported;
    std::vector<VerificationCheck> checks;
    std::uint64_t seed = 0;
    std::size_t oracle_points = 0;

    bool verified() const { return verdict == Verdict::verified; }

    static const char* verdict_name(Verdict v) {
        switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::refuted: return "refuted";
        case Verdict::unsupported: return "unsupported";
        }
        return "?";
    }
};

namespace detail {

// Unit u with h == u * g, if any: the candidate is the ratio of leading
// terms; it must be a unit and match exactly.
inline std::optional<LaurentPolynomial> unit_multiple(const LaurentPolynomial& h,
                                                      const LaurentPolynomial& g) {
    if (h.is_zero() || g.is_zero()) return std::nullopt;
    auto [he, hc] = h.leading_term();
    auto [ge, gc] = g.leading_term();
    ExponentVector diff(he.size());
    const auto& sig = h.signature();
    for (std::size_t i = 0; i < he.size(); ++i) {
        diff[i] = he[i] - ge[i];
        if (diff[i] != 0 && !sig.vars[i].invertible) return std::nullopt;
    }
    LaurentPolynomial u = LaurentPolynomial::term(sig, hc / gc, diff);
    if (h == u * g) return u;
    return std::nullopt;
}

} // namespace detail

inline VerificationReport verify_map(const MonomialRingMap& map, std::size_t oracle_points = 100,
                                     std::uint64_t seed = 20240517u) {
    VerificationReport rep;
    rep.seed = seed;
    rep.oracle_points = oracle_points;

    if (auto err = structural_error(map)) {
        rep.verdict = VerificationReport::Verdict::unsupported;
        rep.checks.push_back({"structure", "fail", *err});
        return rep;
    }
    rep.checks.push_back({"structure", "pass", "triangular monomial form, unimodular torus block"});

    bool all_pass = true;

    // Each target equation must pull back to a unit multiple of a distinct
    // source equation, and every source equation must be matched.
    std::vector<bool> matched(map.source.equations.size(), false);
    for (std::size_t te = 0; te < map.target.equations.size(); ++te) {
        LaurentPolynomial h = pullback(map, map.target.equations[te]);
        bool ok = false;
        std::string detail;
        for (std::size_t se = 0; se < map.source.equations.size(); ++se) {
            if (matched[se]) continue;
            if (auto u = detail::unit_multiple(h, map.source.equations[se])) {
                matched[se] = true;
                ok = true;
                detail = "unit multiple, u = " + u->str();
                break;
            }
        }
        if (!ok) {
            // Fallback: principal-ideal membership of the pullback.
            for (std::size_t se = 0; se < map.source.equations.size(); ++se) {
                if (matched[se]) continue;
                if (h.exact_divide(map.source.equations[se])) {
                    matched[se] = true;
                    ok = true;
                    detail = "membership fallback: pullback lies in the source ideal";
                    break;
                }
            }
        }
        std::ostringstream name;
        name << "equation[" << te << "]";
        rep.checks.push_back({name.str(), ok ? "pass" : "fail",
                              ok ? detail : "pullback is not a unit multiple of any source equation "
                                            "and membership fails"});
        all_pass &= ok;
    }
    if (!std::all_of(matched.begin(), matched.end(), [](bool b) { return b; })) {
        rep.checks.push_back({"equations-onto", "fail", "some source equation left unmatched"});
        all_pass = false;
    }

    // Inverse synthesis and both compositions.
    try {
        MonomialRingMap inv = inverse(map);
        bool left = is_identity(compose(inv, map));   // source -> source
        bool right = is_identity(compose(map, inv));  // target -> target
        rep.checks.push_back({"inverse-composition", left && right ? "pass" : "fail",
                              left && right ? "both composites are the identity map"
                                            : "composition with synthesized inverse is not the identity"});
        all_pass &= left && right;
    } catch (const std::exception& e) {
        rep.checks.push_back({"inverse-composition", "fail", e.what()});
        all_pass = false;
    }

    // Oracle: seeded rational points on the source mapped through the map
    // must satisfy the target equations exactly.
    {
        PointSampler sampler(seed);
        std::size_t tested = 0;
        bool ok = true;
        bool supported = true;
        std::string detail;
        for (std::size_t k = 0; k < oracle_points && ok; ++k) {
            auto p = sampler.sample(map.source);
            if (!p) { supported = false; break; }
            // Consistency of the sampler itself.
            for (const auto& eq : map.source.equations)
                if (eq.evaluate(*p) != 0)
                    throw std::logic_error("verify_map: sampler produced an off-variety point");
            std::vector<Rational> q(map.target.sig.arity());
            for (std::size_t j = 0; j < q.size(); ++j) {
                const auto& im = map.images[j];
                Rational val = im.coeff;
                for (std::size_t i = 0; i < im.exps.size(); ++i)
                    if (im.exps[i] != 0) val *= rational_pow((*p)[i], im.exps[i]);
                q[j] = val;
            }
            for (const auto& eq : map.target.equations)
                if (eq.evaluate(q) != 0) {
                    ok = false;
                    detail = "mapped point violates a target equation";
                }
            ++tested;
        }
        if (!supported && tested == 0) {
            rep.checks.push_back({"oracle", "skipped", "no exact point sampler for this family"});
        } else {
            std::ostringstream os;
            os << tested << " seeded rational points mapped onto the target variety";
            rep.checks.push_back({"oracle", ok ? "pass" : "fail", ok ? os.str() : detail});
            all_pass &= ok;
        }
    }

    rep.verdict = all_pass ? VerificationReport::Verdict::verified
                           : VerificationReport::Verdict::refuted;
    return rep;
}

} // namespace laurent
