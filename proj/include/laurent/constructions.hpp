#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laurent/maps.hpp"

namespace laurent {

// Attach the distinguished torus variable to a polynomial given over the
// ambient (non-invertible) signature and form t^ell * f - 1.
inline Hypersurface family_hypersurface(const LaurentPolynomial& f_ambient, const TorusAction& w,
                                        i64 ell, FamilyTag tag = {}, bool irreducible = false,
                                        const std::string& torus_var = "t") {
    auto vars = f_ambient.signature().vars;
    vars.push_back({torus_var, true});
    RingSignature sig(std::move(vars));
    return make_hypersurface(sig, f_ambient.lifted(sig), w, ell, torus_var, tag, irreducible);
}

// An explicit isomorphism together with the data it was built from, the
// verification report, and the anchor of the result justifying it. The
// emitted map is verified at construction; a recipe never carries an
// unchecked map.
struct IsoRecipe {
    enum class Kind { congruent, cylinder, product, square };
    Kind kind;
    std::map<std::string, i64> parameters;
    MonomialRingMap map;
    std::string citation;
    VerificationReport report;

    static const char* kind_name(Kind k) {
        switch (k) {
        case Kind::congruent: return "congruent";
        case Kind::cylinder: return "cylinder";
        case Kind::product: return "product";
        case Kind::square: return "square";
        }
        return "?";
    }
};

namespace detail {

inline void enforce_verified(IsoRecipe& recipe, std::size_t oracle_points, std::uint64_t seed) {
    recipe.report = verify_map(recipe.map, oracle_points, seed);
    if (!recipe.report.verified())
        throw std::logic_error(std::string("IsoRecipe(") + IsoRecipe::kind_name(recipe.kind) +
                               "): emitted map failed verification");
}

} // namespace detail

// Isomorphism X_{f,ell} -> X_{f,ell'} for ell' congruent to +-ell mod m:
// (x, t) maps to (mu(t^k, x), t^{+-1}) with ell = +-ell' + k*m. Sign +
// preferred when both congruences hold.
inline IsoRecipe build_congruent_iso(const Hypersurface& src, i64 ellPrime,
                                     std::size_t oracle_points = 100,
                                     std::uint64_t seed = 20240517u) {
    const i64 ell = src.ell, m = src.m;
    if (ellPrime < 1) throw std::domain_error("build_congruent_iso: ell' must be >= 1");
    i64 sign, k;
    i64 mm = m < 0 ? -m : m;
    if ((ellPrime - ell) % mm == 0) {
        sign = +1;
        k = (ell - ellPrime) / m;
    } else if ((ellPrime + ell) % mm == 0) {
        sign = -1;
        k = (ell + ellPrime) / m;
    } else {
        throw std::domain_error(
            "build_congruent_iso: ell' is congruent to neither ell nor -ell mod m");
    }
    Hypersurface tgt = make_hypersurface(src.sig, src.f, src.action, ellPrime, src.torus_var,
                                         src.family, src.irreducible_f);
    for (const auto& c : src.cylinder_vars) tgt.cylinder_vars.push_back(c);

    const auto& sig = src.sig;
    const std::size_t t_idx = sig.index_of(src.torus_var);
    MonomialRingMap map{as_variety(src), as_variety(tgt), {}};
    std::size_t wi = 0;
    for (std::size_t j = 0; j < sig.arity(); ++j) {
        ExponentVector e(sig.arity(), 0);
        e[j] = 1;
        if (!sig.vars[j].invertible) {
            e[t_idx] += k * src.action.weights[wi++];
        } else if (j == t_idx) {
            e[t_idx] = sign;
        }
        map.images.push_back({Rational(1), e});
    }
    IsoRecipe recipe{IsoRecipe::Kind::congruent,
                     {{"ell", ell}, {"ellPrime", ellPrime}, {"m", m}, {"k", k}, {"sign", sign}},
                     std::move(map),
                     "Prop. 1.2(1)",
                     {}};
    detail::enforce_verified(recipe, oracle_points, seed);
    return recipe;
}

// Isomorphism of cylinders X_{f,ell'} x A^1_* -> X_{f,ell} x A^1_* for
// gcd(ell,m) = gcd(ell',m): x maps to mu(t^b u^{-ell/d}, x), the torus part
// is the SL2 automorphism sigma(t,u) = (t^a u^{m/d}, t^alpha u^beta).
inline IsoRecipe build_cylinder_iso(const Hypersurface& base, i64 ell, i64 ellPrime,
                                    const std::string& cyl_var = "u",
                                    std::size_t oracle_points = 100,
                                    std::uint64_t seed = 20240517u) {
    const i64 m = base.m;
    BezoutWitness w = bezout_with_unit_constraint(ell, ellPrime, m); // throws on gcd mismatch
    UnimodularMatrix um = unimodular_complete(w.a, m / w.d);

    Hypersurface hs_src = make_hypersurface(base.sig, base.f, base.action, ellPrime,
                                            base.torus_var, base.family, base.irreducible_f);
    Hypersurface hs_tgt = make_hypersurface(base.sig, base.f, base.action, ell, base.torus_var,
                                            base.family, base.irreducible_f);
    Variety src = as_variety(cylinder(hs_src, {cyl_var}));
    Variety tgt = as_variety(cylinder(hs_tgt, {cyl_var}));

    const auto& sig = src.sig;
    const std::size_t t_idx = sig.index_of(base.torus_var);
    const std::size_t u_idx = sig.index_of(cyl_var);
    MonomialRingMap map{src, tgt, {}};
    std::size_t wi = 0;
    for (std::size_t j = 0; j < sig.arity(); ++j) {
        ExponentVector e(sig.arity(), 0);
        if (!sig.vars[j].invertible) {
            e[j] = 1;
            e[t_idx] = w.b * base.action.weights[wi];
            e[u_idx] = -(ell / w.d) * base.action.weights[wi];
            ++wi;
        } else if (j == t_idx) {
            e[t_idx] = w.a;
            e[u_idx] = m / w.d;
        } else { // cylinder variable
            e[t_idx] = um.alpha;
            e[u_idx] = um.beta;
        }
        map.images.push_back({Rational(1), e});
    }
    IsoRecipe recipe{IsoRecipe::Kind::cylinder,
                     {{"ell", ell},
                      {"ellPrime", ellPrime},
                      {"m", m},
                      {"d", w.d},
                      {"a", w.a},
                      {"b", w.b},
                      {"alpha", um.alpha},
                      {"beta", um.beta}},
                     std::move(map),
                     "Prop. 1.2(2)",
                     {}};
    detail::enforce_verified(recipe, oracle_points, seed);
    return recipe;
}

// Disjoint copy of a hypersurface for use as the second factor of a
// product: ambient variables get a "_2" suffix, the torus variable becomes
// "s".
inline Hypersurface second_factor(const Hypersurface& h, const std::string& torus_name = "s") {
    std::vector<std::string> names;
    for (const auto& v : h.sig.vars)
        names.push_back(v.name == h.torus_var ? torus_name : v.name + "_2");
    return renamed_hypersurface(h, names);
}

// Block-diagonal map on a product of sources/targets.
inline MonomialRingMap product_map(const MonomialRingMap& m1, const MonomialRingMap& m2) {
    std::vector<Hypersurface> src_factors, tgt_factors;
    for (const auto& f : m1.source.factors) src_factors.push_back(f);
    for (const auto& f : m2.source.factors) src_factors.push_back(f);
    for (const auto& f : m1.target.factors) tgt_factors.push_back(f);
    for (const auto& f : m2.target.factors) tgt_factors.push_back(f);
    Variety src = product_variety(src_factors);
    Variety tgt = product_variety(tgt_factors);
    const std::size_t src_off = m1.source.sig.arity();
    MonomialRingMap out{src, tgt, {}};
    for (const auto& im : m1.images) {
        ExponentVector e(src.sig.arity(), 0);
        std::copy(im.exps.begin(), im.exps.end(), e.begin());
        out.images.push_back({im.coeff, e});
    }
    for (const auto& im : m2.images) {
        ExponentVector e(src.sig.arity(), 0);
        std::copy(im.exps.begin(), im.exps.end(), e.begin() + src_off);
        out.images.push_back({im.coeff, e});
    }
    return out;
}

// Isomorphism X_{f,a*ell} x X_{g,b*ell'} -> X_{f,ell} x X_{g,ell'} from a
// solution ab = 1 mod m^2: torus part sigma(t,s) = (t^a s^{cm}, t^m s^b)
// with det ab - cm^2 = 1, action parts mu(s^{-c ell}, .) and
// nu(t^{-ell'}, .) on the two ambient blocks.
inline IsoRecipe build_product_iso(const Hypersurface& hf, const Hypersurface& hg_raw,
                                   const SquarePair& pair, std::size_t oracle_points = 100,
                                   std::uint64_t seed = 20240517u) {
    if (!pair.holds()) throw std::domain_error("build_product_iso: invalid square pair");
    const i64 m = pair.m;
    if (hf.m != m || hg_raw.m != m)
        throw std::domain_error("build_product_iso: factor weights must equal the pair's m");
    const i64 ell = hf.ell, ellPrime = hg_raw.ell;
    Hypersurface hg = second_factor(hg_raw);

    auto scaled = [](const Hypersurface& h, i64 new_ell) {
        return make_hypersurface(h.sig, h.f, h.action, new_ell, h.torus_var, h.family,
                                 h.irreducible_f);
    };
    Variety tgt = product_variety({hf, hg});
    Variety src = product_variety({scaled(hf, pair.a * ell), scaled(hg, pair.b * ellPrime)});

    const auto& sig = src.sig;
    const std::size_t off2 = hf.sig.arity();
    const std::size_t t_idx = sig.index_of(hf.torus_var);
    const std::size_t s_idx = off2 + hg.sig.index_of(hg.torus_var);

    MonomialRingMap map{src, tgt, {}};
    // Block 1 then block 2, in target signature order.
    std::size_t wi = 0;
    for (std::size_t j = 0; j < hf.sig.arity(); ++j) {
        ExponentVector e(sig.arity(), 0);
        if (!hf.sig.vars[j].invertible) {
            e[j] = 1;
            e[s_idx] = -pair.c * ell * hf.action.weights[wi++];
        } else { // t
            e[t_idx] = pair.a;
            e[s_idx] = pair.c * m;
        }
        map.images.push_back({Rational(1), e});
    }
    wi = 0;
    for (std::size_t j = 0; j < hg.sig.arity(); ++j) {
        ExponentVector e(sig.arity(), 0);
        if (!hg.sig.vars[j].invertible) {
            e[off2 + j] = 1;
            e[t_idx] = -ellPrime * hg.action.weights[wi++];
        } else { // s
            e[t_idx] = m;
            e[s_idx] = pair.b;
        }
        map.images.push_back({Rational(1), e});
    }
    IsoRecipe recipe{IsoRecipe::Kind::product,
                     {{"ell", ell},
                      {"ellPrime", ellPrime},
                      {"m", m},
                      {"a", pair.a},
                      {"b", pair.b},
                      {"c", pair.c}},
                     std::move(map),
                     "Lemma 4.1",
                     {}};
    detail::enforce_verified(recipe, oracle_points, seed);
    return recipe;
}

// Verified isomorphism X_{f,a} x X_{f,a} -> X_{f,1} x X_{f,1}: the product
// isomorphism for (1, 1, a, b) composed with id x (congruent isomorphism
// X_{f,a} -> X_{f,b}), using a + b = 0 mod m. A single end-to-end map, not
// an existence claim.
inline IsoRecipe build_square_iso(const Hypersurface& h1, const SquarePair& pair,
                                  std::size_t oracle_points = 100,
                                  std::uint64_t seed = 20240517u) {
    if (!pair.holds()) throw std::domain_error("build_square_iso: invalid square pair");
    const i64 m = pair.m;
    if (h1.m != m) throw std::domain_error("build_square_iso: weight must equal the pair's m");
    if ((pair.a + pair.b) % m != 0)
        throw std::domain_error("build_square_iso: a + b != 0 mod m");
    Hypersurface base1 = make_hypersurface(h1.sig, h1.f, h1.action, 1, h1.torus_var, h1.family,
                                           h1.irreducible_f);

    IsoRecipe prod = build_product_iso(base1, base1, pair, oracle_points, seed);

    Hypersurface xa2 = second_factor(make_hypersurface(h1.sig, h1.f, h1.action, pair.a,
                                                       h1.torus_var, h1.family, h1.irreducible_f));
    IsoRecipe congruent = build_congruent_iso(xa2, pair.b, oracle_points, seed);

    Hypersurface xa1 = make_hypersurface(h1.sig, h1.f, h1.action, pair.a, h1.torus_var, h1.family,
                                         h1.irreducible_f);
    MonomialRingMap id_times_c = product_map(identity_map(as_variety(xa1)), congruent.map);
    MonomialRingMap composite = compose(prod.map, id_times_c);

    IsoRecipe recipe{IsoRecipe::Kind::square,
                     {{"m", m}, {"a", pair.a}, {"b", pair.b}, {"c", pair.c}},
                     std::move(composite),
                     "Cor. 4.2",
                     {}};
    detail::enforce_verified(recipe, oracle_points, seed);
    return recipe;
}

// The two generic-fiber comparison targets a non-isomorphism certificate
// for (ell, ell') must refute.
inline std::pair<i64, i64> generic_fiber_targets(i64 ell, i64 ellPrime, i64 m) {
    if (gcd64(ell, m) != 1 || gcd64(ellPrime, m) != 1)
        throw std::domain_error("generic_fiber_targets: ell and ell' must be coprime with m");
    return {ellPrime, normalize_mod(-ellPrime, m)};
}

} // namespace laurent
