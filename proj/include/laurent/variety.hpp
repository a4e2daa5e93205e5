#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent/actions.hpp"
#include "laurent/arith.hpp"
#include "laurent/polynomial.hpp"

namespace laurent {

// Catalog family a hypersurface belongs to; drives exact rational point
// sampling for the evaluation oracle.
struct FamilyTag {
    enum class Kind { fermat, danielewski, generic };
    Kind kind = Kind::generic;
    i64 p = 0, q = 0; // fermat: f = x^p + y^q
    i64 n = 0, m = 0; // danielewski: f = x_1^2...x_n^2 z - y^m; m is also the weight

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Hypersurface t^ell * f - 1 = 0 inside ambient space times a torus, where
// f is semi-invariant of weight m for the given action. The signature
// holds the non-invertible ambient variables first, then the distinguished
// torus variable t, then any cylinder variables.
struct Hypersurface {
    RingSignature sig;
    LaurentPolynomial f;        // over sig; involves only non-invertible variables
    LaurentPolynomial defining; // t^ell * f - 1 over sig
    TorusAction action;
    i64 m = 0;
    i64 ell = 1;
    FamilyTag family;
    bool irreducible_f = false;
    std::string torus_var;
    std::vector<std::string> cylinder_vars;

    friend bool operator==(const Hypersurface&, const Hypersurface&) = default;

    // Re-check the structural invariant from stored data.
    bool invariant_holds() const {
        if (ell < 1 || m == 0) return false;
        auto w = semi_invariant_weight(f, action);
        if (!w || *w != m) return false;
        auto t = LaurentPolynomial::monomial(sig, 1, torus_var);
        return defining == t.pow(ell) * f - LaurentPolynomial::constant(sig, 1);
    }
};

inline Hypersurface make_hypersurface(const RingSignature& sig, const LaurentPolynomial& f,
                                      const TorusAction& action, i64 ell,
                                      const std::string& torus_var,
                                      FamilyTag family = {}, bool irreducible = false) {
    if (ell < 1) throw std::invalid_argument("make_hypersurface: ell must be >= 1");
    auto m = semi_invariant_weight(f, action);
    if (!m) throw std::invalid_argument("make_hypersurface: f is not semi-invariant");
    if (*m == 0) throw std::invalid_argument("make_hypersurface: weight m must be nonzero");
    if (!sig.vars[sig.index_of(torus_var)].invertible)
        throw std::invalid_argument("make_hypersurface: torus variable must be invertible");
    auto t = LaurentPolynomial::monomial(sig, 1, torus_var);
    Hypersurface h{sig,
                   f,
                   t.pow(ell) * f - LaurentPolynomial::constant(sig, 1),
                   action,
                   *m,
                   ell,
                   family,
                   irreducible,
                   torus_var,
                   {}};
    return h;
}

// Product with punctured lines: same defining polynomial over the enlarged
// signature with fresh invertible variables.
inline Hypersurface cylinder(const Hypersurface& v, const std::vector<std::string>& fresh) {
    RingSignature sig = v.sig;
    for (const auto& name : fresh) {
        if (sig.has(name))
            throw std::invalid_argument("cylinder: variable name '" + name + "' already in use");
        sig = RingSignature([&] {
            auto vars = sig.vars;
            vars.push_back({name, true});
            return vars;
        }());
    }
    Hypersurface out = v;
    out.sig = sig;
    out.f = v.f.lifted(sig);
    out.defining = v.defining.lifted(sig);
    out.cylinder_vars.insert(out.cylinder_vars.end(), fresh.begin(), fresh.end());
    return out;
}

// Same hypersurface with every variable renamed (used to make product
// factors disjoint).
inline Hypersurface renamed_hypersurface(const Hypersurface& h,
                                         const std::vector<std::string>& new_names) {
    if (new_names.size() != h.sig.arity())
        throw std::invalid_argument("renamed_hypersurface: one name per variable");
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < new_names.size(); ++i)
        vars.push_back({new_names[i], h.sig.vars[i].invertible});
    RingSignature sig(std::move(vars));
    Hypersurface out = h;
    out.sig = sig;
    out.f = h.f.renamed(sig);
    out.defining = h.defining.renamed(sig);
    out.torus_var = new_names[h.sig.index_of(h.torus_var)];
    out.cylinder_vars.clear();
    for (const auto& c : h.cylinder_vars) out.cylinder_vars.push_back(new_names[h.sig.index_of(c)]);
    return out;
}

// A closed subvariety of an ambient torus-graded affine space cut out by a
// finite system of defining polynomials: a hypersurface, a cylinder over
// one, or a product of such. Factors keep their own signatures; offsets
// locate each factor's variables inside the combined signature.
struct Variety {
    RingSignature sig;
    std::vector<LaurentPolynomial> equations;
    std::vector<Hypersurface> factors;
    std::vector<std::size_t> factor_offsets;

    friend bool operator==(const Variety& a, const Variety& b) {
        return a.sig == b.sig && a.equations == b.equations;
    }
};

inline LaurentPolynomial embed_with_offset(const LaurentPolynomial& p, const RingSignature& big,
                                           std::size_t offset) {
    LaurentPolynomial r = LaurentPolynomial::zero(big);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector ne(big.arity(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[offset + i] = e[i];
        r = r + LaurentPolynomial::term(big, c, ne);
    }
    return r;
}

inline Variety as_variety(const Hypersurface& h) {
    return Variety{h.sig, {h.defining}, {h}, {0}};
}

// Product of hypersurfaces with disjoint variable names; the defining
// system is the union of the factor equations.
inline Variety product_variety(const std::vector<Hypersurface>& factors) {
    std::vector<Variable> vars;
    std::vector<std::size_t> offsets;
    for (const auto& f : factors) {
        offsets.push_back(vars.size());
        vars.insert(vars.end(), f.sig.vars.begin(), f.sig.vars.end());
    }
    RingSignature sig(std::move(vars)); // throws on any name collision
    std::vector<LaurentPolynomial> eqs;
    for (std::size_t k = 0; k < factors.size(); ++k)
        eqs.push_back(embed_with_offset(factors[k].defining, sig, offsets[k]));
    return Variety{sig, eqs, factors, offsets};
}

// Deterministic exact rational points on catalog varieties.
//
// Danielewski factors solve the defining equation for z directly. Fermat
// factors use the torus orbit through a rational point of f = 1: with
// t = v^m and (x, y) = mu(v^{-ell}, base), t^ell f = v^{m ell} v^{-ell m} = 1
// for every rational v != 0 and every ell. Cylinder coordinates are free
// nonzero rationals.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    Rational random_rational(bool nonzero, int max_abs = 9) {
        std::uniform_int_distribution<int> num(-max_abs, max_abs);
        std::uniform_int_distribution<int> den(1, max_abs);
        int n = num(rng_);
        while (nonzero && n == 0) n = num(rng_);
        Rational r(n, den(rng_));
        r.canonicalize();
        return r;
    }

    // A point satisfying every defining equation, or nullopt when some
    // factor's family is unknown to the sampler.
    std::optional<std::vector<Rational>> sample(const Variety& v) {
        std::vector<Rational> point(v.sig.arity(), Rational(0));
        for (std::size_t k = 0; k < v.factors.size(); ++k)
            if (!fill_factor(v.factors[k], v.factor_offsets[k], point)) return std::nullopt;
        return point;
    }

private:
    bool fill_factor(const Hypersurface& h, std::size_t off, std::vector<Rational>& point) {
        for (const auto& c : h.cylinder_vars)
            point[off + h.sig.index_of(c)] = random_rational(true, 4);
        const std::size_t t_idx = off + h.sig.index_of(h.torus_var);
        switch (h.family.kind) {
        case FamilyTag::Kind::fermat: {
            Rational v = random_rational(true, 4);
            bool base_x = std::uniform_int_distribution<int>(0, 1)(rng_) == 1;
            // sig order: x, y, t, ...
            Rational bx = base_x ? 1 : 0, by = base_x ? 0 : 1;
            point[off + 0] = rational_pow(v, -h.ell * h.family.q) * bx;
            point[off + 1] = rational_pow(v, -h.ell * h.family.p) * by;
            point[t_idx] = rational_pow(v, h.m);
            return true;
        }
        case FamilyTag::Kind::danielewski: {
            // sig order: x_1..x_n, y, z, t, ...
            Rational prod_sq(1);
            for (i64 i = 0; i < h.family.n; ++i) {
                Rational xi = random_rational(true, 4);
                point[off + static_cast<std::size_t>(i)] = xi;
                prod_sq *= xi * xi;
            }
            Rational y = random_rational(false, 4);
            Rational t = random_rational(true, 4);
            point[off + static_cast<std::size_t>(h.family.n)] = y;
            point[off + static_cast<std::size_t>(h.family.n) + 1] =
                (rational_pow(t, -h.ell) + rational_pow(y, h.family.m)) / prod_sq;
            point[t_idx] = t;
            return true;
        }
        case FamilyTag::Kind::generic:
            return false;
        }
        return false;
    }

    std::mt19937_64 rng_;
};

} // namespace laurent
