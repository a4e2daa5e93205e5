#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "laurent/arith.hpp"
#include "laurent/polynomial.hpp"

namespace laurent {

// Diagonal Gm-action on the non-invertible ambient variables of a
// signature, one integer weight per such variable. Every action used here
// is monomial; general actions are out of scope.
struct TorusAction {
    std::vector<i64> weights;

    explicit TorusAction(std::vector<i64> w) : weights(std::move(w)) {
        bool nonzero = false;
        for (i64 x : weights) nonzero |= (x != 0);
        if (!nonzero) throw std::invalid_argument("TorusAction: weight vector must be nonzero");
    }

    friend bool operator==(const TorusAction&, const TorusAction&) = default;
};

// Weight m such that every term of f has weighted degree sum(w_i * e_i) ==
// m over the non-invertible variables, or nullopt. f must be nonzero and
// involve only non-invertible variables.
inline std::optional<i64> semi_invariant_weight(const LaurentPolynomial& f, const TorusAction& w) {
    if (f.is_zero()) throw std::invalid_argument("semi_invariant_weight: zero polynomial");
    const auto& sig = f.signature();
    auto ambient = sig.noninvertible_indices();
    if (w.weights.size() != ambient.size())
        throw std::invalid_argument("semi_invariant_weight: one weight per non-invertible variable");
    std::optional<i64> m;
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && sig.vars[i].invertible)
                throw std::invalid_argument(
                    "semi_invariant_weight: f involves invertible variable '" +
                    sig.vars[i].name + "'");
        i64 deg = 0;
        for (std::size_t k = 0; k < ambient.size(); ++k) deg += w.weights[k] * e[ambient[k]];
        if (!m) m = deg;
        else if (*m != deg) return std::nullopt;
    }
    return m;
}

// Substitution images of the action by a fixed unit monomial: variable x_i
// maps to lambda^{w_i} * x_i, every other variable maps to itself. This is
// the mu(lambda, .) block of the explicit isomorphisms.
inline std::vector<LaurentPolynomial> act_by_monomial(const TorusAction& w,
                                                      const LaurentPolynomial& lambda) {
    if (!lambda.is_unit())
        throw std::domain_error("act_by_monomial: lambda must be a unit monomial");
    const auto& sig = lambda.signature();
    auto ambient = sig.noninvertible_indices();
    if (w.weights.size() != ambient.size())
        throw std::invalid_argument("act_by_monomial: one weight per non-invertible variable");
    std::vector<LaurentPolynomial> images;
    images.reserve(sig.arity());
    std::size_t k = 0;
    for (std::size_t i = 0; i < sig.arity(); ++i) {
        ExponentVector self(sig.arity(), 0);
        self[i] = 1;
        LaurentPolynomial xi = LaurentPolynomial::term(sig, 1, self);
        if (!sig.vars[i].invertible) {
            images.push_back(lambda.pow(w.weights[k]) * xi);
            ++k;
        } else {
            images.push_back(xi);
        }
    }
    return images;
}

} // namespace laurent
