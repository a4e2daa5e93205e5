#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace laurent {

struct Variable {
    std::string name;
    bool invertible = false;

    friend bool operator==(const Variable&, const Variable&) = default;
};

// Ambient ring signature: an ordered list of variables, each either a
// polynomial variable (exponents >= 0) or an invertible one (any exponent).
// Houses rings such as C[x,y][t^{+-1}] and C[t^{+-1},u^{+-1}].
struct RingSignature {
    std::vector<Variable> vars;

    RingSignature() = default;
    explicit RingSignature(std::vector<Variable> v) : vars(std::move(v)) {
        std::set<std::string> seen;
        for (const auto& var : vars)
            if (!seen.insert(var.name).second)
                throw std::invalid_argument("RingSignature: duplicate variable name '" + var.name + "'");
    }

    std::size_t arity() const { return vars.size(); }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name) return i;
        throw std::invalid_argument("RingSignature: no variable named '" + name + "'");
    }

    bool has(const std::string& name) const {
        return std::any_of(vars.begin(), vars.end(),
                           [&](const Variable& v) { return v.name == name; });
    }

    std::vector<std::size_t> noninvertible_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (!vars[i].invertible) out.push_back(i);
        return out;
    }

    std::vector<std::size_t> invertible_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].invertible) out.push_back(i);
        return out;
    }

    friend bool operator==(const RingSignature&, const RingSignature&) = default;
};

// One integer exponent per variable of the signature.
using ExponentVector = std::vector<std::int64_t>;

inline std::int64_t total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

// Graded lexicographic order, largest first. Used as the canonical term
// order for display and as the division order in exact_divide.
struct GrlexGreater {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        std::int64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b; // lexicographic tie-break
    }
};

} // namespace laurent
