#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent/rational.hpp"
#include "laurent/ring.hpp"

namespace laurent {

// Sparse multivariate Laurent polynomial with exact rational coefficients.
//
// Canonical form: at most one term per exponent vector, no zero
// coefficients, terms ordered by graded lex (leading term first). Two
// polynomials are equal iff their canonical term maps are equal. The zero
// polynomial is the empty term map. Values are immutable after
// construction; every operation returns a fresh polynomial.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexGreater>;

    LaurentPolynomial() = default;

    explicit LaurentPolynomial(RingSignature sig) : sig_(std::move(sig)) {}

    static LaurentPolynomial zero(const RingSignature& sig) { return LaurentPolynomial(sig); }

    static LaurentPolynomial constant(const RingSignature& sig, const Rational& c) {
        LaurentPolynomial p(sig);
        if (c != 0) p.terms_.emplace(ExponentVector(sig.arity(), 0), c);
        return p;
    }

    // Single term c * prod vars^exps. Enforces exponent >= 0 on
    // non-invertible variables.
    static LaurentPolynomial term(const RingSignature& sig, const Rational& c,
                                  const ExponentVector& exps) {
        if (exps.size() != sig.arity())
            throw std::invalid_argument("LaurentPolynomial::term: exponent vector length mismatch");
        check_exponents(sig, exps);
        LaurentPolynomial p(sig);
        if (c != 0) p.terms_.emplace(exps, c);
        return p;
    }

    // c * v^e for a single named variable.
    static LaurentPolynomial monomial(const RingSignature& sig, const Rational& c,
                                      const std::string& var, std::int64_t e = 1) {
        ExponentVector exps(sig.arity(), 0);
        exps[sig.index_of(var)] = e;
        return term(sig, c, exps);
    }

    const RingSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
                terms_.begin()->first == ExponentVector(sig_.arity(), 0));
    }

    // A unit of the ring: one term whose exponents live on invertible
    // variables only (nonzero rational times an invertible monomial).
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const auto& e = terms_.begin()->first;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && !sig_.vars[i].invertible) return false;
        return true;
    }

    bool is_single_term() const { return terms_.size() == 1; }

    std::pair<ExponentVector, Rational> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        return *terms_.begin();
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r(sig_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        require_same_signature(a, b, "add");
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        require_same_signature(a, b, "sub");
        LaurentPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        require_same_signature(a, b, "mul");
        LaurentPolynomial r(a.sig_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExponentVector e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) {
        LaurentPolynomial r(p.sig_);
        if (c != 0)
            for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
        return r;
    }

    // p^k. Negative k is permitted only for single-term p, and the result
    // must keep non-invertible exponents >= 0.
    LaurentPolynomial pow(std::int64_t k) const {
        if (k < 0) {
            if (terms_.size() != 1)
                throw std::domain_error("pow: negative exponent of a non-monomial");
            const auto& [e, c] = *terms_.begin();
            ExponentVector ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * k;
            check_exponents(sig_, ne);
            return term(sig_, rational_pow(c, k), ne);
        }
        LaurentPolynomial result = constant(sig_, 1);
        LaurentPolynomial base = *this;
        std::uint64_t n = static_cast<std::uint64_t>(k);
        while (n > 0) {
            if (n & 1) result = result * base;
            if (n >>= 1) base = base * base;
        }
        return result;
    }

    // Ring homomorphism determined by per-variable images: variable i of
    // this signature maps to images[i] over the target signature. Images of
    // invertible variables must be units so their negative powers stay in
    // the ring.
    LaurentPolynomial substitute(const std::vector<LaurentPolynomial>& images,
                                 const RingSignature& target) const {
        if (images.size() != sig_.arity())
            throw std::invalid_argument("substitute: one image per variable required");
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (images[i].signature() != target)
                throw std::invalid_argument("substitute: image not in target signature");
            if (sig_.vars[i].invertible && !images[i].is_unit())
                throw std::domain_error("substitute: image of invertible variable '" +
                                        sig_.vars[i].name + "' is not a unit");
        }
        LaurentPolynomial result = zero(target);
        for (const auto& [e, c] : terms_) {
            LaurentPolynomial t = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t = t * images[i].pow(e[i]);
            result = result + t;
        }
        return result;
    }

    // Exact division in the Laurent ring: returns q with *this == q * g, or
    // nullopt. Invertible-variable denominators of both operands are first
    // cleared by a monomial shift; a single divisor is a Groebner basis of
    // the principal ideal it generates, so division with remainder under
    // grlex decides membership.
    std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& g) const {
        require_same_signature(*this, g, "exact_divide");
        if (g.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
        if (is_zero()) return zero(sig_);

        ExponentVector shift_p = min_invertible_exponents(*this);
        ExponentVector shift_g = min_invertible_exponents(g);
        LaurentPolynomial p2 = shifted(*this, shift_p, -1);
        LaurentPolynomial g2 = shifted(g, shift_g, -1);

        LaurentPolynomial q(sig_);
        LaurentPolynomial r = p2;
        const auto [lge, lgc] = g2.leading_term();
        while (!r.is_zero()) {
            const auto [lre, lrc] = r.leading_term();
            ExponentVector diff(lre.size());
            bool divisible = true;
            for (std::size_t i = 0; i < lre.size(); ++i) {
                diff[i] = lre[i] - lge[i];
                if (diff[i] < 0) { divisible = false; break; }
            }
            if (!divisible) return std::nullopt; // nonzero remainder: not in (g)
            LaurentPolynomial qt = term(sig_, lrc / lgc, diff);
            q = q + qt;
            r = r - qt * g2;
        }
        // p = (q shifted by shift_p - shift_g) * g
        ExponentVector adjust(shift_p.size());
        for (std::size_t i = 0; i < adjust.size(); ++i) adjust[i] = shift_p[i] - shift_g[i];
        return shifted(q, adjust, +1);
    }

    // Exact evaluation at a rational point; invertible variables must be
    // assigned nonzero values.
    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != sig_.arity())
            throw std::invalid_argument("evaluate: one value per variable required");
        for (std::size_t i = 0; i < point.size(); ++i)
            if (sig_.vars[i].invertible && point[i] == 0)
                throw std::domain_error("evaluate: zero assigned to invertible variable '" +
                                        sig_.vars[i].name + "'");
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= rational_pow(point[i], e[i]);
            sum += t;
        }
        return sum;
    }

    // Lift to an extended signature whose first variables coincide with
    // this one's.
    LaurentPolynomial lifted(const RingSignature& bigger) const {
        if (bigger.arity() < sig_.arity())
            throw std::invalid_argument("lifted: target signature smaller than source");
        for (std::size_t i = 0; i < sig_.arity(); ++i)
            if (bigger.vars[i] != sig_.vars[i])
                throw std::invalid_argument("lifted: signature is not a prefix extension");
        LaurentPolynomial r(bigger);
        for (const auto& [e, c] : terms_) {
            ExponentVector ne(bigger.arity(), 0);
            std::copy(e.begin(), e.end(), ne.begin());
            r.terms_.emplace(ne, c);
        }
        return r;
    }

    // Same polynomial over a signature with renamed variables (flags and
    // order preserved).
    LaurentPolynomial renamed(const RingSignature& other) const {
        if (other.arity() != sig_.arity())
            throw std::invalid_argument("renamed: arity mismatch");
        for (std::size_t i = 0; i < sig_.arity(); ++i)
            if (other.vars[i].invertible != sig_.vars[i].invertible)
                throw std::invalid_argument("renamed: invertibility flags differ");
        LaurentPolynomial r(other);
        r.terms_ = terms_;
        return r;
    }

    // Canonical rendering, leading term first, e.g. "3/2*x^2*t^-1 + -1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            bool printed_coeff = false;
            if (c != 1 || total_degree_abs(e) == 0) {
                os << rational_str(c);
                printed_coeff = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed_coeff) os << "*";
                printed_coeff = true;
                os << sig_.vars[i].name;
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    static std::int64_t total_degree_abs(const ExponentVector& e) {
        std::int64_t d = 0;
        for (auto x : e) d += (x < 0 ? -x : x);
        return d;
    }

    static void check_exponents(const RingSignature& sig, const ExponentVector& exps) {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] < 0 && !sig.vars[i].invertible)
                throw std::domain_error("negative exponent on non-invertible variable '" +
                                        sig.vars[i].name + "'");
    }

    static void require_same_signature(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                       const char* op) {
        if (a.sig_ != b.sig_)
            throw std::invalid_argument(std::string(op) + ": signature mismatch");
    }

    void add_term(const ExponentVector& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Per-variable minimum exponent over invertible variables (0 for
    // non-invertible ones and for the zero polynomial).
    static ExponentVector min_invertible_exponents(const LaurentPolynomial& p) {
        ExponentVector m(p.sig_.arity(), 0);
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!p.sig_.vars[i].invertible) continue;
                m[i] = first ? e[i] : std::min(m[i], e[i]);
            }
            first = false;
        }
        return m;
    }

    // Multiply by the monomial with exponents sign*shift (units only).
    static LaurentPolynomial shifted(const LaurentPolynomial& p, const ExponentVector& shift,
                                     int sign) {
        LaurentPolynomial r(p.sig_);
        for (const auto& [e, c] : p.terms_) {
            ExponentVector ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] + sign * shift[i];
            r.terms_.emplace(ne, c);
        }
        return r;
    }

    RingSignature sig_;
    TermMap terms_;
};

} // namespace laurent
