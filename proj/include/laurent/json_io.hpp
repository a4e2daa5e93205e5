#pragma once

#include <cstdint>
#include <fstream>
#include <string>

#include "json.hpp"

#include "laurent/catalog.hpp"

namespace laurent {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// ---- rationals -----------------------------------------------------------
//
// Numerator and denominator are emitted as JSON integers when they fit in
// 64 bits and as decimal strings otherwise; the loader accepts both.

inline json int_to_json(const Integer& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

inline Integer int_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(static_cast<long>(j.get<std::int64_t>()));
}

inline json rational_to_json(const Rational& r) {
    return json{{"num", int_to_json(r.get_num())}, {"den", int_to_json(r.get_den())}};
}

inline Rational rational_from_json(const json& j) {
    Rational r(int_from_json(j.at("num")), int_from_json(j.at("den")));
    r.canonicalize();
    return r;
}

// ---- signatures and polynomials ------------------------------------------

inline json signature_to_json(const RingSignature& sig) {
    json vars = json::array();
    for (const auto& v : sig.vars) vars.push_back({{"name", v.name}, {"invertible", v.invertible}});
    return vars;
}

inline RingSignature signature_from_json(const json& j) {
    std::vector<Variable> vars;
    for (const auto& v : j) vars.push_back({v.at("name").get<std::string>(),
                                            v.at("invertible").get<bool>()});
    return RingSignature(std::move(vars));
}

inline json polynomial_to_json(const LaurentPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::array();
        for (auto x : e) exps.push_back(x);
        terms.push_back({{"coefficient", rational_to_json(c)}, {"exponents", exps}});
    }
    return json{{"signature", signature_to_json(p.signature())}, {"terms", terms}};
}

inline LaurentPolynomial polynomial_from_json(const json& j) {
    RingSignature sig = signature_from_json(j.at("signature"));
    LaurentPolynomial p = LaurentPolynomial::zero(sig);
    for (const auto& t : j.at("terms")) {
        ExponentVector e;
        for (const auto& x : t.at("exponents")) e.push_back(x.get<std::int64_t>());
        p = p + LaurentPolynomial::term(sig, rational_from_json(t.at("coefficient")), e);
    }
    return p;
}

// ---- hypersurfaces and varieties ------------------------------------------

inline json family_tag_to_json(const FamilyTag& t) {
    const char* kind = t.kind == FamilyTag::Kind::fermat ? "fermat"
                       : t.kind == FamilyTag::Kind::danielewski ? "danielewski"
                                                                : "generic";
    return json{{"kind", kind}, {"p", t.p}, {"q", t.q}, {"n", t.n}, {"m", t.m}};
}

inline FamilyTag family_tag_from_json(const json& j) {
    FamilyTag t;
    std::string kind = j.at("kind").get<std::string>();
    t.kind = kind == "fermat" ? FamilyTag::Kind::fermat
             : kind == "danielewski" ? FamilyTag::Kind::danielewski
                                     : FamilyTag::Kind::generic;
    t.p = j.at("p").get<i64>();
    t.q = j.at("q").get<i64>();
    t.n = j.at("n").get<i64>();
    t.m = j.at("m").get<i64>();
    return t;
}

inline json hypersurface_to_json(const Hypersurface& h) {
    return json{{"signature", signature_to_json(h.sig)},
                {"f", polynomial_to_json(h.f)},
                {"weights", h.action.weights},
                {"ell", h.ell},
                {"torus_var", h.torus_var},
                {"family", family_tag_to_json(h.family)},
                {"irreducible_f", h.irreducible_f},
                {"cylinder_vars", h.cylinder_vars}};
}

inline Hypersurface hypersurface_from_json(const json& j) {
    RingSignature sig = signature_from_json(j.at("signature"));
    Hypersurface h = make_hypersurface(sig, polynomial_from_json(j.at("f")),
                                       TorusAction(j.at("weights").get<std::vector<i64>>()),
                                       j.at("ell").get<i64>(),
                                       j.at("torus_var").get<std::string>(),
                                       family_tag_from_json(j.at("family")),
                                       j.at("irreducible_f").get<bool>());
    h.cylinder_vars = j.at("cylinder_vars").get<std::vector<std::string>>();
    return h;
}

inline json variety_to_json(const Variety& v) {
    json factors = json::array();
    for (const auto& f : v.factors) factors.push_back(hypersurface_to_json(f));
    return json{{"factors", factors}};
}

inline Variety variety_from_json(const json& j) {
    std::vector<Hypersurface> factors;
    for (const auto& f : j.at("factors")) factors.push_back(hypersurface_from_json(f));
    if (factors.size() == 1) return as_variety(factors[0]);
    return product_variety(factors);
}

// ---- maps, reports, recipes ------------------------------------------------

inline json map_to_json(const MonomialRingMap& m) {
    json images = json::array();
    for (std::size_t i = 0; i < m.images.size(); ++i) {
        json exps = json::array();
        for (auto x : m.images[i].exps) exps.push_back(x);
        images.push_back({{"generator", m.target.sig.vars[i].name},
                          {"coefficient", rational_to_json(m.images[i].coeff)},
                          {"exponents", exps}});
    }
    return json{{"source", variety_to_json(m.source)},
                {"target", variety_to_json(m.target)},
                {"images", images}};
}

inline MonomialRingMap map_from_json(const json& j) {
    MonomialRingMap m{variety_from_json(j.at("source")), variety_from_json(j.at("target")), {}};
    for (const auto& im : j.at("images")) {
        ExponentVector e;
        for (const auto& x : im.at("exponents")) e.push_back(x.get<std::int64_t>());
        m.images.push_back({rational_from_json(im.at("coefficient")), e});
    }
    if (m.images.size() != m.target.sig.arity())
        throw std::invalid_argument("map_from_json: one image per target generator");
    return m;
}

inline json report_to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    return json{{"schema_version", kSchemaVersion},
                {"verdict", VerificationReport::verdict_name(r.verdict)},
                {"checks", checks},
                {"seed", r.seed},
                {"oracle_points", r.oracle_points}};
}

inline json recipe_to_json(const IsoRecipe& r) {
    return json{{"schema_version", kSchemaVersion},
                {"kind", IsoRecipe::kind_name(r.kind)},
                {"parameters", r.parameters},
                {"map", map_to_json(r.map)},
                {"citation", r.citation},
                {"report", report_to_json(r.report)}};
}

inline json certificate_to_json(const NonIsoCertificate& c) {
    json checks = json::array();
    for (const auto& ch : c.checks)
        checks.push_back({{"description", ch.description},
                          {"citation", ch.citation},
                          {"status", ch.status}});
    json params = c.parameters;
    for (const auto& [k, v] : c.annotations) params[k] = v;
    return json{{"schema_version", kSchemaVersion},
                {"kind", c.family},
                {"parameters", params},
                {"checks", checks},
                {"verdict", verdict_name(c.verdict)}};
}

inline NonIsoCertificate certificate_from_json(const json& j) {
    NonIsoCertificate c;
    c.family = j.at("kind").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) {
        if (v.is_number_integer()) c.parameters[k] = v.get<i64>();
        else c.annotations[k] = v.get<std::string>();
    }
    for (const auto& ch : j.at("checks"))
        c.checks.push_back({ch.at("description").get<std::string>(),
                            ch.at("citation").get<std::string>(),
                            ch.at("status").get<std::string>()});
    std::string v = j.at("verdict").get<std::string>();
    if (v == "certified-noniso") c.verdict = CertVerdict::certified;
    else if (v == "not-certified") c.verdict = CertVerdict::not_certified;
    else if (v == "preconditions-violated") c.verdict = CertVerdict::preconditions_violated;
    else if (v == "heuristic") c.verdict = CertVerdict::heuristic;
    else throw std::invalid_argument("certificate_from_json: unknown verdict '" + v + "'");
    return c;
}

inline json fiber_report_to_json(const FiberReport& r) {
    json fibers = json::array();
    for (const auto& f : r.multipleFibers) {
        json coeffs = json::array();
        for (const auto& c : f.location.c) coeffs.push_back(rational_to_json(c));
        fibers.push_back({{"location_coefficients", coeffs},
                          {"distinct_locations", f.distinctLocationCount},
                          {"multiplicity", f.multiplicity}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"p", r.p},
                {"q", r.q},
                {"ell", r.ell},
                {"spec", r.spec.str()},
                {"multiple_fibers", fibers},
                {"multiset", r.multiset()}};
}

// ---- persistence ------------------------------------------------------------
//
// Artifact files are content-addressed: the filename embeds an FNV-1a hash
// of the canonical (sorted-key, no-whitespace) dump, so a catalog
// directory is append-only and identical artifacts collide to one file.

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string canonical_dump(const json& j) { return j.dump(); } // keys already sorted

inline std::string content_hash(const json& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_dump(j))));
    return buf;
}

// Output directory: explicit argument, else $LAURENT_OUT_DIR, else cwd.
inline std::string resolve_out_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("LAURENT_OUT_DIR")) return env;
    return ".";
}

// Writes j to <dir>/<stem>-<hash>.json and returns the path.
inline std::string write_artifact(const json& j, const std::string& stem,
                                  const std::string& dir) {
    std::string path = dir + "/" + stem + "-" + content_hash(j) + ".json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_artifact: cannot open " + path);
    out << j.dump(2) << "\n";
    return path;
}

inline json read_artifact(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_artifact: cannot open " + path);
    return json::parse(in);
}

} // namespace laurent
