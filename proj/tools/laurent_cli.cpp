// Command-line surface for the laurent workbench: builds and verifies the
// explicit cylinder/product/square isomorphisms, emits non-isomorphism
// certificates, computes degenerate-fiber data, and scans parameter grids
// for counterexample pairs.
//
// Exit codes: 0 verified/certified, 1 refuted/not-certified, 2
// unsupported/preconditions-violated, 3 internal error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "laurent/json_io.hpp"
#include "laurent/reproduce.hpp"

using namespace laurent;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInternal = 3;

struct FamilyArgs {
    std::string family;
    i64 p = 2, q = 5;
    i64 n = 1, m = 5;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "fermat or danielewski")->required();
        cmd->add_option("--p", p, "fermat exponent p");
        cmd->add_option("--q", q, "fermat exponent q");
        cmd->add_option("--n", n, "danielewski variable count n");
        cmd->add_option("--m", m, "danielewski exponent m");
    }

    FamilySpec spec(i64 ell) const {
        if (family == "fermat") return FamilySpec::fermat(p, q, ell);
        if (family == "danielewski") return FamilySpec::danielewski(n, m, ell);
        throw CLI::ValidationError("--family must be fermat or danielewski");
    }
};

// Parse a monomial spec like "x^2t", "xt", "yt", "y^5t^3" (optional '*'
// separators allowed).
FibrationSpec parse_fibration_spec(const std::string& s) {
    FibrationSpec spec;
    std::size_t i = 0;
    while (i < s.size()) {
        char v = s[i];
        if (v == '*' || v == ' ') { ++i; continue; }
        if (v != 'x' && v != 'y' && v != 't')
            throw std::invalid_argument("spec may only use variables x, y, t: " + s);
        ++i;
        i64 e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t len = 0;
            e = std::stoll(s.substr(i), &len);
            i += len;
        }
        if (v == 'x') spec.alpha += e;
        else if (v == 'y') spec.beta += e;
        else spec.gamma += e;
    }
    return spec;
}

void print_map(const MonomialRingMap& map) {
    for (std::size_t i = 0; i < map.images.size(); ++i)
        std::cout << "  " << map.target.sig.vars[i].name << " ↦ "
                  << map.images[i].as_polynomial(map.source.sig).str() << "\n";
}

void print_report(const VerificationReport& r) {
    std::cout << "verdict: " << VerificationReport::verdict_name(r.verdict) << "\n";
    for (const auto& c : r.checks)
        std::cout << "  [" << c.status << "] " << c.name << ": " << c.detail << "\n";
}

void print_certificate(const NonIsoCertificate& c) {
    std::cout << "certificate (" << c.family << "): " << verdict_name(c.verdict) << "\n";
    for (const auto& [k, v] : c.parameters) std::cout << "  " << k << " = " << v << "\n";
    for (const auto& ch : c.checks)
        std::cout << "  [" << ch.status << "] " << ch.description << "  (" << ch.citation << ")\n";
}

int certificate_exit(const NonIsoCertificate& c) {
    switch (c.verdict) {
    case CertVerdict::certified: return kExitVerified;
    case CertVerdict::not_certified:
    case CertVerdict::heuristic: return kExitRefuted;
    case CertVerdict::preconditions_violated: return kExitUnsupported;
    }
    return kExitInternal;
}

void emit(const json& j, bool as_json, const std::string& stem, const std::string& out_file,
          bool write_file) {
    if (as_json) std::cout << j.dump(2) << "\n";
    if (!write_file) return;
    std::string path = out_file.empty() ? write_artifact(j, stem, resolve_out_dir(""))
                                        : [&] {
                                              std::ofstream f(out_file);
                                              if (!f)
                                                  throw std::runtime_error("cannot open " +
                                                                           out_file);
                                              f << j.dump(2) << "\n";
                                              return out_file;
                                          }();
    std::cerr << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"laurent: exact isomorphism builder and non-isomorphism certifier for "
                 "hypersurfaces t^l*f = 1"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    // verify-cylinder-iso
    auto* vc = app.add_subcommand("verify-cylinder-iso",
                                  "build and verify the cylinder isomorphism for (l, l')");
    FamilyArgs vc_fam;
    vc_fam.attach(vc);
    i64 vc_l = 1, vc_lp = 3;
    std::string vc_out;
    std::size_t vc_points = 100;
    std::uint64_t vc_seed = 20240517u;
    vc->add_option("--l", vc_l, "exponent l (target side)")->required();
    vc->add_option("--lp", vc_lp, "exponent l' (source side)")->required();
    vc->add_option("--out", vc_out, "output JSON file (default: content-addressed)");
    vc->add_option("--points", vc_points, "oracle sample count");
    vc->add_option("--seed", vc_seed, "oracle seed");

    // certify-noniso
    auto* cn = app.add_subcommand("certify-noniso", "emit a non-isomorphism certificate");
    FamilyArgs cn_fam;
    cn_fam.attach(cn);
    i64 cn_l = 3, cn_lp = 0;
    std::string cn_out;
    cn->add_option("--l", cn_l, "exponent l")->required();
    cn->add_option("--lp", cn_lp, "exponent l' (danielewski only)");
    cn->add_option("--out", cn_out, "output JSON file (default: content-addressed)");

    // find-square-pair
    auto* fs = app.add_subcommand("find-square-pair",
                                  "solve a+b = 0 (mod m), ab = 1 (mod m^2) up to a bound");
    i64 fs_m = 5, fs_bound = 100;
    fs->add_option("--m", fs_m, "modulus m")->required();
    fs->add_option("--bound", fs_bound, "search bound for a, b");

    // fibers
    auto* fb = app.add_subcommand("fibers", "degenerate-fiber data of a monomial fibration");
    i64 fb_p = 2, fb_q = 3, fb_l = 1;
    std::string fb_map = "x^2t";
    fb->add_option("--p", fb_p)->required();
    fb->add_option("--q", fb_q)->required();
    fb->add_option("--l", fb_l)->required();
    fb->add_option("--map", fb_map, "monomial, e.g. x^2t, xt, yt")->required();

    // scan
    auto* sc = app.add_subcommand("scan", "grid scan over (l, l') pairs");
    FamilyArgs sc_fam;
    sc_fam.attach(sc);
    i64 sc_max = 40;
    std::size_t sc_points = 25;
    sc->add_option("--max", sc_max, "grid bound for l, l'");
    sc->add_option("--points", sc_points, "oracle sample count per pair");

    // reproduce-paper
    auto* rp = app.add_subcommand("reproduce-paper",
                                  "replay every reproduction item and print a pass/fail table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (vc->parsed()) {
            std::optional<IsoRecipe> built;
            try {
                built = build_cylinder_iso(make_family(vc_fam.spec(vc_l)), vc_l, vc_lp, "u",
                                           vc_points, vc_seed);
            } catch (const std::domain_error& e) {
                if (!as_json) std::cout << "unsupported: " << e.what() << "\n";
                else std::cout << json{{"verdict", "unsupported"}, {"reason", e.what()}}.dump(2)
                               << "\n";
                return kExitUnsupported;
            }
            const IsoRecipe& recipe = *built;
            emit(recipe_to_json(recipe), as_json, "iso-cylinder", vc_out, true);
            if (!as_json) {
                std::cout << "cylinder isomorphism for (l, l') = (" << vc_l << ", " << vc_lp
                          << "):\n";
                print_map(recipe.map);
                print_report(recipe.report);
            }
            return recipe.report.verified() ? kExitVerified : kExitRefuted;
        }

        if (cn->parsed()) {
            NonIsoCertificate cert;
            if (cn_fam.family == "fermat") {
                cert = certify_fermat_noniso(cn_fam.p, cn_fam.q, cn_l);
            } else if (cn_fam.family == "danielewski") {
                if (cn_lp == 0) throw CLI::ValidationError("danielewski requires --lp");
                cert = certify_danielewski_noniso(cn_fam.n, cn_fam.m, cn_l, cn_lp);
            } else {
                throw CLI::ValidationError("--family must be fermat or danielewski");
            }
            emit(certificate_to_json(cert), as_json, "noniso", cn_out, true);
            if (!as_json) print_certificate(cert);
            return certificate_exit(cert);
        }

        if (fs->parsed()) {
            auto pairs = square_pair_solve(fs_m, fs_bound);
            if (as_json) {
                json rows = json::array();
                for (const auto& p : pairs)
                    rows.push_back({{"a", p.a}, {"b", p.b}, {"c", p.c}, {"m", p.m},
                                    {"nontrivial", p.nontrivial}});
                std::cout << json{{"m", fs_m}, {"bound", fs_bound}, {"pairs", rows}}.dump(2)
                          << "\n";
            } else {
                std::cout << "square pairs for m = " << fs_m << " (a, b <= " << fs_bound
                          << "):\n";
                for (const auto& p : pairs)
                    std::cout << "  a=" << p.a << " b=" << p.b << " c=" << p.c
                              << (p.nontrivial ? "  (nontrivial)" : "  (trivial)") << "\n";
                if (pairs.empty()) std::cout << "  none found up to bound\n";
            }
            return pairs.empty() ? kExitRefuted : kExitVerified;
        }

        if (fb->parsed()) {
            auto spec = parse_fibration_spec(fb_map);
            auto report = degenerate_fibers(fb_p, fb_q, fb_l, spec);
            if (!report) {
                if (!as_json) std::cout << "unsupported fibration spec for these parameters\n";
                else std::cout << json{{"verdict", "unsupported"}}.dump(2) << "\n";
                return kExitUnsupported;
            }
            if (as_json) {
                std::cout << fiber_report_to_json(*report).dump(2) << "\n";
            } else {
                std::cout << "degenerate fibers of " << fb_map << " on t^" << fb_l << "(x^" << fb_p
                          << " + y^" << fb_q << ") = 1:\n";
                for (const auto& f : report->multipleFibers)
                    std::cout << "  multiplicity " << f.multiplicity << " at the "
                              << f.distinctLocationCount << " root(s) of " << f.location.str()
                              << "\n";
            }
            return kExitVerified;
        }

        if (sc->parsed()) {
            auto result = scan_family(sc_fam.spec(1), sc_max, sc_points);
            if (as_json) {
                json rows = json::array();
                for (const auto& r : result.rows) {
                    json row{{"l", r.ell},
                             {"lp", r.ellPrime},
                             {"cylinder", r.cylinder_status},
                             {"certificate",
                              r.certificate ? verdict_name(r.certificate->verdict) : "none"},
                             {"counterexample", r.counterexample}};
                    rows.push_back(row);
                }
                json ces = json::array();
                for (const auto& [a, b] : result.counterexamples()) ces.push_back({a, b});
                std::cout << json{{"rows", rows}, {"counterexamples", ces}}.dump(2) << "\n";
            } else {
                for (const auto& r : result.rows)
                    std::cout << "  (" << r.ell << ", " << r.ellPrime << "): cylinder "
                              << r.cylinder_status << ", certificate "
                              << (r.certificate ? verdict_name(r.certificate->verdict) : "none")
                              << (r.counterexample ? "  <-- counterexample" : "") << "\n";
                std::cout << "counterexample pairs (cylinder-isomorphic, certified "
                             "non-isomorphic):";
                for (const auto& [a, b] : result.counterexamples())
                    std::cout << " (" << a << "," << b << ")";
                std::cout << "\n";
            }
            return kExitVerified;
        }

        if (rp->parsed()) {
            auto items = reproduce_all();
            bool all = true;
            if (as_json) {
                json rows = json::array();
                for (const auto& it : items) {
                    rows.push_back({{"anchor", it.anchor}, {"pass", it.pass},
                                    {"detail", it.detail}});
                    all &= it.pass;
                }
                std::cout << json{{"items", rows}, {"all_pass", all}}.dump(2) << "\n";
            } else {
                for (const auto& it : items) {
                    std::cout << (it.pass ? "[PASS] " : "[FAIL] ") << it.anchor << "\n        "
                              << it.detail << "\n";
                    all &= it.pass;
                }
            }
            return all ? kExitVerified : kExitRefuted;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
