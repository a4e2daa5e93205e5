#pragma once

#include <future>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "laurent/catalog.hpp"
#include "laurent/certificates.hpp"

namespace laurent {

// Result of one reproduction item: the anchor of the source result it
// replays, whether every assertion held, and a short human summary.
struct ReproItem {
    std::string anchor;
    bool pass = false;
    std::string detail;
};

namespace repro {

inline constexpr std::size_t kOraclePoints = 1000; // exact points per verified map
inline constexpr std::uint64_t kSeed = 20240517u;

inline LaurentPolynomial gen(const RingSignature& sig, const std::string& name) {
    return LaurentPolynomial::monomial(sig, 1, name);
}

// Item 1: the worked cylinder isomorphism for (m, ell, ell') = (10, 1, 3)
// comes out bit-exactly as Psi = (u^-5 x, u^-2 y, t^3 u^10, t^-1 u^-3)
// with a=3, b=0, alpha=-1, beta=-3, and Psi*(y^5 t) = y^5 t^3.
inline ReproItem item_remark_psi() {
    ReproItem item{"Remark (after Prop. 1.2): explicit Psi for (m,ell,ell')=(10,1,3)", false, ""};
    try {
        auto h = make_family(FamilySpec::fermat(2, 5, 1));
        auto r = build_cylinder_iso(h, 1, 3, "u", kOraclePoints, kSeed);
        const auto& src = r.map.source.sig;
        auto expect = [&](const std::string& g, const LaurentPolynomial& want) {
            std::size_t i = r.map.target.sig.index_of(g);
            return r.map.images[i].as_polynomial(src) == want;
        };
        auto x = gen(src, "x"), y = gen(src, "y"), t = gen(src, "t"), u = gen(src, "u");
        bool images_ok = expect("x", u.pow(-5) * x) && expect("y", u.pow(-2) * y) &&
                         expect("t", t.pow(3) * u.pow(10)) && expect("u", t.pow(-1) * u.pow(-3));
        bool params_ok = r.parameters["a"] == 3 && r.parameters["b"] == 0 &&
                         r.parameters["alpha"] == -1 && r.parameters["beta"] == -3;
        const auto& tgt = r.map.target.sig;
        auto pulled = pullback(r.map, gen(tgt, "y").pow(5) * gen(tgt, "t"));
        bool pullback_ok = pulled == y.pow(5) * t.pow(3);
        bool unit_one = false; // the defining equation must pull back on the nose
        for (const auto& c : r.report.checks)
            if (c.name == "equation[0]" && c.detail.find("u = 1") != std::string::npos)
                unit_one = c.status == "pass";
        item.pass = images_ok && params_ok && r.report.verified() && pullback_ok && unit_one;
        std::ostringstream os;
        os << "images " << (images_ok ? "exact" : "WRONG") << "; (a,b,alpha,beta)=("
           << r.parameters["a"] << "," << r.parameters["b"] << "," << r.parameters["alpha"] << ","
           << r.parameters["beta"] << "); pullback of y^5*t = " << pulled.str();
        item.detail = os.str();
    } catch (const std::exception& e) {
        item.detail = std::string("exception: ") + e.what();
    }
    return item;
}

// Verify one sweep pair end to end; returns an error string or "".
inline std::string sweep_pair(const FamilySpec& base, i64 ell, i64 ellPrime,
                              std::size_t points) {
    try {
        FamilySpec s = base;
        s.ell = ell;
        auto r = build_cylinder_iso(make_family(s), ell, ellPrime, "u", points, kSeed);
        auto inv = inverse(r.map);
        if (!is_identity(compose(inv, r.map)) || !is_identity(compose(r.map, inv)))
            return base.name() + " (" + std::to_string(ell) + "," + std::to_string(ellPrime) +
                   "): inverse composition is not the identity";
        bool oracle_ran = false;
        for (const auto& c : r.report.checks)
            if (c.name == "oracle" && c.status == "pass") oracle_ran = true;
        if (!oracle_ran)
            return base.name() + " (" + std::to_string(ell) + "," + std::to_string(ellPrime) +
                   "): oracle did not run";
        return "";
    } catch (const std::exception& e) {
        return base.name() + " (" + std::to_string(ell) + "," + std::to_string(ellPrime) +
               "): " + e.what();
    }
}

// Item 2 (and the oracle half of item 8): all pairs ell, ell' <= 40 with
// gcd(ell, m) = gcd(ell', m) in both catalog families build, verify,
// invert to the identity, and pass the exact rational-point oracle.
inline ReproItem item_pair_sweep(std::size_t points = kOraclePoints) {
    ReproItem item{"Prop. 1.2(2): cylinder-isomorphism sweep, ell, ell' <= 40", false, ""};
    std::vector<std::pair<FamilySpec, std::pair<i64, i64>>> jobs;
    for (const FamilySpec& base :
         {FamilySpec::fermat(2, 5, 1), FamilySpec::danielewski(1, 5, 1)}) {
        const i64 m = base.weight_m();
        for (i64 ell = 1; ell <= 40; ++ell)
            for (i64 ellPrime = 1; ellPrime <= 40; ++ellPrime)
                if (gcd64(ell, m) == gcd64(ellPrime, m))
                    jobs.push_back({base, {ell, ellPrime}});
    }
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<std::vector<std::string>>> futures;
    for (std::size_t w = 0; w < workers; ++w)
        futures.push_back(std::async(std::launch::async, [&, w] {
            std::vector<std::string> errs;
            for (std::size_t i = w; i < jobs.size(); i += workers) {
                auto err = sweep_pair(jobs[i].first, jobs[i].second.first, jobs[i].second.second,
                                      points);
                if (!err.empty()) errs.push_back(err);
            }
            return errs;
        }));
    std::vector<std::string> errors;
    for (auto& f : futures)
        for (auto& e : f.get()) errors.push_back(e);
    item.pass = errors.empty();
    item.detail = std::to_string(jobs.size()) + " pairs, " + std::to_string(points) +
                  " oracle points each; " + std::to_string(errors.size()) + " failures" +
                  (errors.empty() ? "" : ("; first: " + errors.front()));
    return item;
}

// Item 3: degenerate-fiber multisets {2,3}, {3,3}, {2,2,2} for the three
// fibrations on t^ell(x^2 + y^3) = 1, pairwise certified for 0-2 extra
// torus factors.
inline ReproItem item_fiber_trichotomy() {
    ReproItem item{"Lemma 2.1: degenerate-fiber trichotomy for x^2 + y^3", false, ""};
    auto r1 = degenerate_fibers(2, 3, 1, {2, 0, 1});
    auto r2 = degenerate_fibers(2, 3, 2, {1, 0, 1});
    auto r3 = degenerate_fibers(2, 3, 3, {0, 1, 1});
    if (!r1 || !r2 || !r3) {
        item.detail = "a canonical fibration came back unsupported";
        return item;
    }
    bool multisets_ok = r1->multiset() == std::vector<i64>{2, 3} &&
                        r2->multiset() == std::vector<i64>{3, 3} &&
                        r3->multiset() == std::vector<i64>{2, 2, 2};
    bool certs_ok = true;
    struct Pair { i64 l1; FibrationSpec s1; i64 l2; FibrationSpec s2; };
    for (const auto& pr : {Pair{1, {2, 0, 1}, 2, {1, 0, 1}}, Pair{1, {2, 0, 1}, 3, {0, 1, 1}},
                           Pair{2, {1, 0, 1}, 3, {0, 1, 1}}})
        for (i64 n : {0, 1, 2})
            certs_ok &= certify_fiber_distinct(2, 3, pr.l1, pr.s1, pr.l2, pr.s2, n).certified();
    item.pass = multisets_ok && certs_ok;
    auto fmt = [](const std::vector<i64>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    item.detail = fmt(r1->multiset()) + ", " + fmt(r2->multiset()) + ", " + fmt(r3->multiset()) +
                  "; pairwise certified for n in {0,1,2}: " + (certs_ok ? "yes" : "NO");
    return item;
}

// Item 4: the headline counterexample certificates, plus the scan grids
// that surface them as (cylinder-isomorphic, certified-nonisomorphic)
// pairs.
inline ReproItem item_counterexample_certificates() {
    ReproItem item{"Prop. 2.5 and Sec. 3 Example: counterexample certificates + scan", false, ""};
    auto cf = certify_fermat_noniso(2, 5, 3);
    auto has_check = [&](const std::string& s) {
        for (const auto& c : cf.checks)
            if (c.description == s && c.status == "pass") return true;
        return false;
    };
    bool fermat_ok = cf.certified() && cf.checks.size() == 2 && has_check("5 ∤ 2") &&
                     has_check("5 ∤ 6");
    bool dan_ok = certify_danielewski_noniso(1, 5, 1, 2).certified();

    auto fermat_scan = scan_family(FamilySpec::fermat(2, 5, 1), 3, 25, kSeed);
    auto dan_scan = scan_family(FamilySpec::danielewski(1, 5, 1), 4, 25, kSeed);
    auto fermat_pairs = fermat_scan.counterexamples();
    auto dan_pairs = dan_scan.counterexamples();
    std::set<std::pair<i64, i64>> fc(fermat_pairs.begin(), fermat_pairs.end());
    std::set<std::pair<i64, i64>> dc(dan_pairs.begin(), dan_pairs.end());
    bool scan_ok = fc.count({1, 3}) == 1 &&
                   dc == std::set<std::pair<i64, i64>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}};
    item.pass = fermat_ok && dan_ok && scan_ok;
    item.detail = std::string("fermat(2,5,3) ") + verdict_name(cf.verdict) +
                  " with checks 5∤2, 5∤6: " + (fermat_ok ? "yes" : "NO") +
                  "; danielewski(1,5,1,2): " + (dan_ok ? "certified" : "NO") +
                  "; scans surface the pairs: " + (scan_ok ? "yes" : "NO");
    return item;
}

// Item 5: square-pair search finds (2,13) for m=5 and (3,67) for m=10,
// and the end-to-end square isomorphisms verify for both families.
inline ReproItem item_squares() {
    ReproItem item{"Props. 4.3/4.4 via Cor. 4.2: square isomorphisms", false, ""};
    try {
        auto p5 = square_pair_solve(5, 20);
        auto p10 = square_pair_solve(10, 70);
        auto find = [](const std::vector<SquarePair>& v, i64 a, i64 b) -> const SquarePair* {
            for (const auto& p : v)
                if (p.a == a && p.b == b) return &p;
            return nullptr;
        };
        const SquarePair* s5 = find(p5, 2, 13);
        const SquarePair* s10 = find(p10, 3, 67);
        if (!s5 || !s10 || !s5->nontrivial || !s10->nontrivial) {
            item.detail = "expected square pairs missing from search output";
            return item;
        }
        auto sq_f = build_square_iso(make_family(FamilySpec::fermat(2, 5, 1)), *s10,
                                     kOraclePoints, kSeed);
        auto sq_d = build_square_iso(make_family(FamilySpec::danielewski(1, 5, 1)), *s5,
                                     kOraclePoints, kSeed);
        item.pass = sq_f.report.verified() && sq_d.report.verified();
        item.detail = "pairs (2,13)@m=5, (3,67)@m=10 found; fermat square " +
                      std::string(sq_f.report.verified() ? "verified" : "FAILED") +
                      ", danielewski square " +
                      (sq_d.report.verified() ? "verified" : "FAILED");
    } catch (const std::exception& e) {
        item.detail = std::string("exception: ") + e.what();
    }
    return item;
}

// Item 6: genus values of the associated smooth projective curves.
inline ReproItem item_genus() {
    ReproItem item{"Sec. 2: genus (p-1)(q-1)/2", false, ""};
    bool ok = genus(2, 5) == 2 && genus(2, 3) == 1 && genus(3, 5) == 4;
    item.pass = ok;
    item.detail = "genus(2,5)=" + std::to_string(genus(2, 5)) + ", genus(2,3)=" +
                  std::to_string(genus(2, 3)) + ", genus(3,5)=" + std::to_string(genus(3, 5));
    return item;
}

// A structure-preserving corruption of one non-invertible generator's
// image: scale its coefficient by a non-unit-preserving factor or shift
// one invertible-variable exponent. Either change keeps the map
// well-formed (so verification reaches the equation checks) but breaks
// the isomorphism, and must be refuted.
inline MonomialRingMap perturb(const MonomialRingMap& map, std::mt19937_64& rng) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < map.target.sig.arity(); ++i)
        if (!map.target.sig.vars[i].invertible) candidates.push_back(i);
    MonomialRingMap out = map;
    std::size_t pick = candidates[rng() % candidates.size()];
    if (rng() % 2 == 0) {
        static const Rational factors[] = {Rational(2), Rational(3), Rational(5),
                                           Rational(1, 2), Rational(1, 3)};
        out.images[pick].coeff *= factors[rng() % 5];
    } else {
        std::vector<std::size_t> inv_slots;
        for (std::size_t j = 0; j < map.source.sig.arity(); ++j)
            if (map.source.sig.vars[j].invertible) inv_slots.push_back(j);
        static const i64 deltas[] = {-2, -1, 1, 2};
        out.images[pick].exps[inv_slots[rng() % inv_slots.size()]] += deltas[rng() % 4];
    }
    return out;
}

// Item 7: >= 200 random perturbations of verified maps are refuted, and
// no certificate routine certifies a pair whose parameters satisfy the
// isomorphism congruence ell' = +-ell (mod m), exhaustively for m <= 50.
inline ReproItem item_negative_controls(std::size_t perturbations = 200) {
    ReproItem item{"Negative controls: perturbation refutation + certificate consistency", false,
                   ""};
    std::mt19937_64 rng(kSeed);
    std::vector<MonomialRingMap> verified_maps;
    auto hf = make_family(FamilySpec::fermat(2, 5, 1));
    auto hd = make_family(FamilySpec::danielewski(1, 5, 1));
    verified_maps.push_back(build_cylinder_iso(hf, 1, 3, "u", 25, kSeed).map);
    verified_maps.push_back(build_cylinder_iso(hd, 2, 4, "u", 25, kSeed).map);
    verified_maps.push_back(
        build_congruent_iso(make_family(FamilySpec::fermat(2, 5, 3)), 7, 25, kSeed).map);
    verified_maps.push_back(build_square_iso(hd, SquarePair{2, 13, 1, 5, true}, 25, kSeed).map);

    std::size_t refuted = 0, survived = 0;
    for (std::size_t i = 0; i < perturbations; ++i) {
        const auto& base = verified_maps[i % verified_maps.size()];
        auto bad = perturb(base, rng);
        auto report = verify_map(bad, 10, kSeed + i);
        if (report.verdict == VerificationReport::Verdict::refuted) ++refuted;
        else ++survived;
    }

    // Exhaustive anti-contradiction: whenever ell' = +-ell (mod m), no
    // certificate may certify.
    std::size_t grid_checked = 0, grid_bad = 0;
    for (i64 m = 2; m <= 50; ++m)
        for (i64 ell = 1; ell <= 2 * m; ++ell)
            for (i64 ellPrime = 1; ellPrime <= 2 * m; ++ellPrime) {
                if ((ellPrime - ell) % m != 0 && (ellPrime + ell) % m != 0) continue;
                ++grid_checked;
                if (certify_danielewski_noniso(1, m, ell, ellPrime).certified()) ++grid_bad;
            }
    // Same congruence guard for the fermat criterion (pairs against ell=1,
    // i.e. ell = +-1 mod m) over all catalog (p, q) with m = p*q <= 50.
    for (i64 p : {2, 3, 5, 7})
        for (i64 q = 3; p * q <= 50; ++q) {
            if (gcd64(p, q) != 1) continue;
            const i64 m = p * q;
            for (i64 ell = 1; ell <= 2 * m; ++ell) {
                if ((ell - 1) % m != 0 && (ell + 1) % m != 0) continue;
                ++grid_checked;
                if (certify_fermat_noniso(p, q, ell).certified()) ++grid_bad;
            }
        }
    // Fiber certificates on congruent supported pairs must not certify.
    for (i64 ell : {1, 2, 3}) {
        ++grid_checked;
        auto spec = *canonical_fibration_spec(2, 3, ell);
        if (certify_fiber_distinct(2, 3, ell, spec, ell, spec).certified()) ++grid_bad;
    }

    item.pass = survived == 0 && refuted >= 200 && grid_bad == 0;
    item.detail = std::to_string(refuted) + "/" + std::to_string(perturbations) +
                  " perturbations refuted; " + std::to_string(grid_checked) +
                  " congruent grid cells checked, " + std::to_string(grid_bad) +
                  " wrongly certified";
    return item;
}

// Item 8: every map verified above already ran the exact rational-point
// oracle at 1000 seeded points (kOraclePoints); this item re-asserts it on
// the flagship map explicitly so the criterion has its own line.
inline ReproItem item_oracle_equivalence() {
    ReproItem item{"Oracle equivalence: 1000 exact rational points per verified map", false, ""};
    auto h = make_family(FamilySpec::fermat(2, 5, 1));
    auto r = build_cylinder_iso(h, 1, 3, "u", kOraclePoints, kSeed);
    bool oracle_pass = false;
    std::string oracle_detail;
    for (const auto& c : r.report.checks)
        if (c.name == "oracle") {
            oracle_pass = c.status == "pass";
            oracle_detail = c.detail;
        }
    item.pass = oracle_pass && r.report.oracle_points == kOraclePoints;
    item.detail = "flagship map: " + oracle_detail +
                  " (sweep and square maps run the same oracle; see items 2 and 5)";
    return item;
}

} // namespace repro

// The full reproduction suite, in source order. Deterministic: all seeds
// fixed.
inline std::vector<ReproItem> reproduce_all() {
    return {repro::item_remark_psi(),
            repro::item_pair_sweep(),
            repro::item_fiber_trichotomy(),
            repro::item_counterexample_certificates(),
            repro::item_squares(),
            repro::item_genus(),
            repro::item_negative_controls(),
            repro::item_oracle_equivalence()};
}

} // namespace laurent
