#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "laurent/json_io.hpp"

using namespace laurent;

TEST_CASE("make_family builds the two catalog families") {
    auto h = make_family(FamilySpec::fermat(2, 5, 3));
    CHECK(h.action.weights == std::vector<i64>{5, 2});
    CHECK(h.m == 10);
    CHECK(h.ell == 3);
    CHECK(h.irreducible_f);
    auto x = LaurentPolynomial::monomial(h.sig, 1, "x");
    auto y = LaurentPolynomial::monomial(h.sig, 1, "y");
    CHECK(h.f == x.pow(2) + y.pow(5));

    auto d = make_family(FamilySpec::danielewski(1, 5, 2));
    CHECK(d.action.weights == std::vector<i64>{1, 1, 3});
    CHECK(d.m == 5);
    CHECK(d.irreducible_f);
    CHECK(d.sig.index_of("x1") == 0);
    CHECK(d.sig.index_of("z") == 2);
    auto x1 = LaurentPolynomial::monomial(d.sig, 1, "x1");
    auto z = LaurentPolynomial::monomial(d.sig, 1, "z");
    auto dy = LaurentPolynomial::monomial(d.sig, 1, "y");
    CHECK(d.f == x1.pow(2) * z - dy.pow(5));

    // degenerate but legal: m = 1
    CHECK(make_family(FamilySpec::fermat(1, 1, 1)).m == 1);

    CHECK_THROWS_AS(make_family(FamilySpec::fermat(0, 5, 1)), std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec::fermat(2, 5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec::danielewski(0, 5, 1)), std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec::danielewski(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("catalog entries regenerate bit-exactly from their parameters") {
    for (i64 ell : {1, 3, 7}) {
        auto a = make_family(FamilySpec::fermat(2, 5, ell));
        auto b = make_family(FamilySpec::fermat(2, 5, ell));
        CHECK(a.defining == b.defining);
        CHECK(a.f == b.f);
    }
    auto a = make_family(FamilySpec::danielewski(2, 7, 3));
    auto b = make_family(FamilySpec::danielewski(2, 7, 3));
    CHECK(a.defining == b.defining);
    CHECK(a.action.weights == std::vector<i64>{1, 1, 1, 3});
}

TEST_CASE("genus of the smooth model") {
    CHECK(genus(2, 3) == 1);
    CHECK(genus(2, 5) == 2);
    CHECK(genus(3, 5) == 4);
    CHECK(genus(1, 1) == 0);
    CHECK(genus(1, 7) == 0);
    CHECK_THROWS_AS(genus(2, 4), std::domain_error);
    CHECK_THROWS_AS(genus(0, 3), std::domain_error);
}

TEST_CASE("irreducibility flag agrees with a lattice-point oracle") {
    // x^p + y^q is irreducible over an algebraically closed field exactly
    // when the Newton segment from (p,0) to (0,q) is primitive, i.e. has
    // no interior lattice points. Count them by brute force.
    auto segment_is_primitive = [](i64 p, i64 q) {
        int interior = 0;
        for (i64 a = 1; a < p; ++a)
            if ((a * q) % p == 0) ++interior; // (p-a, a*q/p) on the segment
        return interior == 0;
    };
    for (i64 p = 1; p <= 7; ++p)
        for (i64 q = 1; q <= 7; ++q)
            CHECK(make_family(FamilySpec::fermat(p, q, 1)).irreducible_f ==
                  segment_is_primitive(p, q));
}

TEST_CASE("canonical fibration specs exist only for the three weight-6 residues") {
    CHECK(canonical_fibration_spec(2, 3, 1) == FibrationSpec{2, 0, 1});
    CHECK(canonical_fibration_spec(2, 3, 2) == FibrationSpec{1, 0, 1});
    CHECK(canonical_fibration_spec(2, 3, 3) == FibrationSpec{0, 1, 1});
    CHECK_FALSE(canonical_fibration_spec(2, 3, 4).has_value());
    CHECK_FALSE(canonical_fibration_spec(2, 5, 1).has_value());
}

TEST_CASE("scan_family surfaces the documented counterexample pairs") {
    auto fs = scan_family(FamilySpec::fermat(2, 5, 1), 3, 10, 1);
    CHECK(fs.rows.size() == 3); // (1,2), (1,3), (2,3)
    auto fp = fs.counterexamples();
    CHECK(std::set<std::pair<i64, i64>>(fp.begin(), fp.end()) ==
          std::set<std::pair<i64, i64>>{{1, 3}});
    for (const auto& row : fs.rows) {
        bool same_gcd = gcd64(row.ell, 10) == gcd64(row.ellPrime, 10);
        CHECK((row.cylinder_status == "verified") == same_gcd);
        if (row.cylinder) CHECK(row.cylinder->report.verified());
    }

    auto ds = scan_family(FamilySpec::danielewski(1, 5, 1), 4, 10, 1);
    CHECK(ds.rows.size() == 6);
    auto dp = ds.counterexamples();
    CHECK(std::set<std::pair<i64, i64>>(dp.begin(), dp.end()) ==
          std::set<std::pair<i64, i64>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});

    CHECK_THROWS_AS(scan_family(FamilySpec::fermat(2, 5, 1), 0, 10, 1), std::domain_error);
}

TEST_CASE("rationals and polynomials survive a JSON round trip") {
    Rational big(Integer("123456789012345678901234567891"), Integer(7));
    big.canonicalize();
    CHECK(rational_from_json(rational_to_json(big)) == big);
    CHECK(rational_to_json(Rational(3, 2)).at("num") == 3);
    CHECK(rational_to_json(big).at("num").is_string());

    auto h = make_family(FamilySpec::fermat(2, 5, 3));
    auto p = h.defining * h.defining - h.f;
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    CHECK(polynomial_from_json(polynomial_to_json(LaurentPolynomial::zero(h.sig))) ==
          LaurentPolynomial::zero(h.sig));
}

TEST_CASE("maps reload from JSON and verify to the same verdict") {
    auto r = build_cylinder_iso(make_family(FamilySpec::fermat(2, 5, 1)), 1, 3, "u", 10, 1);
    auto j = map_to_json(r.map);
    auto reloaded = map_from_json(j);
    CHECK(reloaded == r.map);
    CHECK(verify_map(reloaded, 10, 1).verified());

    // a corrupted reload is refuted, not silently accepted
    auto bad = j;
    bad["images"][0]["exponents"][r.map.source.sig.index_of("u")] = -4;
    CHECK(verify_map(map_from_json(bad), 10, 1).verdict ==
          VerificationReport::Verdict::refuted);
}

TEST_CASE("certificates round trip through JSON") {
    for (auto c : {certify_fermat_noniso(2, 5, 3), certify_fermat_noniso(2, 5, 9),
                   certify_danielewski_noniso(1, 5, 1, 2),
                   certify_danielewski_noniso(1, 5, 1, 4)}) {
        auto back = certificate_from_json(certificate_to_json(c));
        CHECK(back.family == c.family);
        CHECK(back.verdict == c.verdict);
        CHECK(back.parameters == c.parameters);
        CHECK(back.annotations == c.annotations);
        REQUIRE(back.checks.size() == c.checks.size());
        for (std::size_t i = 0; i < c.checks.size(); ++i) {
            CHECK(back.checks[i].description == c.checks[i].description);
            CHECK(back.checks[i].status == c.checks[i].status);
        }
    }
}

TEST_CASE("artifacts are content-addressed and reloadable") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "laurent-artifact-test";
    fs::create_directories(dir);

    auto r = build_congruent_iso(make_family(FamilySpec::fermat(2, 5, 13)), 3, 10, 1);
    auto j = recipe_to_json(r);
    CHECK(j.at("schema_version") == kSchemaVersion);

    auto path = write_artifact(j, "recipe", dir.string());
    CHECK(path == write_artifact(j, "recipe", dir.string())); // deterministic name
    CHECK(path.find("recipe-") != std::string::npos);
    CHECK(path.size() >= 5 + 16); // 16 hex digits + ".json"
    CHECK(read_artifact(path) == j);
    auto reloaded = map_from_json(read_artifact(path).at("map"));
    CHECK(reloaded == r.map);

    // different content, different hash
    auto r2 = build_congruent_iso(make_family(FamilySpec::fermat(2, 5, 23)), 3, 10, 1);
    CHECK(content_hash(recipe_to_json(r2)) != content_hash(j));

    CHECK(resolve_out_dir("/explicit") == "/explicit");
    setenv("LAURENT_OUT_DIR", dir.c_str(), 1);
    CHECK(resolve_out_dir("") == dir.string());
    unsetenv("LAURENT_OUT_DIR");
    CHECK(resolve_out_dir("") == ".");

    fs::remove_all(dir);
}

TEST_CASE("hypersurfaces and fiber reports serialize") {
    auto h = make_family(FamilySpec::danielewski(1, 5, 2));
    auto back = hypersurface_from_json(hypersurface_to_json(h));
    CHECK(back.defining == h.defining);
    CHECK(back.ell == h.ell);
    CHECK(back.action.weights == h.action.weights);
    CHECK(back.family.kind == FamilyTag::Kind::danielewski);

    auto fr = degenerate_fibers(2, 3, 1, {2, 0, 1});
    REQUIRE(fr);
    auto j = fiber_report_to_json(*fr);
    CHECK(j.at("multiset") == std::vector<i64>{2, 3});
    CHECK(j.at("spec") == "x^2t");
}
