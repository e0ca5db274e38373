#include "tforge/verification.hpp"

#include "tforge/constructions.hpp"
#include "tforge/serialization.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

using namespace tforge;

TEST_CASE("exact integral values") {
    CHECK(exact_xi_integral(2) == rational_make(1, 6));
    CHECK(exact_xi_integral(3) == rational_make(1, 15));
    CHECK(exact_xi_integral(4) == rational_make(17, 630));
    CHECK_THROWS_AS(exact_xi_integral(1), std::domain_error);
    CHECK_THROWS_WITH(exact_xi_integral(20), "enumeration too large");
}

TEST_CASE("exact integral matches the zeta coefficients") {
    for (int n = 2; n <= 10; ++n) {
        BigInt four_n = 1;
        for (int i = 0; i < n; ++i) four_n *= 4;
        CHECK(zeta_even_coefficient(n) * (four_n - 1) == exact_xi_integral(n));
    }
}

TEST_CASE("monte carlo estimates are deterministic") {
    const McEstimate a = mc_xi_integral(3, 5000, 12345);
    const McEstimate b = mc_xi_integral(3, 5000, 12345);
    CHECK(a.estimate == b.estimate);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.samples == 5000);
    CHECK(a.seed == 12345);
    const McEstimate c = mc_xi_integral(3, 5000, 54321);
    CHECK(c.estimate != a.estimate);
    CHECK_THROWS_AS(mc_xi_integral(3, 50, 1), std::domain_error);
}

TEST_CASE("monte carlo estimates land near the exact values") {
    for (int n : {2, 3}) {
        const Rational exact = exact_xi_integral(n);
        const double target = numerator(exact).convert_to<double>() /
                              denominator(exact).convert_to<double>();
        const McEstimate e = mc_xi_integral(n, 200000, 0x5eedcafe + n);
        CHECK(e.standard_error > 0.0);
        CHECK(std::abs(e.estimate - target) < 4.0 * e.standard_error);
    }
}

TEST_CASE("verification suite passes at depth 1") {
    const VerifyReport report = verify_suite(1);
    CHECK(report.all_pass());
    CHECK(report.records.size() > 25);
    for (std::size_t i = 1; i < report.records.size(); ++i)
        CHECK(report.records[i - 1].name <= report.records[i].name);  // sorted by name
    for (const CheckRecord& rec : report.records) {
        CHECK(!rec.name.empty());
        CHECK(rec.elapsed_s >= 0.0);
    }
    CHECK_THROWS_AS(verify_suite(0), std::domain_error);
    CHECK_THROWS_AS(verify_suite(4), std::domain_error);
}

TEST_CASE("forced failure hook flips the report") {
    setenv("TRIANGLE_FORGE_FORCE_VERIFY_FAIL", "1", 1);
    VerifyOptions options;
    options.mc_samples = 1000;  // keep the hook test fast
    const VerifyReport report = verify_suite(1, options);
    unsetenv("TRIANGLE_FORGE_FORCE_VERIFY_FAIL");
    CHECK_FALSE(report.all_pass());
    bool found = false;
    for (const CheckRecord& rec : report.records)
        if (!rec.pass && rec.name.find("forced failure") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("report rendering") {
    VerifyReport report;
    report.records.push_back({"alpha", "n <= 3", "1", "1", true, 0.25});
    report.records.push_back({"beta", "n <= 5", "2", "3", false, 0.5});
    CHECK_FALSE(report.all_pass());

    const std::string plain = render_report(report, OutputFormat::Plain);
    CHECK(plain.find("PASS  alpha") != std::string::npos);
    CHECK(plain.find("FAIL  beta") != std::string::npos);
    CHECK(plain.find("1 of 2 checks failed") != std::string::npos);

    const auto json = report_json(report);
    REQUIRE(json.is_array());
    REQUIRE(json.size() == 2);
    CHECK(json[0]["name"] == "alpha");
    CHECK(json[0]["pass"] == true);
    CHECK(json[1]["expected"] == "2");
    CHECK(json[1]["actual"] == "3");

    const std::string csv = render_report(report, OutputFormat::Csv);
    CHECK(csv.find("alpha,n <= 3,pass") != std::string::npos);
}
