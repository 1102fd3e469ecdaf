#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include <json.hpp>

#include "expsieve/census.hpp"
#include "expsieve/report.hpp"

using namespace expsieve;
using namespace expsieve::report;

TEST_CASE("format_double gives 12 significant digits in scientific form") {
    CHECK(format_double(1.0) == "1.00000000000e+00");
    CHECK(format_double(2719685.673001152) == "2.71968567300e+06");
    CHECK(format_double(-0.5) == "-5.00000000000e-01");
    CHECK(format_double(0.0) == "0.00000000000e+00");
}

TEST_CASE("parse_format") {
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("xml"), validation_error);
}

TEST_CASE("census CSV round trip") {
    std::vector<census::PrimeRecord> records;
    census::PrimeRecord a;
    a.p = 11;
    a.t_p = 10;
    a.tau_pm1 = 4;
    a.in_E = true;
    a.in_Eprime = false;
    records.push_back(a);
    census::PrimeRecord b;
    b.p = 13;
    b.t_p = 12;
    b.tau_pm1 = 6;
    b.in_E = true;
    b.in_Eprime = true;
    records.push_back(b);

    const auto text = census_csv(records);
    CHECK(text == "p,t_p,tau_pm1,in_E,in_Eprime\n11,10,4,1,0\n13,12,6,1,1\n");
    const auto back = parse_census_csv(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].p == 11);
    CHECK(back[1].in_Eprime);
    CHECK_THROWS_AS(parse_census_csv("wrong,header\n"), validation_error);
    CHECK_THROWS_AS(parse_census_csv("p,t_p,tau_pm1,in_E,in_Eprime\n11,10\n"), validation_error);
}

TEST_CASE("scan CSV round trip preserves floats to 12 digits") {
    expsum::SumScanResult r;
    r.p = 19;
    r.t_p = 18;
    r.max_abs = 2.626181410369518;
    r.argmax_a = 10;
    r.exact = true;
    r.strategy = "direct";
    r.hbk = 4.358898943540674;
    r.trivial_bound = 4.0;
    const auto text = scan_csv({r});
    const auto back = parse_scan_csv(text);
    REQUIRE(back.size() == 1);
    CHECK(back[0].p == 19);
    CHECK(back[0].argmax_a == 10);
    CHECK(back[0].max_abs == doctest::Approx(r.max_abs).epsilon(1e-11));
    CHECK(back[0].hbk == doctest::Approx(r.hbk).epsilon(1e-11));
    // reserialization is a fixed point once truncated to 12 digits
    CHECK(scan_csv(back) == text);
}

TEST_CASE("verify CSV round trip and zero padding") {
    census::VerificationReport rep;
    rep.lhs = 758.2539261615334;
    rep.rhs = 2719685.673001152;
    rep.ratio = rep.lhs / rep.rhs;
    rep.parts = {{"term1", 100.0}, {"term2", 71.9685673001152}};
    rep.exact = true;
    const auto text = verify_csv(rep);
    const auto back = parse_verify_csv(text);
    CHECK(back.lhs == doctest::Approx(rep.lhs).epsilon(1e-11));
    CHECK(back.parts[2].second == 0.0);  // absent third part emitted as zero
    CHECK(back.exact);
    CHECK(verify_csv(back) == text);
}

TEST_CASE("emitted JSON parses and mirrors the CSV fields") {
    std::vector<census::PrimeRecord> records;
    census::PrimeRecord a;
    a.p = 11;
    a.t_p = 10;
    a.tau_pm1 = 4;
    a.in_E = true;
    records.push_back(a);
    const auto parsed = nlohmann::json::parse(census_json(records));
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["p"] == 11);
    CHECK(parsed[0]["t_p"] == 10);
    CHECK(parsed[0]["in_E"] == true);
    CHECK(parsed[0]["in_Eprime"] == false);

    census::VerificationReport rep;
    rep.lhs = 1.5;
    rep.rhs = 3.0;
    rep.ratio = 0.5;
    rep.parts = {{"term1", 1.0}, {"term2", 2.0}, {"term3", 0.0}};
    const auto vj = nlohmann::json::parse(verify_json(rep));
    CHECK(vj["lhs"] == doctest::Approx(1.5));
    CHECK(vj["ratio"] == doctest::Approx(0.5));
    CHECK(vj["exact"] == true);

    census::CorollaryResult cres;
    cres.threshold = 824.26;
    cres.violating = {11, 13};
    cres.fraction = 0.5;
    const auto cj = nlohmann::json::parse(corollary_json(cres));
    CHECK(cj["violating"].size() == 2);
    CHECK(cj["violating"][0] == 11);

    expsum::SumScanResult sr;
    sr.p = 7;
    sr.strategy = "sampled(64)";
    const auto sj = nlohmann::json::parse(scan_json({sr}));
    CHECK(sj[0]["strategy"] == "sampled(64)");
}

TEST_CASE("pairs CSV renders exact rationals") {
    const auto result = pairs::optimize_f(2, 2);
    const auto text = pairs_csv(result);
    CHECK(text.find("1/8,5/8,15/14,konyagin(2)") != std::string::npos);
    CHECK(text.rfind("alpha,beta,f,provenance\n", 0) == 0);
}

TEST_CASE("lsieve, discrepancy, suggest, corollary, erdos-murty, titchmarsh schemas") {
    CHECK(lsieve_csv(4.0, 10.0, 3, 1).rfind("lhs,rhs,ratio,K,T\n", 0) == 0);
    CHECK(discrepancy_csv(4, 0.25, 0.25, 0.25, 3).rfind("N,star,extreme,erdos_turan,H\n", 0) ==
          0);
    census::SuggestedParams sp;
    sp.T = 329617;
    sp.L = 1.0;
    sp.Delta = 2.0;
    CHECK(suggest_csv(sp).find("329617,") != std::string::npos);
    census::CorollaryResult cres;
    cres.violating = {3, 5, 7};
    CHECK(corollary_csv(cres).find("3;5;7") != std::string::npos);
    census::ErdosMurtyResult er;
    er.count = 3;
    CHECK(erdos_murty_csv(er).rfind("count,bound,ratio,divisibility_ok\n", 0) == 0);
    CHECK(titchmarsh_csv(10.0, 1.0).rfind("X,ratio\n", 0) == 0);
}

TEST_CASE("write_file and read_file round trip, io errors typed") {
    const std::string path = "report_roundtrip.tmp";
    write_file(path, "a,b\n1,2\n");
    CHECK(read_file(path) == "a,b\n1,2\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_file("no_such_dir/x.csv", "x"), io_error);
    CHECK_THROWS_AS(read_file("missing_file.tmp"), io_error);
}
