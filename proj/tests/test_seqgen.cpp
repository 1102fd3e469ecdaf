#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "expsieve/seqgen.hpp"

using namespace expsieve;
using namespace expsieve::seqgen;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("seqgen_") + name + ".tmp";
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("splitmix64 pinned values") {
    CHECK(splitmix64(1) == 10451216379200822465ULL);
    CHECK(splitmix64(2) == 10905525725756348110ULL);
}

TEST_CASE("identity sequence") {
    const auto s = gen_s(SequenceSpec{}, 10);
    for (u64 n = 0; n < 10; ++n) CHECK(s[n] == n + 1);
}

TEST_CASE("floor_pow_rational exact at integer boundaries") {
    CHECK(floor_pow_rational(8, 1, 3) == 2);
    CHECK(floor_pow_rational(27, 1, 3) == 3);
    CHECK(floor_pow_rational(1024, 1, 2) == 32);
    CHECK(floor_pow_rational(7, 1, 1) == 7);
    CHECK(floor_pow_rational(2, 10, 1) == 1024);
    // 5^(3/2) = 11.18..., 6^(3/2) = 14.69...
    CHECK(floor_pow_rational(5, 3, 2) == 11);
    CHECK(floor_pow_rational(6, 3, 2) == 14);
}

TEST_CASE("prime power sequence at c = 15/14") {
    SequenceSpec spec;
    spec.kind = SequenceSpec::Kind::prime_power;
    spec.c_num = 15;
    spec.c_den = 14;
    const auto s = gen_s(spec, 6);
    // floor(q^(15/14)) for q = 2,3,5,7,11,13
    CHECK(s == std::vector<u64>{2, 3, 5, 8, 13, 15});
}

TEST_CASE("prime power sequence at c = 1 gives the primes") {
    SequenceSpec spec;
    spec.kind = SequenceSpec::Kind::prime_power;
    const auto s = gen_s(spec, 5);
    CHECK(s == std::vector<u64>{2, 3, 5, 7, 11});
}

TEST_CASE("prime power exponent outside [1, 15/14] rejected") {
    SequenceSpec spec;
    spec.kind = SequenceSpec::Kind::prime_power;
    spec.c_num = 16;
    spec.c_den = 14;
    CHECK_THROWS_AS(gen_s(spec, 3), validation_error);
    spec.c_num = 13;
    CHECK_THROWS_AS(gen_s(spec, 3), validation_error);
}

TEST_CASE("file sequence happy path and validation") {
    const auto good = write_temp("good", "1\n3\n9\n27\n");
    SequenceSpec spec;
    spec.kind = SequenceSpec::Kind::file;
    spec.path = good;
    CHECK(gen_s(spec, 4) == std::vector<u64>{1, 3, 9, 27});
    CHECK(gen_s(spec, 2) == std::vector<u64>{1, 3});

    const auto bad = write_temp("bad", "1\n5\n5\n9\n");
    spec.path = bad;
    CHECK_THROWS_AS(gen_s(spec, 4), validation_error);

    const auto nonpos = write_temp("nonpos", "0\n2\n");
    spec.path = nonpos;
    CHECK_THROWS_AS(gen_s(spec, 2), validation_error);

    spec.path = "does_not_exist.tmp";
    CHECK_THROWS_AS(gen_s(spec, 2), io_error);

    spec.path = good;
    CHECK_THROWS_AS(gen_s(spec, 9), validation_error);  // file too short

    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(nonpos.c_str());
}

TEST_CASE("gamma ones") {
    const auto g = gen_gamma(CoefficientSpec{}, 5);
    for (const auto& z : g) CHECK(z == std::complex<double>(1.0, 0.0));
}

TEST_CASE("gamma random is unit modulus, deterministic, schedule free") {
    CoefficientSpec spec;
    spec.kind = CoefficientSpec::Kind::unit_random;
    spec.seed = 1;
    const auto g = gen_gamma(spec, 100);
    for (const auto& z : g) CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-12));
    // pinned first draw: u = splitmix64(2)/2^64
    const double u = 10905525725756348110.0 / 18446744073709551616.0;
    constexpr double two_pi = 6.283185307179586476925286766559;
    CHECK(g[0].real() == doctest::Approx(std::cos(two_pi * u)).epsilon(1e-12));
    const auto again = gen_gamma(spec, 100);
    CHECK(g == again);
    // prefix property: shorter run is a prefix of longer
    const auto prefix = gen_gamma(spec, 10);
    for (int i = 0; i < 10; ++i) CHECK(prefix[i] == g[i]);
}

TEST_CASE("gamma file rejects entries above unit modulus") {
    const auto path = write_temp("gamma", "1 0\n0.5 0.5\n");
    CoefficientSpec spec;
    spec.kind = CoefficientSpec::Kind::file;
    spec.path = path;
    const auto g = gen_gamma(spec, 2);
    CHECK(g[1] == std::complex<double>(0.5, 0.5));

    const auto big = write_temp("gamma_big", "2 0\n");
    spec.path = big;
    CHECK_THROWS_AS(gen_gamma(spec, 1), validation_error);
    std::remove(path.c_str());
    std::remove(big.c_str());
}

TEST_CASE("sparsity report at the critical exponent") {
    // s = [2,3,5]: s_1/1 = 2 dominates; s_3 = 5 > 3^(15/14)
    const auto rep = sparsity_report({2, 3, 5}, 15.0 / 14.0);
    CHECK(rep.max_ratio == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(rep.within_bound);

    const auto identity = sparsity_report({1, 2, 3, 4}, 15.0 / 14.0);
    CHECK(identity.max_ratio <= 1.0 + 1e-12);
    CHECK(identity.within_bound);
}

TEST_CASE("parse_sequence_spec") {
    CHECK(parse_sequence_spec("identity").kind == SequenceSpec::Kind::identity);
    const auto pp = parse_sequence_spec("primepow:15/14");
    CHECK(pp.kind == SequenceSpec::Kind::prime_power);
    CHECK(pp.c_num == 15);
    CHECK(pp.c_den == 14);
    const auto dec = parse_sequence_spec("primepow:1.05");
    CHECK(dec.c_num * 100 == dec.c_den * 105);
    const auto f = parse_sequence_spec("file:some/path.txt");
    CHECK(f.kind == SequenceSpec::Kind::file);
    CHECK(f.path == "some/path.txt");
    CHECK_THROWS_AS(parse_sequence_spec("primepow:2"), validation_error);
    CHECK_THROWS_AS(parse_sequence_spec("unknown"), validation_error);
}

TEST_CASE("parse_coefficient_spec") {
    CHECK(parse_coefficient_spec("ones").kind == CoefficientSpec::Kind::ones);
    const auto r = parse_coefficient_spec("random:42");
    CHECK(r.kind == CoefficientSpec::Kind::unit_random);
    CHECK(r.seed == 42);
    const auto f = parse_coefficient_spec("file:g.txt");
    CHECK(f.kind == CoefficientSpec::Kind::file);
    CHECK_THROWS_AS(parse_coefficient_spec("random:x"), validation_error);
    CHECK_THROWS_AS(parse_coefficient_spec(""), validation_error);
}
