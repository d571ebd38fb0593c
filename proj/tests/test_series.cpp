#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "theta/series.hpp"

using namespace theta;
using series::Parity;
using series::ParitySeries;

TEST_CASE("build_u_series: leading coefficients") {
    ParitySeries u0 = series::build_u_series(0);
    CHECK(u0.parity() == Parity::odd);
    CHECK(u0.coeff(1) == Rational(1));

    ParitySeries u1 = series::build_u_series(1);
    CHECK(u1.coeff(1) == Rational(1));
    CHECK(u1.coeff(3) == Rational(1));  // u(1)/3! = 6/6

    ParitySeries u2 = series::build_u_series(2);
    CHECK(u2.coeff(5) == Rational(32, 15));  // 256/120
    CHECK(u2.coeff(2) == Rational(0));       // even exponents vanish
    CHECK(u2.truncation() == 5);
    CHECK_THROWS_AS(u2.coeff(7), std::out_of_range);
}

TEST_CASE("series multiplication tracks truncation honestly") {
    ParitySeries u = series::build_u_series(3);  // valid through z^7
    ParitySeries sq = u.multiply(u);
    CHECK(sq.parity() == Parity::even);
    CHECK(sq.min_degree() == 2);
    CHECK(sq.truncation() == 8);  // one even step past the inputs, no further
    CHECK(sq.coeff(2) == Rational(1));
    CHECK(sq.coeff(4) == Rational(2));
    CHECK(sq.coeff(6) == Rational(79, 15));
    CHECK_THROWS_AS(sq.coeff(10), std::out_of_range);

    ParitySeries capped = u.multiply(u, 4);
    CHECK(capped.truncation() == 4);
    CHECK_THROWS_AS(capped.coeff(6), std::out_of_range);

    ParitySeries quartic = sq.multiply(sq);
    CHECK(quartic.min_degree() == 4);
    CHECK(quartic.coeff(6) == Rational(4));  // 2 * [z^2][z^4]
}

TEST_CASE("series multiplication is commutative and associative on the shared window") {
    ParitySeries u = series::build_u_series(6);
    ParitySeries sq = u.multiply(u, 12);

    ParitySeries ab = u.multiply(sq, 12);   // odd * even
    ParitySeries ba = sq.multiply(u, 12);
    for (long e = 3; e <= std::min(ab.truncation(), ba.truncation()); e += 2)
        REQUIRE(ab.coeff(e) == ba.coeff(e));

    ParitySeries left = u.multiply(u, 12).multiply(sq, 12);
    ParitySeries right = u.multiply(u.multiply(sq, 12), 12);
    for (long e = 4; e <= std::min(left.truncation(), right.truncation()); e += 2)
        REQUIRE(left.coeff(e) == right.coeff(e));
}

TEST_CASE("s-matrix: golden entries and shape") {
    series::SMatrix s = series::build_s_matrix(5);
    CHECK(s.at(1, 1) == 1);
    CHECK(s.at(2, 1) == 24);
    CHECK(s.at(3, 1) == 1896);
    CHECK(s.at(3, 2) == 120);
    CHECK(s.at(4, 1) == 314496);
    CHECK(s.at(4, 2) == 24416);
    CHECK(s.at(4, 3) == 336);
    CHECK(s.at(5, 1) == 89531136);
    for (long n = 1; n <= 5; ++n) {
        CHECK(s.at(n, n) == 1);
        CHECK(s.at(n, n + 3) == 0);  // k > n reads as zero
    }
    CHECK_THROWS_AS(s.at(6, 1), std::out_of_range);
    CHECK_THROWS_AS(s.at(0, 1), std::out_of_range);
}

TEST_CASE("d table: golden values") {
    series::SMatrix s = series::build_s_matrix(6);
    series::DTable d;
    CHECK(d.at(0) == 1);
    d.ensure(6, s);
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == -1);
    CHECK(d.at(3) == 51);
    CHECK(d.at(4) == 849);
    CHECK(d.at(5) == -26199);
    CHECK(d.at(6) == 1341999);
    CHECK_THROWS_AS(d.at(7), std::out_of_range);
    CHECK_THROWS_AS(d.ensure(7, s), std::out_of_range);  // matrix too small
}

TEST_CASE("d table accepts an explicit v table") {
    series::SMatrix s = series::build_s_matrix(5);
    seq::SequenceTable vtab(seq::SequenceTable::Kind::v);
    series::DTable d;
    d.ensure(5, s, vtab);
    CHECK(d.at(5) == -26199);

    seq::SequenceTable utab(seq::SequenceTable::Kind::u);
    series::DTable bad;
    CHECK_THROWS_AS(bad.ensure(2, s, utab), std::logic_error);
}

TEST_CASE("csv export") {
    series::SMatrix s = series::build_s_matrix(2);
    std::ostringstream ms;
    s.write_csv(ms);
    CHECK(ms.str() == "n,k,value\n1,1,1\n2,1,24\n2,2,1\n");

    series::DTable d;
    d.ensure(2, s);
    std::ostringstream ds;
    d.write_csv(ds);
    CHECK(ds.str() == "n,value\n0,1\n1,1\n2,-1\n");
}

TEST_CASE("s-matrix and d-table cache round-trips") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "theta-series-test";
    fs::create_directories(dir);

    series::SMatrix s = series::build_s_matrix(8);
    s.save(dir / "s.cache");
    series::SMatrix back = series::SMatrix::load(dir / "s.cache");
    REQUIRE(back.nmax() == 8);
    for (long n = 1; n <= 8; ++n)
        for (long k = 1; k <= n; ++k) REQUIRE(back.at(n, k) == s.at(n, k));

    series::DTable d;
    d.ensure(8, s);
    d.save(dir / "d.cache");
    series::DTable dback;
    CHECK(dback.seed_from_cache(dir / "d.cache"));
    REQUIRE(dback.high_water() == 8);
    for (long n = 0; n <= 8; ++n) REQUIRE(dback.at(n) == d.at(n));

    fs::remove_all(dir);
}
