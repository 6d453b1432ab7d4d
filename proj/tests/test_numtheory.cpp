#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithmon/numtheory.hpp"

#include "support/brute.hpp"
#include "support/generators.hpp"

#include <sstream>

using namespace arithmon;

TEST_CASE("natural arithmetic is checked, not wrapping") {
    CHECK(Natural(7) - Natural(3) == Natural(4));
    CHECK_THROWS_AS(Natural(3) - Natural(7), std::domain_error);
    CHECK_THROWS_AS(Natural(1) / Natural(0), std::domain_error);
    CHECK_THROWS_AS(Natural(1) % Natural(0), std::domain_error);
    CHECK_THROWS_AS(Natural(Integer(-1)), std::domain_error);
    CHECK(Natural::parse("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(Natural::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Natural::parse("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Natural::parse("-3"), std::invalid_argument);
    CHECK(Natural::pow(3, 5) == Natural(243));
    CHECK(Natural::pow(7, 0) == Natural(1));
    CHECK(abs_diff(3, 10) == Natural(7));
    CHECK(abs_diff(10, 3) == Natural(7));
    CHECK(divmod(Natural(17), Natural(5)) ==
          std::pair<Natural, Natural>(3, 2));
}

TEST_CASE("gcd") {
    for (std::uint64_t n = 1; n <= 30; ++n) CHECK(gcd(1, n) == Natural(1));
    CHECK(gcd(6, 4) == Natural(testsup::brute_gcd(6, 4)));
    CHECK(gcd(6, 4) == Natural(2));
    for (std::uint64_t p : {2, 3, 5}) {
        Natural power = p;
        for (int k = 1; k <= 4; ++k) {
            CHECK(gcd(p, power) == Natural(p));
            power *= Natural(p);
        }
    }
    CHECK(gcd(0, 5) == Natural(5));
    CHECK_THROWS_AS(gcd(0, 0), std::domain_error);

    testsup::Rng rng(1001);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t m = testsup::pick(rng, 1, 500);
        std::uint64_t n = testsup::pick(rng, 1, 500);
        CHECK(gcd(m, n) == Natural(testsup::brute_gcd(m, n)));
    }
}

TEST_CASE("lcm") {
    for (std::uint64_t n = 1; n <= 30; ++n) CHECK(lcm(1, n) == Natural(n));
    CHECK(lcm(4, 6) == Natural(testsup::brute_lcm(4, 6)));
    CHECK(lcm(4, 6) == Natural(12));
    CHECK(lcm(3, 5) == Natural(15));
    CHECK_THROWS_AS(lcm(0, 3), std::domain_error);
    CHECK_THROWS_AS(lcm(3, 0), std::domain_error);
}

TEST_CASE("gcd times lcm is the product") {
    for (std::uint64_t m = 1; m <= 60; ++m)
        for (std::uint64_t n = 1; n <= 60; ++n)
            CHECK(gcd(m, n) * lcm(m, n) == Natural(m) * Natural(n));
}

TEST_CASE("extended gcd produces a Bezout identity") {
    auto verify = [](const Natural& a, const Natural& b) {
        XgcdResult r = extended_gcd(a, b);
        CHECK(r.g == gcd(a, b));
        CHECK(r.x * a.value() + r.y * b.value() == r.g.value());
    };
    XgcdResult unit = extended_gcd(1, 77);
    CHECK(unit.g == Natural(1));
    CHECK(unit.x == Integer(1));
    CHECK(unit.y == Integer(0));
    verify(6, 4);
    verify(3, 5);
    verify(0, 9);
    verify(9, 0);
    CHECK_THROWS_AS(extended_gcd(0, 0), std::domain_error);

    testsup::Rng rng(1002);
    for (int i = 0; i < 500; ++i)
        verify(testsup::pick(rng, 0, 10000), testsup::pick(rng, 1, 10000));
}

TEST_CASE("primality by trial division") {
    for (std::uint64_t n = 0; n <= 200; ++n)
        CHECK(is_prime(n) == testsup::brute_is_prime(n));
    CHECK(is_prime(Natural::parse("2147483647")));  // 2^31 - 1
}

TEST_CASE("congruence class construction and printing") {
    CongruenceClass c(12, 10);
    CHECK(c.modulus() == Natural(12));
    CHECK(c.residue() == Natural(10));
    CHECK(c.str() == "12N+10");
    CHECK(CongruenceClass(12, 0).str() == "12N");
    CHECK(CongruenceClass::all().str() == "N");
    CHECK(CongruenceClass::all().is_full());
    CHECK_THROWS_AS(CongruenceClass(0, 0), std::domain_error);
    CHECK_THROWS_AS(CongruenceClass(3, 3), std::domain_error);
    CHECK_THROWS_AS(CongruenceClass(3, 7), std::domain_error);

    std::ostringstream os;
    os << c;
    CHECK(os.str() == "12N+10");
}

TEST_CASE("membership is a remainder test") {
    for (std::uint64_t n = 0; n < 40; ++n)
        CHECK(member(CongruenceClass::all(), n));
    CHECK(member(CongruenceClass(3, 1), 7));
    CHECK_FALSE(member(CongruenceClass(3, 1), 6));
    CHECK(CongruenceClass(3, 1).contains(1));
    CHECK_FALSE(CongruenceClass(3, 1).contains(0));
}

TEST_CASE("intersection: pinned examples") {
    auto meet = intersect(CongruenceClass(2, 0), CongruenceClass(3, 0));
    REQUIRE(meet.has_value());
    CHECK(*meet == CongruenceClass(6, 0));

    CHECK_FALSE(intersect(CongruenceClass(2, 1), CongruenceClass(4, 0)));

    // Referee first: enumerate the common members below 4*lcm and read
    // off the class they form.
    auto common = testsup::brute_common_members(3, 1, 4, 2, 48);
    REQUIRE(common.size() >= 2);
    CHECK(common.front() == 10);
    CHECK(common[1] - common[0] == 12);
    meet = intersect(CongruenceClass(3, 1), CongruenceClass(4, 2));
    REQUIRE(meet.has_value());
    CHECK(*meet == CongruenceClass(12, 10));
}

TEST_CASE("intersection agrees with brute-force sets, exhaustively") {
    // All moduli up to 30, all residues: compare member lists up to
    // 4*lcm against the closed-form class (or emptiness).
    for (std::uint64_t a = 1; a <= 30; ++a) {
        for (std::uint64_t c = 1; c <= 30; ++c) {
            std::uint64_t limit = 4 * testsup::brute_lcm(a, c);
            for (std::uint64_t b = 0; b < a; ++b) {
                for (std::uint64_t d = 0; d < c; ++d) {
                    auto brute = testsup::brute_common_members(a, b, c, d, limit);
                    auto meet =
                        intersect(CongruenceClass(a, b), CongruenceClass(c, d));
                    if (!meet) {
                        if (!brute.empty()) {
                            CAPTURE(a); CAPTURE(b); CAPTURE(c); CAPTURE(d);
                            FAIL_CHECK("closed form empty, brute force not");
                        }
                        continue;
                    }
                    auto closed =
                        testsup::progression_members(meet->modulus().to_u64(),
                                                     meet->residue().to_u64(),
                                                     limit);
                    if (brute != closed) {
                        CAPTURE(a); CAPTURE(b); CAPTURE(c); CAPTURE(d);
                        FAIL_CHECK("member lists differ");
                    }
                }
            }
        }
    }
}

TEST_CASE("intersection laws") {
    testsup::Rng rng(1003);
    for (int i = 0; i < 2000; ++i) {
        CongruenceClass c1 = testsup::random_class(rng, 60);
        CongruenceClass c2 = testsup::random_class(rng, 60);
        auto ab = intersect(c1, c2);
        auto ba = intersect(c2, c1);
        CHECK(ab == ba);  // commutative
        if (ab) {
            // Modulus is exactly the lcm; witness is canonical (below it).
            CHECK(ab->modulus() == lcm(c1.modulus(), c2.modulus()));
            CHECK(ab->residue() < ab->modulus());
            CHECK(c1.contains(ab->residue()));
            CHECK(c2.contains(ab->residue()));
        }
        CHECK(intersect(c1, CongruenceClass::all()) == c1);
    }
}
