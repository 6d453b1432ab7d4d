#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithmon/padic.hpp"

#include "arithmon/arith.hpp"

#include "support/generators.hpp"

#include <algorithm>
#include <memory>
#include <vector>

using namespace arithmon;

TEST_CASE("multiplicity of a prime in a natural") {
    CHECK(ord(2, 48) == Natural(4));
    CHECK((Natural(48) % Natural::pow(2, 4)).is_zero());
    CHECK_FALSE((Natural(48) % Natural::pow(2, 5)).is_zero());
    CHECK(ord(2, 1) == Natural(0));
    CHECK(ord(3, 2) == Natural(0));
    CHECK(ord(5, 250) == Natural(3));
    CHECK_THROWS_AS(ord(4, 8), std::domain_error);
    CHECK_THROWS_AS(ord(1, 8), std::domain_error);
    CHECK_THROWS_AS(ord(2, 0), std::domain_error);
}

TEST_CASE("norm and distance") {
    CHECK(norm(2, 48) == Rational(1, 16));
    CHECK(norm(2, 0) == Rational(0));
    CHECK(norm(2, 1) == Rational(1));
    CHECK(norm(3, 7) == Rational(1));
    CHECK(norm(7, 0) == Rational(0));
    CHECK_THROWS_AS(norm(6, 3), std::domain_error);

    CHECK(distance(2, 1, 3) == Rational(1, 2));
    CHECK(distance(2, 0, 48) == Rational(1, 16));
    CHECK(distance(5, 9, 9) == Rational(0));

    testsup::Rng rng(5001);
    for (int i = 0; i < 600; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[testsup::pick(
            rng, 0, 3)];
        Natural a = testsup::pick(rng, 0, 5000);
        Natural b = testsup::pick(rng, 0, 5000);
        Natural c = testsup::pick(rng, 0, 5000);
        CHECK(distance(p, a, b) == distance(p, b, a));
        CHECK((distance(p, a, b) == Rational(0)) == (a == b));
        // Non-Archimedean triangle inequality.
        CHECK(distance(p, a, c) <=
              std::max(distance(p, a, b), distance(p, b, c)));
    }
}

TEST_CASE("the norm recovered from divide-by-power maps") {
    // The defined divide maps at 48 over base 2 produce 48, 24, 12, 6,
    // 3 and stop; the least over 48 is the norm.
    CHECK(apply(generator(16, 0), 48) == Natural(3));
    CHECK_FALSE(apply(generator(32, 0), 48).has_value());
    CHECK(norm_via_polycyclic(2, 48) == Rational(3, 48));
    CHECK(norm_via_polycyclic(2, 48) == Rational(1, 16));
    CHECK(norm_via_polycyclic(3, 18) == Rational(1, 9));
    CHECK_THROWS_AS(norm_via_polycyclic(2, 0), std::domain_error);
    CHECK_THROWS_AS(norm_via_polycyclic(9, 5), std::domain_error);

    for (std::uint64_t p : {2, 3, 5, 7})
        for (std::uint64_t n = 1; n <= 2000; ++n)
            CHECK(norm_via_polycyclic(p, n) == norm(p, n));
}

TEST_CASE("digit streams") {
    CantorPoint z = CantorPoint::constant_zero(5);
    CHECK(z.prime() == Natural(5));
    for (std::uint64_t i = 0; i < 40; ++i) CHECK(z.digit(i) == 0);

    CantorPoint w = CantorPoint::from_word(2, {1, 0, 1});
    CHECK(w.digit(0) == 1);
    CHECK(w.digit(1) == 0);
    CHECK(w.digit(2) == 1);
    CHECK(w.digit(3) == 0);  // zero tail
    CHECK(w.digit(1000) == 0);
    CHECK(w.order() == DigitOrder::msb_first);
    CHECK_THROWS_AS(CantorPoint::from_word(2, {2}), std::domain_error);
    CHECK_THROWS_AS(CantorPoint::from_word(4, {0}), std::domain_error);

    CantorPoint s = CantorPoint::from_stream(
        3, [](std::uint64_t i) { return static_cast<std::uint32_t>(i % 3); },
        10);
    CHECK(s.digit(4) == 1);
    CHECK_THROWS_AS(s.digit(10), std::domain_error);

    CantorPoint bad = CantorPoint::from_stream(
        2, [](std::uint64_t) { return std::uint32_t{7}; }, 10);
    CHECK_THROWS_AS(bad.digit(0), std::domain_error);
}

TEST_CASE("digit words of naturals") {
    CantorPoint a = cant(2, 6);
    CHECK(a.order() == DigitOrder::msb_first);
    CHECK(a.digit(0) == 1);
    CHECK(a.digit(1) == 1);
    CHECK(a.digit(2) == 0);
    CHECK(a.digit(3) == 0);

    CantorPoint b = cant(2, 6, DigitOrder::lsb_first);
    CHECK(b.order() == DigitOrder::lsb_first);
    CHECK(b.digit(0) == 0);
    CHECK(b.digit(1) == 1);
    CHECK(b.digit(2) == 1);
    CHECK(b.digit(3) == 0);

    CantorPoint c = cant(3, 5);
    CHECK(c.digit(0) == 1);
    CHECK(c.digit(1) == 2);
    CHECK(c.digit(2) == 0);

    CHECK(cant(2, 1).digit(0) == 1);
    CHECK_THROWS_AS(cant(2, 0), std::domain_error);
    CHECK_THROWS_AS(cant(4, 3), std::domain_error);
}

TEST_CASE("stream evaluation: pinned values") {
    CHECK(eval_gamma(cant(2, 1), 3) == Rational(1, 3));
    CHECK(eval_gamma(cant(2, 3), 7) == Rational(1, 7));
    CHECK(eval_gamma(cant(2, 1), 1) == Rational(0));
    CHECK(eval_gamma(CantorPoint::constant_zero(2), 1) == Rational(1));
    CHECK_THROWS_AS(eval_gamma(cant(2, 1), 0), std::domain_error);

    // The digit order genuinely matters.
    CHECK(eval_gamma(cant(2, 6, DigitOrder::msb_first), 6) == Rational(0));
    CHECK(eval_gamma(cant(2, 6, DigitOrder::lsb_first), 6) == Rational(1, 2));
}

TEST_CASE("stream evaluation at the constant-zero point is the norm") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        CantorPoint z = CantorPoint::constant_zero(p);
        for (std::uint64_t n = 1; n <= 2000; ++n)
            CHECK(eval_gamma(z, n) == norm(p, n));
    }
}

TEST_CASE("stream evaluation never exceeds one") {
    testsup::Rng rng(5002);
    for (int i = 0; i < 400; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[testsup::pick(
            rng, 0, 2)];
        std::uint64_t a = testsup::pick(rng, 1, 400);
        std::uint64_t n = testsup::pick(rng, 1, 400);
        auto order = testsup::pick(rng, 0, 1) == 0 ? DigitOrder::msb_first
                                                   : DigitOrder::lsb_first;
        CHECK(eval_gamma(cant(p, a, order), n) <= Rational(1));
    }
}

TEST_CASE("stream evaluation inspects only log-many digits") {
    // Serve the stream through a counter capped at floor(log_p n) + 1;
    // any extra inspection trips the stream's own bound.
    testsup::Rng rng(5003);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[testsup::pick(
            rng, 0, 2)];
        std::uint64_t n = testsup::pick(rng, 1, 100000);
        std::uint64_t allowed = 1;
        for (Natural pw = p; pw <= Natural(n); pw *= Natural(p)) ++allowed;

        auto counted = std::make_shared<std::uint64_t>(0);
        CantorPoint s = CantorPoint::from_stream(
            p,
            [counted, p, &rng](std::uint64_t) {
                ++*counted;
                return static_cast<std::uint32_t>(testsup::pick(rng, 0, p - 1));
            },
            allowed);
        CHECK_NOTHROW(eval_gamma(s, n));
        CHECK(*counted <= allowed);
    }
}
