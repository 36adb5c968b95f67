#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tilepack/field.hpp"

using namespace tilepack;
using oracle::fe;
using oracle::fe2;

TEST_CASE("rational strings are canonical") {
    CHECK(rational_to_string(rational_from_string("2/4")) == "1/2");
    CHECK(rational_to_string(rational_from_string("-3/-6")) == "1/2");
    CHECK(rational_to_string(rational_from_string("7")) == "7/1");
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("a/b"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
}

TEST_CASE("arithmetic matches the defining relations") {
    FieldElement sqrt2 = FieldElement::sqrt_d(2);
    CHECK((fe2("1", "1") * fe2("1", "-1")) == fe("-1"));
    CHECK(sqrt2 * sqrt2 == fe("2"));
    CHECK(fe("3/2") + fe2("1/2", "2") == fe2("2", "2"));
    CHECK((fe2("1", "1") / fe2("1", "1")) == fe("1"));
    CHECK(fe2("0", "1") / fe2("0", "1") == fe("1"));
}

TEST_CASE("division and tag errors") {
    CHECK_THROWS_AS(fe("1") / fe("0"), FieldError);
    CHECK_THROWS_AS(fe2("0", "1", 2) + fe2("0", "1", 3), FieldError);
    CHECK_THROWS_AS(FieldElement(Rational(1), Rational(1), 4), FieldError); // 4 is not squarefree
    CHECK_THROWS_AS(FieldElement(Rational(1), Rational(1), 0), FieldError);
}

TEST_CASE("exact sign") {
    CHECK(fe2("1", "-1").sign() == -1);
    CHECK(fe2("3/2", "-1").sign() == 1);
    CHECK(fe("0").sign() == 0);
    CHECK(fe2("0", "1").sign() == 1);
    CHECK(fe2("-10", "7").sign() == -1); // 7*sqrt(2) = 9.899...
    CHECK(fe2("-9", "7").sign() == 1);
}

TEST_CASE("sign agrees with interval evaluation whenever it is conclusive") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
        FieldElement x = oracle::random_element(rng);
        int approx = oracle::interval_sign(x);
        if (approx != 0) CHECK(x.sign() == approx);
    }
}

TEST_CASE("floor on the documented cases") {
    CHECK(fe2("0", "1").floor() == 1);
    CHECK(fe("-1/2").floor() == -1);
    // floor(9/4 + sqrt(2)) = 3, pinned by the two sign tests
    FieldElement x = fe2("9/4", "1");
    CHECK((x - fe("3")).sign() >= 0);
    CHECK((fe("4") - x).sign() > 0);
    CHECK(x.floor() == 3);
    CHECK(fe2("-9/4", "-1").floor() == -4);
    CHECK(fe("3").floor() == 3);
}

TEST_CASE("floor satisfies z <= x < z + 1 on random elements") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 2000; ++i) {
        FieldElement x = oracle::random_element(rng);
        Integer z = x.floor();
        CHECK((x - FieldElement(Rational(z))).sign() >= 0);
        CHECK((x - FieldElement(Rational(z + 1))).sign() < 0);
    }
}

TEST_CASE("field axioms hold exactly on random elements") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 400; ++i) {
        FieldElement a = oracle::random_element(rng);
        FieldElement b = oracle::random_element(rng);
        FieldElement c = oracle::random_element(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == fe("1"));
    }
}

TEST_CASE("nearest integer rounding") {
    CHECK(fe("1/2").nearest() == 1);
    CHECK(fe("-1/2").nearest() == 0);
    CHECK(fe2("0", "1").nearest() == 1);  // 1.414...
    CHECK(fe2("0", "-1").nearest() == -1);
}

TEST_CASE("exact square roots inside the field") {
    auto r = field_sqrt(fe2("3", "2"), 2); // (1 + sqrt 2)^2
    REQUIRE(r.has_value());
    CHECK(*r == fe2("1", "1"));
    auto s = field_sqrt(fe("2"), 2);
    REQUIRE(s.has_value());
    CHECK(*s == fe2("0", "1"));
    CHECK(field_sqrt(fe("9/4"), 2).value() == fe("3/2"));
    CHECK(!field_sqrt(fe("3"), 2).has_value());
    CHECK(!field_sqrt(fe2("-3", "-2"), 2).has_value());
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; ++i) {
        FieldElement a = oracle::random_element(rng);
        auto root = field_sqrt(a * a, 2);
        REQUIRE(root.has_value());
        CHECK(*root * *root == a * a);
    }
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(2));
    CHECK(is_squarefree(3));
    CHECK(is_squarefree(10));
    CHECK(!is_squarefree(4));
    CHECK(!is_squarefree(12));
    CHECK(!is_squarefree(0));
}
