#include <doctest.h>

#include "grassclique/gf.hpp"

using namespace grassclique;

namespace {
const int kSupportedOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};
}

TEST_CASE("basic arithmetic matches hand values") {
    const FieldPtr f4 = Field::make(4);
    CHECK(f4->add(2, 3) == 1);  // x + (x+1) = 1
    CHECK(f4->mul(2, 2) == 3);  // x^2 = x+1 under x^2+x+1
    CHECK(f4->inv(2) == 3);     // x(x+1) = 1

    const FieldPtr f5 = Field::make(5);
    CHECK(f5->add(3, 4) == 2);
    CHECK(f5->inv(3) == 2);

    const FieldPtr f3 = Field::make(3);
    CHECK(f3->mul(2, 2) == 1);

    CHECK(Field::make(2)->inv(1) == 1);
}

TEST_CASE("identities hold for every supported order") {
    for (int q : kSupportedOrders) {
        const FieldPtr F = Field::make(q);
        CHECK(F->q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->mul(a, 0) == 0);
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
        }
    }
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const FieldPtr F = Field::make(q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
    }
}

TEST_CASE("frobenius endomorphism for q <= 16") {
    for (int q : {4, 8, 9, 16}) {
        const FieldPtr F = Field::make(q);
        const int p = F->p();
        const auto pow_p = [&](std::uint8_t a) {
            std::uint8_t r = 1;
            for (int i = 0; i < p; ++i) r = F->mul(r, a);
            return r;
        };
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(pow_p(F->add(a, b)) == F->add(pow_p(a), pow_p(b)));
    }
}

TEST_CASE("the polynomial x generates a subgroup of order dividing q-1") {
    for (int q : {4, 8, 9, 16, 25, 27, 32}) {
        const FieldPtr F = Field::make(q);
        const std::uint8_t x = static_cast<std::uint8_t>(F->p());
        std::uint8_t acc = x;
        int order = 1;
        while (acc != 1) {
            acc = F->mul(acc, x);
            ++order;
            REQUIRE(order <= q);
        }
        CHECK((q - 1) % order == 0);
    }
}

TEST_CASE("division by zero and order validation") {
    const FieldPtr f4 = Field::make(4);
    CHECK_THROWS_AS(f4->inv(0), std::domain_error);
    CHECK_THROWS_AS(Field::make(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(33), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(64), std::invalid_argument);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Field::make(4, {1, 0, 1}), std::invalid_argument);   // (x+1)^2
    CHECK_THROWS_AS(Field::make(4, {1, 1}), std::invalid_argument);      // wrong degree
    CHECK_THROWS_AS(Field::make(4, {1, 1, 2}), std::invalid_argument);   // not monic / range
    CHECK_THROWS_AS(Field::make(8, {0, 0, 0, 1}), std::invalid_argument);  // x^3 reducible
    CHECK_THROWS_AS(Field::make(16, {1, 0, 0, 0, 1}), std::invalid_argument);  // (x^2+x+1)^2... reducible
    // alternative irreducible modulus for GF(8): x^3 + x^2 + 1
    const FieldPtr alt = Field::make(8, {1, 0, 1, 1});
    for (int a = 1; a < 8; ++a) CHECK(alt->mul(a, alt->inv(a)) == 1);
    CHECK_FALSE(alt->same_as(*Field::make(8)));
    // prime fields ignore the modulus argument
    CHECK(Field::make(5, {})->q() == 5);
}

TEST_CASE("typed elements enforce field agreement") {
    const FieldPtr f2 = Field::make(2), f3 = Field::make(3);
    const Elem a(f2, 1), b(f3, 2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(Elem(f2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Elem(f2, -1), std::invalid_argument);

    const Elem x(f3, 2), y(f3, 2);
    CHECK((x + y).code() == 1);
    CHECK((x * y).code() == 1);
    CHECK((-x).code() == 1);
    CHECK(x.inverse().code() == 2);
    CHECK(x == y);

    // structurally equal fields interoperate even as distinct instances
    const Elem z(Field::make(3), 1);
    CHECK((x + z).code() == 0);
}

TEST_CASE("element legend lists every code") {
    const FieldPtr f4 = Field::make(4);
    const std::string table = f4->element_table();
    CHECK(table.find("2 = x") != std::string::npos);
    CHECK(table.find("3 = 1 + x") != std::string::npos);
}
