#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flat2g/circle.hpp"

using namespace flat2g;

TEST_CASE("make reduces mod N") {
    CHECK(CircleElement::make(0, 4).is_identity());
    CHECK(CircleElement::make(5, 4) == CircleElement::make(1, 4));
    CHECK(CircleElement::make(-1, 4) == CircleElement::make(3, 4));
    CHECK_THROWS_AS(CircleElement::make(1, 0), spec_error);
}

TEST_CASE("group laws") {
    auto half = CircleElement::make(1, 2);
    CHECK(half.mul(half).is_identity());
    auto third = CircleElement::make(1, 3);
    CHECK(third.mul(third) == CircleElement::make(2, 3));
    CHECK(CircleElement::make(1, 4).pow(-1) == CircleElement::make(3, 4));
    CHECK_THROWS_AS(half.mul(third), spec_error);
}

TEST_CASE("laws hold for all elements of small moduli") {
    for (int64_t n = 1; n <= 8; ++n) {
        for (int64_t a = 0; a < n; ++a) {
            auto x = CircleElement::make(a, n);
            CHECK(x.mul(x.inv()).is_identity());
            CHECK(x.pow(n).is_identity());
            for (int64_t b = 0; b < n; ++b) {
                auto y = CircleElement::make(b, n);
                CHECK(x.mul(y) == y.mul(x));
                for (int64_t c = 0; c < n; ++c) {
                    auto z = CircleElement::make(c, n);
                    CHECK(x.mul(y).mul(z) == x.mul(y.mul(z)));
                }
            }
        }
    }
}

TEST_CASE("rescale embeds into a larger modulus") {
    auto x = CircleElement::make(1, 2);
    CHECK(x.rescaled(6) == CircleElement::make(3, 6));
    CHECK_THROWS_AS(x.rescaled(3), spec_error);
    CHECK(x.order() == 2);
    CHECK(CircleElement::make(2, 6).order() == 3);
}

TEST_CASE("serialization round-trips") {
    auto x = CircleElement::make(3, 7);
    CHECK(x.str() == "3/7");
    CHECK(parse_circle("3/7") == x);
    CHECK_THROWS_AS(parse_circle("nope"), spec_error);
}
