#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ramsey/errors.hpp"
#include "ramsey/golden.hpp"

using ramsey::GoldenNumber;
using G = GoldenNumber;

TEST_CASE("addition is componentwise and exact") {
    CHECK(G(1, 0) + G(0, 1) == G(1, 1));
    CHECK(G(1, 0) + G(1, 0) == G(2, 0));
    CHECK(G(2, -3) + G(-2, 3) == G(0, 0));
}

TEST_CASE("multiplication reduces phi^2 = phi + 1") {
    CHECK(G(1, 0) * G(1, 0) == G(1, 1));
    CHECK(G(1, 0) * G(1, 1) == G(2, 1));  // phi * phi^2 = phi^3
    CHECK(G(0, 3) * G(1, -2) == G(3, -6));
    CHECK(G(1, 0) * G(1, 0) * G(1, 0) == G::phi_cubed());
}

TEST_CASE("ordering is exact") {
    CHECK(G(1, 0) < G(0, 2));  // phi < 2
    CHECK(G(2, 0) > G(0, 3));  // 2 phi > 3
    CHECK(G(7, -11) == G(7, -11));
    CHECK(G(-1, 2) > G(0, 0));   // 2 - phi > 0
    CHECK(G(-2, 3) < G(0, 0));   // 3 - 2 phi < 0
    CHECK(G(-1, 1) < G(0, 0));   // 1 - phi < 0
}

TEST_CASE("ceil via integer square-root bracketing") {
    CHECK(G(1, 3).ceil_value() == 5);
    CHECK(G(2, 4).ceil_value() == 8);
    CHECK(G(0, 7).ceil_value() == 7);
    CHECK(G(0, -7).ceil_value() == -7);
    CHECK(G(-1, 0).ceil_value() == -1);   // -phi = -1.618...
    CHECK(G(-2, 0).ceil_value() == -3);   // -3.236...
    CHECK(G(1, 0).ceil_value() == 2);
    CHECK(G(1, -1).ceil_value() == 1);    // 0.618...
}

TEST_CASE("overflow is detected, never wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(G(big, 0) + G(1, 0), ramsey::ArithmeticOverflow);
    CHECK_THROWS_AS(G(big, 0) * G(0, 2), ramsey::ArithmeticOverflow);
    CHECK_THROWS_AS(-G(std::numeric_limits<std::int64_t>::min(), 0), ramsey::ArithmeticOverflow);
}

TEST_CASE("ring laws on random values") {
    std::mt19937_64 rng(7);
    auto rand_g = [&rng]() {
        return G(static_cast<std::int64_t>(rng() % 2000001) - 1000000,
                 static_cast<std::int64_t>(rng() % 2000001) - 1000000);
    };
    for (int i = 0; i < 20000; ++i) {
        const G a = rand_g(), b = rand_g(), c = rand_g();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("compare matches double evaluation away from ties") {
    std::mt19937_64 rng(8);
    auto rand_g = [&rng]() {
        return G(static_cast<std::int64_t>(rng() % 2000001) - 1000000,
                 static_cast<std::int64_t>(rng() % 2000001) - 1000000);
    };
    for (int i = 0; i < 100000; ++i) {
        const G a = rand_g(), b = rand_g();
        const double gap = a.approx() - b.approx();
        if (gap > 1e-6) CHECK(a > b);
        if (gap < -1e-6) CHECK(a < b);
    }
}

TEST_CASE("ceil bracket: ceil(x) - 1 < x <= ceil(x)") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100000; ++i) {
        const G x(static_cast<std::int64_t>(rng() % 2000001) - 1000000,
                  static_cast<std::int64_t>(rng() % 2000001) - 1000000);
        const std::int64_t k = x.ceil_value();
        CHECK(x <= G(0, k));
        CHECK(x > G(0, k - 1));
    }
}

TEST_CASE("text rendering") {
    CHECK(G(2, -3).str() == "2*phi-3");
    CHECK(G(1, 3).str() == "1*phi+3");
    CHECK(G(0, -4).str() == "-4");
    CHECK(G(-1, 0).str() == "-1*phi");
}
