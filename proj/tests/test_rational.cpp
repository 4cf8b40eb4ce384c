#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutstack/certified.hpp"
#include "cutstack/errors.hpp"
#include "cutstack/rational.hpp"

using namespace cutstack;

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(1, 3) * Rat(3, 7)) == Rat(1, 7));
    CHECK((Rat(1, 3) / Rat(1, 6)) == Rat(2));
    CHECK(Rat(7, 2).floor() == BigInt(3));
    CHECK(Rat(7, 2).ceil() == BigInt(4));
    CHECK(Rat(-7, 2).floor() == BigInt(-4));
    CHECK(Rat(1, 2).str() == "1/2");
    CHECK(Rat(5).str() == "5");
    CHECK_THROWS_AS(Rat(1, 0), invalid_parameter_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), invalid_parameter_error);
}

TEST_CASE("rational parsing and powers of two") {
    CHECK(Rat::from_string("3/12") == Rat(1, 4));
    CHECK(Rat::from_string("-5") == Rat(-5));
    CHECK_THROWS_AS(Rat::from_string("abc"), invalid_parameter_error);
    CHECK(Rat::pow2(10) == Rat(1024));
    CHECK(Rat::pow2(-3) == Rat(1, 8));
    CHECK(Rat(1, 64).is_dyadic());
    CHECK(Rat(3, 8).is_dyadic());
    CHECK_FALSE(Rat(1, 3).is_dyadic());
    CHECK(Rat(1, 64).exact_log2() == -6);
    CHECK(Rat(32).exact_log2() == 5);
    CHECK_THROWS_AS(Rat(3, 8).exact_log2(), invalid_parameter_error);
}

TEST_CASE("exact big power") {
    Rat p = pow(Rat(3, 5), 10);
    CHECK(p == Rat(59049, 9765625));
}

TEST_CASE("certified interval log/exp/sqrt enclose truth") {
    IReal two = IReal::from_long(2, 128);
    CHECK(two.log2().contains(Rat(1)));
    IReal e = IReal::from_long(1, 128).exp();
    CHECK(e.definitely_greater(Rat(27, 10)));
    CHECK(e.definitely_less(Rat(28, 10)));
    IReal r = IReal::from_long(2, 128).sqrt();
    CHECK(r.definitely_greater(Rat(14142, 10001)));
    CHECK(r.definitely_less(Rat(14143, 10000)));
}

TEST_CASE("interval multiplication respects signs") {
    IReal a = IReal::from_rat(Rat(-3, 2), 128);
    IReal b = IReal::from_rat(Rat(5, 2), 128);
    IReal c = a * b;
    CHECK(c.contains(Rat(-15, 4)));
    IReal d = a * a;
    CHECK(d.contains(Rat(9, 4)));
}

TEST_CASE("certified comparisons decide cleanly off the boundary") {
    // 2 e^{-5} vs exact rational 2^-9: 0.01348 vs 0.00195
    bool le = certified_le(Rat(1, 512), [](mpfr_prec_t p) {
        return IReal::from_long(2, p) * IReal::from_long(-5, p).exp();
    });
    CHECK(le);
    bool le2 = certified_le(Rat(1, 10), [](mpfr_prec_t p) {
        return IReal::from_long(2, p) * IReal::from_long(-5, p).exp();
    });
    CHECK_FALSE(le2);
}
