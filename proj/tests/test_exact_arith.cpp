#include <doctest.h>

#include <set>

#include "qabel/rational.hpp"
#include "qabel/sample.hpp"

using namespace qabel;

namespace {

// Independent sampler stream for property tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t s) : state(s) {}
    long next(long lo, long hi) { return lo + static_cast<long>(splitmix64(state) % (hi - lo + 1)); }
    Rational rational(long den = 8) {
        long n = 0;
        while (n == 0) n = next(-den, den);
        return rat(n, next(1, den));
    }
};

}  // namespace

TEST_CASE("pow_int matches its definition") {
    CHECK(pow_int(rat(1, 2), -3) == Rational(8));
    CHECK(pow_int(rat(-2, 3), 2) == rat(4, 9));
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        const Rational x = rng.rational();
        CHECK(pow_int(x, 0) == 1);
    }
    CHECK_THROWS_AS(pow_int(Rational(0), -1), pole_error);
}

TEST_CASE("pow_int exponent addition law") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const Rational x = rng.rational();
        const long m = rng.next(-20, 20), n = rng.next(-20, 20);
        CHECK(pow_int(x, m + n) == pow_int(x, m) * pow_int(x, n));
    }
}

TEST_CASE("guard_nonzero and pole propagation") {
    CHECK(guard_nonzero(rat(3, 7)) == rat(3, 7));
    CHECK_THROWS_AS(guard_nonzero(Rational(0)), pole_error);
    // evaluating 1/(1-a) at a=1 signals a pole instead of crashing
    const Rational a(1);
    CHECK_THROWS_AS(div_exact(Rational(1), 1 - a), pole_error);
}

TEST_CASE("field axioms at random points") {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("rationals stay canonical") {
    const Rational x = rat(4, -6);
    CHECK(x.get_den() > 0);
    CHECK(x == rat(-2, 3));
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        const Rational a = rng.rational(), b = rng.rational();
        const Rational s = a * b + a - b;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
        CHECK(g == 1);
        CHECK(s.get_den() > 0);
    }
}

TEST_CASE("sample_point is a pure function of (seed, attempt)") {
    SampleSpec spec;
    spec.symbols = {"a", "b", "c"};
    spec.half_base_symbols = {"q"};
    spec.seed = 42;
    for (std::uint64_t attempt : {0ULL, 1ULL, 99ULL}) {
        const ParamPoint p1 = sample_point(spec, attempt);
        const ParamPoint p2 = sample_point(spec, attempt);
        CHECK(p1.values == p2.values);
        CHECK(p1.half_bases == p2.half_bases);
    }
}

TEST_CASE("sample_point respects bounds") {
    SampleSpec spec;
    spec.symbols = {"a"};
    spec.half_base_symbols = {"q"};
    spec.denominator_bound = 2;
    spec.magnitude_bound = Rational(3);
    spec.seed = 7;
    for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
        const ParamPoint p = sample_point(spec, attempt);
        const Rational a = p.value("a");
        CHECK(a != 0);
        CHECK(abs_rat(a) <= 3);
        CHECK(abs_rat(Rational(a.get_num())) <= 2);
        CHECK(a.get_den() <= 2);
        const Rational s = p.sigma("q");
        CHECK(s != 0);
        CHECK(s * s != 1);
    }
}

TEST_CASE("sampler stream has few collisions across attempts") {
    SampleSpec spec;
    spec.symbols = {"a", "b"};
    spec.half_base_symbols = {"q"};
    spec.seed = 1;
    std::set<std::string> seen;
    int collisions = 0;
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        const ParamPoint p = sample_point(spec, attempt);
        std::string key = p.value("a").get_str() + "|" + p.value("b").get_str() + "|" + p.sigma("q").get_str();
        if (!seen.insert(key).second) ++collisions;
    }
    CHECK(collisions < 5);
}
