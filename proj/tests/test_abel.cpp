#include <doctest.h>

#include <vector>

#include "qabel/abel.hpp"
#include "qabel/transforms.hpp"

using namespace qabel;

namespace {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t s) : state(s) {}
    long next(long lo, long hi) { return lo + static_cast<long>(splitmix64(state) % (hi - lo + 1)); }
    Rational rational(long den = 9) {
        long n = 0;
        while (n == 0) n = next(-den, den);
        return rat(n, next(1, den));
    }
};

Sequence table_sequence(std::vector<Rational> vals) {
    // index -1 maps to slot 0
    return Sequence([vals = std::move(vals)](long k) { return vals.at(static_cast<size_t>(k + 1)); });
}

ParamPoint random_master_point(Rng& rng) {
    ParamPoint pt;
    for (int i = 1; i <= 4; ++i) {
        pt.values["a" + std::to_string(i)] = rng.rational();
        pt.values["x" + std::to_string(i)] = rng.rational();
        for (;;) {
            const Rational s = rng.rational(6);
            if (s * s != 1) {
                pt.half_bases["p" + std::to_string(i)] = s;
                break;
            }
        }
        for (;;) {
            const Rational s = rng.rational(6);
            if (s * s != 1) {
                pt.half_bases["q" + std::to_string(i)] = s;
                break;
            }
        }
    }
    return pt;
}

}  // namespace

TEST_CASE("delta and nabla basics") {
    Sequence sq([](long k) -> Rational { return Rational(k) * Rational(k); });
    CHECK(delta(sq, 3) == 5);
    Sequence constant([](long) { return rat(7, 3); });
    for (long k = 0; k <= 5; ++k) {
        CHECK(delta(constant, k) == 0);
        CHECK(nabla(constant, k) == 0);
    }
    Sequence geo([](long k) -> Rational { return pow_int(rat(1, 2), k); });
    CHECK(nabla(geo, 1) == rat(1, 4));
}

TEST_CASE("nabla is minus the shifted delta; both are linear") {
    Rng rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> va, vb;
        for (int i = 0; i < 10; ++i) {
            va.push_back(rng.rational());
            vb.push_back(rng.rational());
        }
        const Sequence A = table_sequence(va), B = table_sequence(vb);
        const Rational c1 = rng.rational(), c2 = rng.rational();
        const Sequence L([&](long k) -> Rational { return c1 * A(k) + c2 * B(k); });
        for (long k = 0; k <= 7; ++k) {
            CHECK(nabla(A, k) == -delta(A, k + 1));
            CHECK(delta(L, k + 1) == c1 * delta(A, k + 1) + c2 * delta(B, k + 1));
            CHECK(nabla(L, k) == c1 * nabla(A, k) + c2 * nabla(B, k));
        }
    }
}

TEST_CASE("summation by parts vanishes for arbitrary sequences") {
    {
        const Sequence A = table_sequence({rat(3, 2), Rational(5)});
        const Sequence B = table_sequence({Rational(0), rat(-7, 3)});
        CHECK(abel_sbp_residual(A, B, 0) == 0);
    }
    Rng rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        const long n = rng.next(0, 12);
        std::vector<Rational> va, vb;
        for (long i = 0; i <= n + 2; ++i) {
            va.push_back(rng.rational());
            vb.push_back(rng.rational());
        }
        CHECK(abel_sbp_residual(table_sequence(va), table_sequence(vb), n) == 0);
    }
}

TEST_CASE("exchange identity vanishes for arbitrary sequences") {
    {
        const Sequence A = table_sequence({Rational(0), rat(2, 5)});
        CHECK(exchange_residual(A, A, 0) == 0);
    }
    Rng rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        const long n = rng.next(0, 10);
        std::vector<Rational> va, vb;
        for (long i = 0; i <= n + 1; ++i) {
            va.push_back(rng.rational());
            vb.push_back(rng.rational());
        }
        const Sequence A = table_sequence(va), B = table_sequence(vb);
        CHECK(exchange_residual(A, B, n) == 0);
        CHECK(exchange_residual(A, A, n) == 0);
    }
}

TEST_CASE("summation by parts with the master sequences") {
    Rng rng(83);
    int done = 0;
    while (done < 10) {
        const ParamPoint pt = random_master_point(rng);
        try {
            const MasterParams m = master_from_point(pt);
            const Sequence A([&m](long k) { return master_A(m, k); });
            const Sequence B([&m](long k) { return master_B(m, k); });
            const Rational r = abel_sbp_residual(A, B, 4);
            CHECK(r == 0);
            ++done;
        } catch (const pole_error&) {
        }
    }
}

TEST_CASE("closed-form differences equal direct differences") {
    Rng rng(89);
    int done = 0;
    while (done < 25) {
        const ParamPoint pt = random_master_point(rng);
        try {
            for (long k = 0; k <= 4; ++k) {
                const Rational ra = closed_diff_residual(ClosedDiff::diffak, pt, k);
                const Rational rb = closed_diff_residual(ClosedDiff::diffbk, pt, k);
                const Rational rbb = closed_diff_residual(ClosedDiff::diffbbk, pt, k);
                CHECK(ra == 0);
                CHECK(rb == 0);
                CHECK(rbb == 0);
            }
            ++done;
        } catch (const pole_error&) {
        }
    }
}

TEST_CASE("sequence terms are memoized") {
    int calls = 0;
    const Sequence s([&calls](long k) {
        ++calls;
        return Rational(k);
    });
    for (int rep = 0; rep < 3; ++rep)
        for (long k = -1; k <= 5; ++k) (void)s(k);
    CHECK(calls == 7);
}
