#include <doctest.h>

#include <set>

#include "qabel/catalog.hpp"

using namespace qabel;

TEST_CASE("chain registry is consistent with the catalog") {
    const auto& chains = specialization_chains();
    CHECK(chains.size() >= 15);
    std::set<std::string> chained;
    for (const auto& c : chains) {
        CAPTURE(c.entry_id);
        const IdentityEntry& e = Catalog::instance().at(c.entry_id);
        CHECK(e.parent_id == c.parent_id);
        CHECK(Catalog::instance().find(c.parent_id) != nullptr);
        CHECK(chained.insert(c.entry_id).second);
    }
    for (const auto& e : Catalog::instance().entries()) {
        if (!e.parent_id.empty()) CHECK(chained.count(e.id) == 1);
    }
}

TEST_CASE("every specialization chain vanishes at lifted points") {
    for (const auto& chain : specialization_chains()) {
        CAPTURE(chain.entry_id);
        SampleSpec spec;
        spec.symbols = chain.lift_symbols.scalars;
        spec.half_base_symbols = chain.lift_symbols.half_bases;
        spec.seed = 4242;
        const long n_lo = Catalog::instance().at(chain.entry_id).n_min;
        int done = 0;
        std::uint64_t attempt = 0;
        while (done < 4) {
            REQUIRE(attempt < 4000);
            const ParamPoint pt = sample_point(spec, attempt++);
            try {
                for (long n = n_lo; n <= n_lo + 2; ++n) {
                    CAPTURE(n);
                    const Rational r = verify_specialization(chain.entry_id, pt, n);
                    CHECK(r == 0);
                }
                ++done;
            } catch (const pole_error&) {
            }
        }
    }
}

TEST_CASE("verify_specialization rejects entries without a parent") {
    CHECK_THROWS_AS((void)verify_specialization("eq-magic", ParamPoint{}, 1), std::invalid_argument);
}
