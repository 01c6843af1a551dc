#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qabel/rational.hpp"

namespace qabel {

// Named assignment of exact rationals to the free symbols of an identity.
// Bases are stored through their half-base sigma (base = sigma^2), so every
// half-integer power of a base is an exact integer power of sigma.
struct ParamPoint {
    std::map<std::string, Rational> values;
    std::map<std::string, Rational> half_bases;

    const Rational& value(const std::string& name) const;
    const Rational& sigma(const std::string& name) const;
    Rational base(const std::string& name) const;  // sigma^2
    bool has(const std::string& name) const {
        return values.count(name) != 0 || half_bases.count(name) != 0;
    }
};

struct SampleSpec {
    std::vector<std::string> symbols;
    std::vector<std::string> half_base_symbols;
    int denominator_bound = 12;
    Rational magnitude_bound = Rational(3);
    std::uint64_t seed = 0;
};

// Deterministic function of (spec.seed, attempt). Every symbol gets a
// nonzero rational with |num|, den <= denominator_bound and |value| <=
// magnitude_bound; half-bases additionally satisfy sigma^2 not in {0, 1}.
ParamPoint sample_point(const SampleSpec& spec, std::uint64_t attempt);

// splitmix64 step, exposed for deterministic derived seeds elsewhere.
std::uint64_t splitmix64(std::uint64_t& state);

// Stable 64-bit hash of a string (FNV-1a), for per-entry seed derivation.
std::uint64_t fnv1a(const std::string& s);

}  // namespace qabel
