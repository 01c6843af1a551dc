#include "qabel/sample.hpp"

namespace qabel {

const Rational& ParamPoint::value(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw std::out_of_range("ParamPoint: no scalar symbol '" + name + "'");
    return it->second;
}

const Rational& ParamPoint::sigma(const std::string& name) const {
    auto it = half_bases.find(name);
    if (it == half_bases.end()) throw std::out_of_range("ParamPoint: no half-base symbol '" + name + "'");
    return it->second;
}

Rational ParamPoint::base(const std::string& name) const {
    const Rational& s = sigma(name);
    return s * s;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

long draw_in(std::uint64_t& state, long lo, long hi) {
    // Unbiased enough for sampling duty: range is tiny relative to 2^64.
    return lo + static_cast<long>(splitmix64(state) % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational draw_rational(std::uint64_t& state, const SampleSpec& spec, bool half_base) {
    const long D = spec.denominator_bound;
    for (;;) {
        long num = draw_in(state, -D, D);
        long den = draw_in(state, 1, D);
        if (num == 0) continue;
        Rational v = rat(num, den);
        if (abs_rat(v) > spec.magnitude_bound) continue;
        if (half_base && (v == 1 || v == -1)) continue;  // sigma^2 must avoid 1
        return v;
    }
}

}  // namespace

ParamPoint sample_point(const SampleSpec& spec, std::uint64_t attempt) {
    // Two finalizer rounds decorrelate the (seed, attempt) lattice.
    std::uint64_t seed_mix = spec.seed + 0x6a09e667f3bcc908ULL;
    seed_mix = splitmix64(seed_mix);
    std::uint64_t state = seed_mix ^ (attempt + 0x9e3779b97f4a7c15ULL);
    state = splitmix64(state);
    ParamPoint pt;
    for (const auto& sym : spec.symbols) pt.values[sym] = draw_rational(state, spec, false);
    for (const auto& sym : spec.half_base_symbols) pt.half_bases[sym] = draw_rational(state, spec, true);
    return pt;
}

}  // namespace qabel
