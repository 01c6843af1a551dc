#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qabel/catalog.hpp"
#include "qabel/numeric.hpp"

namespace qabel {

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);

struct FailureRecord {
    std::uint64_t attempt = 0;
    long n = 0;
    std::string residual;
    std::string what;  // which residual failed (lhs-rhs or a named extra)
};

struct VerificationReport {
    std::string id;
    std::string kind;  // finite | infinite | recurrence | chain
    int trials_requested = 0;
    int trials_admissible = 0;
    int resamples = 0;
    long n_min = 0;
    long n_max = 0;
    Verdict verdict = Verdict::pass;
    std::vector<FailureRecord> failures;
    std::string max_abs_residual = "0";
    std::string max_tail_bound;  // infinite entries only
    long elapsed_ms = 0;  // human output only; omitted from JSON for byte-stable reports
};

struct CampaignConfig {
    std::uint64_t seed = 0;
    int trials = 0;    // 0: entry default (finite/recurrence 10, infinite 3)
    long n_max = -1;   // -1: entry default
    int den_bound = 12;
    int retry_limit = 100;
    NumericPolicy policy;
};

// Per-identity overrides from a config file; CLI flags take precedence.
struct EntryOverride {
    int trials = 0;
    long n_max = -1;
    double eps = 0;
    long prec_bits = 0;
};
using OverrideMap = std::map<std::string, EntryOverride>;

VerificationReport run_entry_campaign(const IdentityEntry& entry, const CampaignConfig& cfg);
VerificationReport run_chain_campaign(const SpecializationChain& chain, const CampaignConfig& cfg);

// Runs campaigns for the named ids ("all" handled by the caller) on a worker
// pool; reports come back sorted by id regardless of the job count.
std::vector<VerificationReport> run_campaigns(const std::vector<std::string>& ids,
                                              const CampaignConfig& cfg, int jobs,
                                              bool include_chains, const OverrideMap& overrides);

std::string reports_to_json(const std::vector<VerificationReport>& reports, std::uint64_t seed);
std::string manifest_json();

}  // namespace qabel
