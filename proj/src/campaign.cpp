#include "qabel/campaign.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

namespace qabel {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

int default_trials(const IdentityEntry& e) {
    if (e.default_trials > 0) return e.default_trials;
    return e.kind == IdentityKind::infinite ? 3 : 10;
}

SampleSpec make_spec(const SymbolSet& syms, const CampaignConfig& cfg, const std::string& stream_id) {
    SampleSpec spec;
    spec.symbols = syms.scalars;
    spec.half_base_symbols = syms.half_bases;
    spec.denominator_bound = cfg.den_bound;
    spec.seed = cfg.seed ^ fnv1a(stream_id);
    return spec;
}

bool constraints_hold(const std::vector<Constraint>& cons, const ParamPoint& pt) {
    for (const auto& c : cons)
        if (!c.holds(pt)) return false;
    return true;
}

// Sampling for infinite entries keeps magnitudes small so the convergence
// constraints (|z| < 1, bases <= 1/2 in absolute value) are reachable.
SampleSpec numeric_spec(const IdentityEntry& e, const CampaignConfig& cfg) {
    SampleSpec spec = make_spec(e.symbols, cfg, e.id);
    spec.magnitude_bound = rat(1, 2);
    return spec;
}

struct ExactOutcome {
    bool pole = false;
    Rational residual;
    std::string what;
};

ExactOutcome eval_exact(const IdentityEntry& e, const ParamPoint& pt, long n) {
    ExactOutcome out;
    try {
        out.residual = e.residual(pt, n);
        out.what = "lhs-rhs";
        if (out.residual != 0) return out;
        for (const auto& [name, fn] : e.extra_residuals) {
            const Rational r = fn(pt, n);
            if (r != 0) {
                out.residual = r;
                out.what = name;
                return out;
            }
        }
    } catch (const pole_error&) {
        out.pole = true;
    }
    return out;
}

}  // namespace

VerificationReport run_entry_campaign(const IdentityEntry& e, const CampaignConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = e.id;
    rep.kind = kind_name(e.kind);
    rep.trials_requested = cfg.trials > 0 ? cfg.trials : default_trials(e);
    rep.n_min = e.n_min;
    rep.n_max = cfg.n_max >= 0 ? cfg.n_max : e.default_n_max;
    if (rep.n_max < rep.n_min) rep.n_max = rep.n_min;

    const bool numeric = e.kind == IdentityKind::infinite;
    const SampleSpec spec = numeric ? numeric_spec(e, cfg) : make_spec(e.symbols, cfg, e.id);
    std::uint64_t next_resample = static_cast<std::uint64_t>(rep.trials_requested);
    bool starved = false;
    BigFloat max_numeric_residual(cfg.policy.precision_bits);
    BigFloat max_tail(cfg.policy.precision_bits);

    for (int trial = 0; trial < rep.trials_requested; ++trial) {
        std::uint64_t attempt = static_cast<std::uint64_t>(trial);
        bool done = false;
        for (int retry = 0; retry <= cfg.retry_limit && !done; ++retry) {
            const ParamPoint pt = sample_point(spec, attempt);
            if (!constraints_hold(e.constraints, pt)) {
                ++rep.resamples;
                attempt = next_resample++;
                continue;
            }
            if (numeric) {
                try {
                    const NumericOutcome out = infinite_residual(e.id, pt, cfg.policy);
                    ++rep.trials_admissible;
                    done = true;
                    if (max_numeric_residual < out.residual_abs) max_numeric_residual = out.residual_abs;
                    if (max_tail < out.tail_total) max_tail = out.tail_total;
                    if (!out.pass(cfg.policy)) {
                        rep.verdict = Verdict::fail;
                        rep.failures.push_back({attempt, 0, out.residual_abs.str(),
                                                out.tails_sound ? "residual" : "tail-bound-unsound"});
                    }
                } catch (const numeric_error&) {
                    ++rep.resamples;
                    attempt = next_resample++;
                }
                continue;
            }
            bool trial_pole = false;
            for (long n = rep.n_min; n <= rep.n_max && !trial_pole; ++n) {
                const ExactOutcome out = eval_exact(e, pt, n);
                if (out.pole) {
                    trial_pole = true;
                    break;
                }
                if (out.residual != 0) {
                    rep.verdict = Verdict::fail;
                    rep.failures.push_back({attempt, n, out.residual.get_str(), out.what});
                }
            }
            if (trial_pole) {
                ++rep.resamples;
                attempt = next_resample++;
            } else {
                ++rep.trials_admissible;
                done = true;
            }
        }
        if (!done) starved = true;
    }
    if (rep.verdict != Verdict::fail) {
        if (starved || rep.trials_admissible < rep.trials_requested) rep.verdict = Verdict::inconclusive;
    }
    if (!rep.failures.empty())
        rep.max_abs_residual = rep.failures.front().residual;
    else if (numeric)
        rep.max_abs_residual = max_numeric_residual.str(6);
    if (numeric) rep.max_tail_bound = max_tail.str(6);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport run_chain_campaign(const SpecializationChain& chain, const CampaignConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = "chain:" + chain.entry_id;
    rep.kind = "chain";
    rep.trials_requested = cfg.trials > 0 ? cfg.trials : 10;
    rep.n_min = Catalog::instance().at(chain.entry_id).n_min;
    rep.n_max = cfg.n_max >= 0 ? cfg.n_max : 4;
    if (rep.n_max < rep.n_min) rep.n_max = rep.n_min;
    const SampleSpec spec = make_spec(chain.lift_symbols, cfg, rep.id);
    std::uint64_t next_resample = static_cast<std::uint64_t>(rep.trials_requested);
    bool starved = false;

    for (int trial = 0; trial < rep.trials_requested; ++trial) {
        std::uint64_t attempt = static_cast<std::uint64_t>(trial);
        bool done = false;
        for (int retry = 0; retry <= cfg.retry_limit && !done; ++retry) {
            const ParamPoint pt = sample_point(spec, attempt);
            bool trial_pole = false;
            for (long n = rep.n_min; n <= rep.n_max && !trial_pole; ++n) {
                try {
                    const Rational r = chain.residual(pt, n);
                    if (r != 0) {
                        rep.verdict = Verdict::fail;
                        rep.failures.push_back({attempt, n, r.get_str(), "specialization"});
                    }
                } catch (const pole_error&) {
                    trial_pole = true;
                }
            }
            if (trial_pole) {
                ++rep.resamples;
                attempt = next_resample++;
            } else {
                ++rep.trials_admissible;
                done = true;
            }
        }
        if (!done) starved = true;
    }
    if (rep.verdict != Verdict::fail && (starved || rep.trials_admissible < rep.trials_requested))
        rep.verdict = Verdict::inconclusive;
    if (!rep.failures.empty()) rep.max_abs_residual = rep.failures.front().residual;
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<VerificationReport> run_campaigns(const std::vector<std::string>& ids,
                                              const CampaignConfig& cfg, int jobs,
                                              bool include_chains, const OverrideMap& overrides) {
    struct Task {
        const IdentityEntry* entry = nullptr;
        const SpecializationChain* chain = nullptr;
    };
    std::vector<Task> tasks;
    for (const auto& id : ids) {
        Task t;
        t.entry = &Catalog::instance().at(id);
        tasks.push_back(t);
        if (include_chains) {
            if (const SpecializationChain* ch = find_chain(t.entry->id)) tasks.push_back({nullptr, ch});
        }
    }

    auto config_for = [&](const std::string& id) {
        CampaignConfig c = cfg;
        auto it = overrides.find(id);
        if (it != overrides.end()) {
            if (cfg.trials == 0 && it->second.trials > 0) c.trials = it->second.trials;
            if (cfg.n_max < 0 && it->second.n_max >= 0) c.n_max = it->second.n_max;
            if (it->second.eps > 0) c.policy.target_eps = it->second.eps;
            if (it->second.prec_bits >= 64) c.policy.precision_bits = it->second.prec_bits;
        }
        return c;
    };

    std::vector<VerificationReport> reports(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            if (tasks[i].entry)
                reports[i] = run_entry_campaign(*tasks[i].entry, config_for(tasks[i].entry->id));
            else
                reports[i] = run_chain_campaign(*tasks[i].chain, config_for(tasks[i].chain->entry_id));
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    return reports;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, std::uint64_t seed) {
    nlohmann::ordered_json root;
    root["report_version"] = 1;
    root["seed"] = seed;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["kind"] = r.kind;
        j["trials_requested"] = r.trials_requested;
        j["trials_admissible"] = r.trials_admissible;
        j["resamples"] = r.resamples;
        j["n_range"] = {r.n_min, r.n_max};
        j["verdict"] = verdict_name(r.verdict);
        j["max_abs_residual"] = r.max_abs_residual;
        if (!r.max_tail_bound.empty()) j["max_tail_bound"] = r.max_tail_bound;
        nlohmann::ordered_json fails = nlohmann::ordered_json::array();
        for (const auto& f : r.failures) {
            fails.push_back({{"attempt", f.attempt}, {"n", f.n}, {"residual", f.residual}, {"what", f.what}});
        }
        j["failures"] = fails;
        entries.push_back(j);
    }
    root["entries"] = entries;
    return root.dump(2) + "\n";
}

std::string manifest_json() {
    nlohmann::ordered_json root;
    root["catalog_version"] = 1;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : Catalog::instance().entries()) {
        nlohmann::ordered_json j;
        j["id"] = e.id;
        j["kind"] = kind_name(e.kind);
        j["anchor"] = e.paper_anchor;
        j["symbols"] = {{"scalars", e.symbols.scalars}, {"half_bases", e.symbols.half_bases}};
        nlohmann::ordered_json cons = nlohmann::ordered_json::array();
        for (const auto& c : e.constraints) cons.push_back(c.str());
        j["constraints"] = cons;
        j["n_min"] = e.n_min;
        if (!e.parent_id.empty()) {
            j["parent"] = {{"id", e.parent_id}, {"substitution", e.substitution_note}};
        } else {
            j["parent"] = nullptr;
        }
        entries.push_back(j);
    }
    root["entries"] = entries;
    return root.dump(2) + "\n";
}

}  // namespace qabel
