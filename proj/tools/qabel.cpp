#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qabel/campaign.hpp"
#include "qabel/catalog.hpp"

namespace {

using qabel::Catalog;
using qabel::IdentityKind;

struct ConfigFile {
    qabel::EntryOverride defaults;
    qabel::OverrideMap per_id;
};

void apply_kv(qabel::EntryOverride& o, const std::string& key, const std::string& value) {
    if (key == "trials") o.trials = std::stoi(value);
    else if (key == "n_max") o.n_max = std::stol(value);
    else if (key == "eps") o.eps = std::stod(value);
    else if (key == "prec_bits") o.prec_bits = std::stol(value);
}

ConfigFile parse_config_json(const std::string& text) {
    ConfigFile cf;
    const auto j = nlohmann::json::parse(text);
    auto read = [](const nlohmann::json& src, qabel::EntryOverride& o) {
        if (src.contains("trials")) o.trials = src["trials"].get<int>();
        if (src.contains("n_max")) o.n_max = src["n_max"].get<long>();
        if (src.contains("eps")) o.eps = src["eps"].get<double>();
        if (src.contains("prec_bits")) o.prec_bits = src["prec_bits"].get<long>();
    };
    if (j.contains("defaults")) read(j["defaults"], cf.defaults);
    if (j.contains("identities"))
        for (auto it = j["identities"].begin(); it != j["identities"].end(); ++it) read(it.value(), cf.per_id[it.key()]);
    return cf;
}

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Minimal TOML subset: [defaults] / [identities."<id>"] tables with
// key = number entries. Enough for per-identity campaign overrides.
ConfigFile parse_config_toml(const std::string& text) {
    ConfigFile cf;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = strip(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (!value.empty() && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (section == "defaults") {
            apply_kv(cf.defaults, key, value);
        } else if (section.rfind("identities.", 0) == 0) {
            std::string id = section.substr(std::string("identities.").size());
            if (id.size() >= 2 && id.front() == '"' && id.back() == '"') id = id.substr(1, id.size() - 2);
            apply_kv(cf.per_id[id], key, value);
        }
    }
    return cf;
}

ConfigFile load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const std::string t = strip(text);
    if (!t.empty() && (t.front() == '{')) return parse_config_json(text);
    return parse_config_toml(text);
}

std::uint64_t env_seed() {
    if (const char* s = std::getenv("QABEL_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

int emit_reports(const std::vector<qabel::VerificationReport>& reports, std::uint64_t seed,
                 const std::string& json_path) {
    bool any_fail = false, any_inconclusive = false;
    for (const auto& r : reports) {
        std::cout << r.id << "  kind=" << r.kind << "  trials=" << r.trials_admissible << "/"
                  << r.trials_requested << "  resamples=" << r.resamples << "  verdict="
                  << qabel::verdict_name(r.verdict) << "  max|residual|=" << r.max_abs_residual;
        if (!r.max_tail_bound.empty()) std::cout << "  tail<=" << r.max_tail_bound;
        std::cout << "  (" << r.elapsed_ms << " ms)" << std::endl;
        any_fail = any_fail || r.verdict == qabel::Verdict::fail;
        any_inconclusive = any_inconclusive || r.verdict == qabel::Verdict::inconclusive;
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << qabel::reports_to_json(reports, seed);
    }
    if (any_fail) return 1;
    if (any_inconclusive) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qabel: exact and numeric verification of multibasic q-series transformations"};
    app.require_subcommand(1);

    // ---- list ----
    auto* list_cmd = app.add_subcommand("list", "List catalog identities");
    std::string list_kind;
    bool list_json = false;
    list_cmd->add_option("--kind", list_kind, "Filter by kind (finite|infinite|recurrence)");
    list_cmd->add_flag("--json", list_json, "Emit a JSON array");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Run exact/numeric verification campaigns");
    std::vector<std::string> verify_ids;
    long v_nmax = -1;
    int v_trials = 0;
    std::uint64_t v_seed = env_seed();
    int v_den = 12;
    int v_jobs = 0;
    std::string v_json, v_config;
    verify_cmd->add_option("ids", verify_ids, "Identity ids, or 'all'")->required();
    verify_cmd->add_option("--n-max", v_nmax, "Maximum n per identity");
    verify_cmd->add_option("--trials", v_trials, "Sample points per identity");
    verify_cmd->add_option("--seed", v_seed, "Campaign seed (default: QABEL_SEED env or 0)");
    verify_cmd->add_option("--den-bound", v_den, "Denominator bound for sampled rationals");
    verify_cmd->add_option("--jobs", v_jobs, "Worker threads (default: hardware)");
    verify_cmd->add_option("--json", v_json, "Write the JSON report to this path");
    verify_cmd->add_option("--config", v_config, "Config file (JSON or TOML) with per-identity overrides");

    // ---- numeric ----
    auto* numeric_cmd = app.add_subcommand("numeric", "Evaluate an infinite identity numerically");
    std::string num_id;
    double num_eps = 1e-12;
    long num_prec = 128;
    std::uint64_t num_seed = env_seed();
    int num_trials = 3;
    std::string num_json;
    numeric_cmd->add_option("id", num_id, "Identity id (kind=infinite)")->required();
    numeric_cmd->add_option("--eps", num_eps, "Target epsilon for tail bounds");
    numeric_cmd->add_option("--prec-bits", num_prec, "Working precision in bits (>= 64)");
    numeric_cmd->add_option("--seed", num_seed, "Campaign seed");
    numeric_cmd->add_option("--trials", num_trials, "Sample points");
    numeric_cmd->add_option("--json", num_json, "Write the JSON report to this path");

    // ---- manifest ----
    auto* manifest_cmd = app.add_subcommand("manifest", "Emit the catalog manifest as JSON");
    std::string manifest_out;
    manifest_cmd->add_option("--out", manifest_out, "Output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list_cmd->parsed()) {
            auto infos = qabel::list_identities();
            if (!list_kind.empty()) {
                std::erase_if(infos, [&](const qabel::IdentityInfo& i) {
                    return qabel::kind_name(i.kind) != list_kind;
                });
            }
            if (list_json) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& i : infos)
                    arr.push_back({{"id", i.id},
                                   {"kind", qabel::kind_name(i.kind)},
                                   {"anchor", i.paper_anchor},
                                   {"symbols", i.free_symbols}});
                std::cout << arr.dump(2) << std::endl;
            } else {
                for (const auto& i : infos)
                    std::cout << i.id << "  [" << qabel::kind_name(i.kind) << "]  " << i.paper_anchor
                              << std::endl;
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            qabel::OverrideMap overrides;
            qabel::CampaignConfig cfg;
            if (!v_config.empty()) {
                const ConfigFile cf = load_config(v_config);
                overrides = cf.per_id;
                if (cf.defaults.trials > 0) cfg.trials = cf.defaults.trials;
                if (cf.defaults.n_max >= 0) cfg.n_max = cf.defaults.n_max;
                if (cf.defaults.eps > 0) cfg.policy.target_eps = cf.defaults.eps;
                if (cf.defaults.prec_bits >= 64) cfg.policy.precision_bits = cf.defaults.prec_bits;
            }
            cfg.seed = v_seed;
            cfg.den_bound = v_den;
            if (verify_cmd->count("--trials")) cfg.trials = v_trials;
            if (verify_cmd->count("--n-max")) cfg.n_max = v_nmax;
            std::vector<std::string> ids;
            if (verify_ids.size() == 1 && verify_ids[0] == "all") {
                for (const auto& e : Catalog::instance().entries()) ids.push_back(e.id);
            } else {
                for (const auto& id : verify_ids) {
                    if (!Catalog::instance().find(id)) {
                        std::cerr << "unknown identity id '" << id << "'" << std::endl;
                        return 2;
                    }
                    ids.push_back(Catalog::instance().at(id).id);
                }
            }
            const int jobs = v_jobs > 0 ? v_jobs : static_cast<int>(std::thread::hardware_concurrency());
            const auto reports = qabel::run_campaigns(ids, cfg, jobs, true, overrides);
            return emit_reports(reports, cfg.seed, v_json);
        }

        if (numeric_cmd->parsed()) {
            const qabel::IdentityEntry* e = Catalog::instance().find(num_id);
            if (!e) {
                std::cerr << "unknown identity id '" << num_id << "'" << std::endl;
                return 2;
            }
            if (e->kind != IdentityKind::infinite) {
                std::cerr << e->id << " is not an infinite identity" << std::endl;
                return 2;
            }
            if (num_prec < 64) {
                std::cerr << "--prec-bits must be >= 64" << std::endl;
                return 2;
            }
            qabel::CampaignConfig cfg;
            cfg.seed = num_seed;
            cfg.trials = num_trials;
            cfg.policy.target_eps = num_eps;
            cfg.policy.precision_bits = num_prec;
            const auto rep = qabel::run_entry_campaign(*e, cfg);
            return emit_reports({rep}, cfg.seed, num_json);
        }

        if (manifest_cmd->parsed()) {
            const std::string text = qabel::manifest_json();
            if (manifest_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(manifest_out, std::ios::binary);
                out << text;
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << std::endl;
        return 2;
    }
    return 0;
}
