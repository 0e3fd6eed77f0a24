// Command-line interface: decomposition and coding queries, identity
// verification runs, and family enumeration dumps. All output is exact; with
// a fixed seed and fixed caps the JSON output is byte-identical across runs.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcores/enumerate.hpp"
#include "qcores/identities.hpp"
#include "qcores/littlewood.hpp"
#include "qcores/parallel.hpp"
#include "qcores/partition.hpp"
#include "qcores/vcoding.hpp"

using nlohmann::ordered_json;
using namespace qcores;

namespace {

struct Options {
    bool text = false;
    bool timings = false;
    std::string out_path;
    int workers = default_workers();
    long max_cells = 2'000'000;
};

void emit(const Options& opt, const ordered_json& j, const std::string& text_form) {
    const std::string payload = opt.text ? text_form : j.dump(2) + "\n";
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        out << payload;
    }
    std::cout << payload;
}

int fail_usage(const Options& opt, const std::string& message) {
    ordered_json j;
    j["error"] = message;
    emit(opt, j, "error: " + message + "\n");
    return 2;
}

// T caps are given as "12" or "7/2"; returns steps for the given denominator.
int parse_grade_cap(const std::string& text, int denom) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return std::stoi(text) * denom;
    const int num = std::stoi(text.substr(0, slash));
    const int den = std::stoi(text.substr(slash + 1));
    if (den != denom)
        throw std::invalid_argument("cap denominator must be " + std::to_string(denom));
    return num;
}

ordered_json decomposition_json(const Partition& p, int t) {
    const Decomposition d = decompose(p, t);
    const CoreVector cv = core_vector(d.core, t);
    ordered_json j;
    j["partition"] = p.to_string();
    j["t"] = t;
    j["core"] = d.core.to_string();
    j["quotient"] = ordered_json::array();
    long quotient_total = 0;
    for (const Partition& nu : d.quotient) {
        j["quotient"].push_back(nu.to_string());
        quotient_total += nu.weight();
    }
    j["vector"] = cv.n;
    j["weights"]["lambda"] = p.weight();
    j["weights"]["core"] = d.core.weight();
    j["weights"]["quotient_total"] = quotient_total;
    return j;
}

ordered_json vcoding_json(const Partition& p, int t, Family family) {
    const VCoding V = vcoding_of(p, t, family);
    ordered_json j;
    j["partition"] = p.to_string();
    j["g"] = V.g;
    j["t"] = V.t;
    j["family"] = family == Family::DD ? "dd" : "sc";
    j["beta"] = beta_vector(p, V.g);
    j["v"] = V.v;
    if (family == Family::DD) {
        std::vector<long long> r;
        for (int k = 0; k < V.t; ++k) r.push_back(V.r(k));
        j["r"] = r;
    }
    j["mu"] = mu_from_vcoding(V).to_string();
    bool weight_check = core_from_vcoding(V) == p;
    if (family == Family::DD)
        weight_check = weight_check && weight_from_vcoding(V) == Rat(static_cast<long>(p.weight()));
    j["weight_check"] = weight_check;
    return j;
}

int run_verify(const Options& opt, const std::string& name, const VerificationGrid& grid) {
    // Crude cost guard: refuse oversized grids instead of thrashing.
    if (grid.T_cap > 64 || grid.q_cap > 128 || grid.max_weight > 400 ||
        static_cast<long>(grid.T_cap + 1) * (grid.q_cap + 1) > opt.max_cells)
        return fail_usage(opt, "refusing to run: caps exceed the configured budget "
                               "(see --max-cells)");

    VerificationReport rep;
    if (name == "no") {
        rep = verify_nekrasov_okounkov(grid.T_cap, grid.workers);
    } else if (name == "hande") {
        rep = verify_hande(grid.T_cap, grid.q_cap, grid.workers);
    } else if (name == "petreolle") {
        rep = verify_petreolle(grid.T_cap, grid.workers);
    } else if (name == "macdonald-c") {
        rep = verify_macdonald_c(grid.t, grid.T_cap);
    } else if (name == "thm11") {
        rep = verify_thm11(grid.t, grid.T_cap, grid.workers);
    } else if (name == "thm12") {
        rep = verify_thm12(grid.t, grid.T_cap, grid.workers);
    } else if (name == "noc") {
        rep = verify_noc(grid.T_cap, grid.q_cap, grid.workers);
    } else if (name == "nosc") {
        rep = verify_nosc(grid.T_cap, grid.q_cap, grid.workers);
    } else if (name == "schurinter") {
        rep = verify_schurinter(grid.t, grid.max_weight);
    } else if (name == "tau-product") {
        rep = verify_tau_product(grid.t, grid.max_weight, grid.n_random, grid.seed, grid.workers);
    } else if (name == "lemma35") {
        rep = verify_lemma35(grid.t, grid.max_weight);
    } else if (name == "lemma36") {
        rep = verify_lemma36(grid.t, grid.max_weight);
    } else if (name == "structure-dd") {
        rep = verify_dd_structure(grid.t, grid.max_weight, grid.workers);
    } else {
        return fail_usage(opt, "unknown identity '" + name + "'");
    }
    emit(opt, rep.to_json(opt.timings),
         rep.summary_line() + "  (" + std::to_string(static_cast<long>(rep.elapsed_ms)) + " ms)\n");
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition combinatorics and identity verification"};
    app.set_config("--config");
    Options opt;
    bool force_json = false;
    app.add_flag("--text", opt.text, "human-readable output instead of JSON");
    app.add_flag("--json", force_json, "JSON output (the default)");
    app.add_flag("--timings", opt.timings, "include elapsed_ms in JSON reports");
    app.add_option("--out", opt.out_path, "also write the output to this file");
    app.add_option("--workers", opt.workers, "worker threads")
        ->envname("QCORES_WORKERS");
    app.add_option("--max-cells", opt.max_cells, "budget guard for verification grids");
    app.require_subcommand(1);

    std::string partition_text, family_text = "dd", identity, enum_family, mode = "sieve",
                format = "json", T_cap = "-1";
    int t = -1, g = 0, q_cap = -1, n_random = 20;
    long max_weight = -1;
    std::uint64_t seed = 0;

    auto* cmd_decompose = app.add_subcommand("decompose", "Littlewood decomposition of a partition");
    cmd_decompose->fallthrough();
    cmd_decompose->add_option("partition", partition_text, "comma-separated parts; empty for the empty partition");
    cmd_decompose->add_option("--t", t, "modulus (>= 2)")->required();
    auto* cmd_core = app.add_subcommand("core", "t-core of a partition");
    cmd_core->fallthrough();
    cmd_core->add_option("partition", partition_text);
    cmd_core->add_option("--t", t)->required();
    auto* cmd_quotient = app.add_subcommand("quotient", "t-quotient of a partition");
    cmd_quotient->fallthrough();
    cmd_quotient->add_option("partition", partition_text);
    cmd_quotient->add_option("--t", t)->required();
    auto* cmd_vector = app.add_subcommand("vector", "integer vector of the t-core");
    cmd_vector->fallthrough();
    cmd_vector->add_option("partition", partition_text);
    cmd_vector->add_option("--t", t)->required();

    auto* cmd_vcoding = app.add_subcommand("vcoding", "V-coding of a DD/SC core");
    cmd_vcoding->fallthrough();
    cmd_vcoding->add_option("partition", partition_text);
    cmd_vcoding->add_option("--t", t, "rank")->required();
    cmd_vcoding->add_option("--g", g, "modulus (2t+2 for dd, 2t for sc); derived when omitted");
    cmd_vcoding->add_option("--family", family_text, "dd|sc");

    auto* cmd_verify = app.add_subcommand("verify", "expand both sides of an identity and compare");
    cmd_verify->fallthrough();
    cmd_verify->add_option("identity", identity,
                           "no|hande|petreolle|macdonald-c|thm11|thm12|noc|nosc|"
                           "schurinter|tau-product|lemma35|lemma36|structure-dd")
        ->required();
    cmd_verify->add_option("--t", t, "rank parameter");
    cmd_verify->add_option("--T-cap", T_cap, "T truncation (integer, or n/2 for half grades)");
    cmd_verify->add_option("--q-cap", q_cap, "q truncation");
    cmd_verify->add_option("--max-weight", max_weight, "case sweep bound");
    cmd_verify->add_option("--n-random", n_random, "random tau samples per core");
    cmd_verify->add_option("--seed", seed, "seed for randomized tau maps");

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list a partition family up to a weight");
    cmd_enumerate->fallthrough();
    cmd_enumerate->add_option("family", enum_family, "p|sc|dd|core|dd-core|sc-core")->required();
    cmd_enumerate->add_option("--max", max_weight, "maximum weight")->required();
    cmd_enumerate->add_option("--t", t, "modulus for 'core'");
    cmd_enumerate->add_option("--g", g, "modulus for 'dd-core'/'sc-core'");
    cmd_enumerate->add_option("--mode", mode, "sieve|vector|both (modular core families)");
    cmd_enumerate->add_option("--format", format, "json|lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (force_json) opt.text = false;

    try {
        if (cmd_decompose->parsed() || cmd_core->parsed() || cmd_quotient->parsed() ||
            cmd_vector->parsed()) {
            if (t < 2) return fail_usage(opt, "--t must be >= 2");
            const Partition p = Partition::parse(partition_text);
            const ordered_json full = decomposition_json(p, t);
            ordered_json j;
            std::string text;
            if (cmd_core->parsed()) {
                j["core"] = full["core"];
                text = full["core"].get<std::string>() + "\n";
            } else if (cmd_quotient->parsed()) {
                j["quotient"] = full["quotient"];
                text = full["quotient"].dump() + "\n";
            } else if (cmd_vector->parsed()) {
                j["vector"] = full["vector"];
                text = full["vector"].dump() + "\n";
            } else {
                j = full;
                text = full.dump(2) + "\n";
            }
            emit(opt, j, text);
            return 0;
        }
        if (cmd_vcoding->parsed()) {
            if (t < 1) return fail_usage(opt, "--t must be >= 1");
            Family family;
            if (family_text == "dd")
                family = Family::DD;
            else if (family_text == "sc")
                family = Family::SC;
            else
                return fail_usage(opt, "--family must be dd or sc");
            const int expect_g = family == Family::DD ? 2 * t + 2 : 2 * t;
            if (g != 0 && g != expect_g)
                return fail_usage(opt, "--g inconsistent with --t/--family (expected " +
                                           std::to_string(expect_g) + ")");
            const Partition p = Partition::parse(partition_text);
            const ordered_json j = vcoding_json(p, t, family);
            emit(opt, j, j.dump(2) + "\n");
            return 0;
        }
        if (cmd_verify->parsed()) {
            // Per-identity defaults from the acceptance grid; only options the
            // user did not pass are defaulted.
            auto def = [&](int dt, const std::string& dT, int dq, long dw) {
                if (cmd_verify->count("--t") == 0) t = dt;
                if (cmd_verify->count("--T-cap") == 0) T_cap = dT;
                if (cmd_verify->count("--q-cap") == 0) q_cap = dq;
                if (cmd_verify->count("--max-weight") == 0) max_weight = dw;
            };
            if (identity == "no") def(1, "12", 0, 0);
            else if (identity == "hande") def(1, "4", 8, 0);
            else if (identity == "petreolle") def(1, "8", 0, 0);
            else if (identity == "macdonald-c") def(1, "8", 0, 0);
            else if (identity == "thm11") def(1, "6", 0, 0);
            else if (identity == "thm12") def(1, "6/2", 0, 0);
            else if (identity == "noc") def(1, "5", 12, 0);
            else if (identity == "nosc") def(1, "7/2", 12, 0);
            else if (identity == "schurinter") def(1, "0", 0, 40);
            else if (identity == "tau-product") def(1, "0", 0, 60);
            else if (identity == "lemma35" || identity == "lemma36") def(1, "0", 0, 60);
            else if (identity == "structure-dd") def(3, "0", 0, 24);
            VerificationGrid grid;
            grid.t = t;
            grid.T_cap = parse_grade_cap(T_cap, (identity == "nosc" || identity == "thm12") ? 2 : 1);
            grid.q_cap = q_cap;
            grid.max_weight = max_weight;
            grid.n_random = n_random;
            grid.seed = seed;
            grid.workers = opt.workers;
            return run_verify(opt, identity, grid);
        }
        if (cmd_enumerate->parsed()) {
            const PFamily fam = family_from_string(enum_family);
            int modulus = 0;
            if (fam == PFamily::Core) {
                if (t < 1) return fail_usage(opt, "family 'core' needs --t");
                modulus = t;
            } else if (fam == PFamily::DDCore || fam == PFamily::SCCore) {
                if (g < 2) return fail_usage(opt, "modular core families need --g");
                modulus = g;
            }
            std::vector<Partition> list;
            if (mode == "sieve") {
                list = enumerate_family_sieve(fam, modulus, max_weight, opt.workers);
            } else if (mode == "vector" || mode == "both") {
                if (fam == PFamily::DDCore) {
                    if (g % 2 != 0 || g < 4)
                        return fail_usage(opt, "dd-core vector mode needs even --g >= 4");
                    list = enumerate_dd_cores_by_vector(g / 2 - 1, max_weight);
                } else if (fam == PFamily::SCCore) {
                    if (g % 2 != 0 || g < 2)
                        return fail_usage(opt, "sc-core vector mode needs even --g >= 2");
                    list = enumerate_sc_cores_by_vector(g / 2, max_weight);
                } else {
                    return fail_usage(opt, "vector mode applies to dd-core/sc-core only");
                }
                if (mode == "both") {
                    const auto sieved = enumerate_family_sieve(fam, modulus, max_weight, opt.workers);
                    if (!(sieved == list)) {
                        ordered_json j;
                        j["error"] = "sieve and vector enumerations disagree";
                        j["sieve_count"] = sieved.size();
                        j["vector_count"] = list.size();
                        emit(opt, j, "enumeration mismatch\n");
                        return 1;
                    }
                }
            } else {
                return fail_usage(opt, "--mode must be sieve, vector or both");
            }
            if (format == "lines") {
                std::string text;
                for (const Partition& p : list) text += p.to_string() + "\n";
                ordered_json j = ordered_json::array();
                for (const Partition& p : list) j.push_back(p.to_string());
                emit(opt, j, text);
            } else {
                ordered_json j = ordered_json::array();
                for (const Partition& p : list) j.push_back(p.to_string());
                emit(opt, j, j.dump(2) + "\n");
            }
            return 0;
        }
    } catch (const std::exception& e) {
        return fail_usage(opt, e.what());
    }
    return 2;
}
