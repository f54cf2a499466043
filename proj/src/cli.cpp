#include "prefatt/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "prefatt/batch.hpp"
#include "prefatt/coupling.hpp"
#include "prefatt/graph.hpp"
#include "prefatt/limits.hpp"
#include "prefatt/remy.hpp"
#include "prefatt/rng.hpp"
#include "prefatt/urn.hpp"
#include "prefatt/verify.hpp"

namespace prefatt {

namespace {

int env_threads() {
    const char* v = std::getenv("PREFATT_THREADS");
    if (v == nullptr) return 1;
    const int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

// Replicate i always uses stream (master_seed, i); threads only decide who
// computes it, so batches are byte-identical at any thread count.
template <typename Body>
void parallel_replicates(std::int64_t reps, int threads, Body&& body) {
    if (threads <= 1 || reps <= 1) {
        for (std::int64_t i = 0; i < reps; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    const int nt = static_cast<int>(std::min<std::int64_t>(threads, reps));
    pool.reserve(static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (std::int64_t i; (i = next.fetch_add(1)) < reps;) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (!path.empty() && path != "-") {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file: " + path);
            stream = &file;
        }
    }
};

// A computed batch: integer or floating cells, one row per replicate.
struct Batch {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<bool> integer_column;

    std::string cell(std::size_t r, std::size_t c) const {
        const double v = rows[r][c];
        if (integer_column[c]) return std::to_string(static_cast<std::int64_t>(v));
        return format_double(v);
    }
};

void emit_batch(const Batch& batch, const RunMetadata& meta, const std::string& format,
                std::ostream& out) {
    if (format == "csv") {
        write_csv_header(out, meta, batch.columns);
        for (std::size_t r = 0; r < batch.rows.size(); ++r) {
            for (std::size_t c = 0; c < batch.columns.size(); ++c) {
                out << (c ? "," : "") << batch.cell(r, c);
            }
            out << "\n";
        }
        return;
    }
    nlohmann::json j;
    j["schema"] = "batch/1";
    j["version"] = std::string(kVersion);
    j["tool"] = meta.tool;
    j["config_hash"] = format_hash(meta.config_hash());
    j["master_seed"] = meta.master_seed;
    j["columns"] = batch.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < batch.rows.size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < batch.columns.size(); ++c) {
            if (batch.integer_column[c]) {
                row.push_back(static_cast<std::int64_t>(batch.rows[r][c]));
            } else {
                row.push_back(batch.rows[r][c]);
            }
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
}

std::string join_weights(const std::vector<std::int64_t>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

// ----------------------------------------------------------------- simulate

struct SimulateConfig {
    std::string model = "L";
    int ell = 1;
    std::vector<std::int64_t> seed_weights = {1};
    std::int64_t n = 0;
    int r = 1;
    std::int64_t reps = 1;
    std::uint64_t master_seed = 20170819;
    int threads = env_threads();
    int lump_ell = 0;
    bool lump_include_seed = false;
    std::string out;
    std::string format = "csv";
};

int cmd_simulate(const SimulateConfig& cfg) {
    std::ostringstream config;
    config << "model=" << cfg.model << " ell=" << cfg.ell
           << " seed-weights=" << join_weights(cfg.seed_weights) << " n=" << cfg.n
           << " r=" << cfg.r << " reps=" << cfg.reps << " lump-ell=" << cfg.lump_ell
           << " lump-include-seed=" << (cfg.lump_include_seed ? 1 : 0)
           << " format=" << cfg.format;
    const RunMetadata meta{"simulate", config.str(), cfg.master_seed, cfg.threads};

    Batch batch;
    batch.rows.assign(static_cast<std::size_t>(cfg.reps),
                      std::vector<double>(static_cast<std::size_t>(cfg.r) + 3, 0.0));
    const bool urn = cfg.model == "urn";
    batch.columns = {"rep", "n"};
    for (int k = 1; k <= cfg.r; ++k)
        batch.columns.push_back((urn ? "m" : "d") + std::to_string(k));
    if (!urn) batch.columns.push_back("total_weight");
    batch.integer_column.assign(batch.columns.size(), true);

    if (urn) {
        const InfiniteUrnConfig ucfg{cfg.ell, cfg.seed_weights};
        // Surface an impossible r before spending time on replicates.
        {
            RngStream probe(cfg.master_seed, 0);
            simulate_infinite_urn(ucfg, cfg.n, cfg.r, probe);
        }
        parallel_replicates(cfg.reps, cfg.threads, [&](std::int64_t i) {
            RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(i));
            const CumulativeCounts cc = simulate_infinite_urn(ucfg, cfg.n, cfg.r, rng);
            std::vector<double>& row = batch.rows[static_cast<std::size_t>(i)];
            row[0] = static_cast<double>(i);
            row[1] = static_cast<double>(cc.n);
            for (int k = 0; k < cfg.r; ++k)
                row[static_cast<std::size_t>(k) + 2] =
                    static_cast<double>(cc.m[static_cast<std::size_t>(k)]);
        });
        for (auto& row : batch.rows) row.pop_back();
    } else {
        if (cfg.model != "N" && cfg.model != "L")
            throw std::invalid_argument("model must be N, L, or urn");
        const ModelVariant model{cfg.model == "N" ? ModelKind::N : ModelKind::L,
                                 cfg.lump_ell > 0 ? 1 : cfg.ell};
        const SeedGraph seed{cfg.seed_weights};
        {
            RngStream probe(cfg.master_seed, 0);
            if (cfg.lump_ell > 0) {
                simulate_lumped(model, seed, cfg.lump_ell, cfg.n, cfg.r, probe,
                                cfg.lump_include_seed);
            } else {
                simulate(model, seed, cfg.n, cfg.r, probe);
            }
        }
        parallel_replicates(cfg.reps, cfg.threads, [&](std::int64_t i) {
            RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(i));
            const WeightTrace tr =
                cfg.lump_ell > 0
                    ? simulate_lumped(model, seed, cfg.lump_ell, cfg.n, cfg.r, rng,
                                      cfg.lump_include_seed)
                    : simulate(model, seed, cfg.n, cfg.r, rng);
            std::vector<double>& row = batch.rows[static_cast<std::size_t>(i)];
            row[0] = static_cast<double>(i);
            row[1] = static_cast<double>(tr.n);
            for (int k = 0; k < cfg.r; ++k)
                row[static_cast<std::size_t>(k) + 2] =
                    static_cast<double>(tr.tracked[static_cast<std::size_t>(k)]);
            row[static_cast<std::size_t>(cfg.r) + 2] = static_cast<double>(tr.total_weight);
        });
    }

    OutputTarget target(cfg.out);
    emit_batch(batch, meta, cfg.format, *target.stream);
    return 0;
}

// ------------------------------------------------------------- sample-limit

struct SampleLimitConfig {
    std::string rep = "beta-product";
    std::string model = "L";
    int ell = 1;
    std::vector<std::int64_t> seed_weights;
    std::int64_t d1 = 0;
    int r = 0;
    int r_trunc = 64;
    bool max_mode = false;
    std::int64_t reps = 1;
    std::uint64_t master_seed = 20170819;
    int threads = env_threads();
    std::string out;
    std::string format = "csv";
};

LimitVariant parse_variant(const std::string& model) {
    if (model == "N") return LimitVariant::ModelN;
    if (model == "L") return LimitVariant::ModelL;
    if (model == "urn") return LimitVariant::Urn;
    throw std::invalid_argument("model must be N, L, or urn");
}

int cmd_sample_limit(const SampleLimitConfig& cfg) {
    std::ostringstream config;
    config << "rep=" << cfg.rep << " model=" << cfg.model << " ell=" << cfg.ell
           << " seed-weights=" << join_weights(cfg.seed_weights) << " d1=" << cfg.d1
           << " r=" << cfg.r << " r-trunc=" << cfg.r_trunc << " max=" << (cfg.max_mode ? 1 : 0)
           << " reps=" << cfg.reps << " format=" << cfg.format;
    const RunMetadata meta{"sample-limit", config.str(), cfg.master_seed, cfg.threads};

    const bool gamma_family = cfg.rep == "gamma-sum" || cfg.rep == "ppp";
    std::int64_t d1 = cfg.d1;
    if (gamma_family) {
        if (cfg.rep == "ppp") {
            if (cfg.d1 != 0 && cfg.d1 != cfg.ell + 1)
                throw std::invalid_argument("ppp fixes d1 = ell + 1");
            d1 = cfg.ell + 1;
        } else if (d1 == 0) {
            if (cfg.seed_weights.size() == 1) {
                d1 = cfg.seed_weights[0];
            } else {
                throw std::invalid_argument(
                    "gamma-sum needs --d1 or a single-vertex --seed-weights");
            }
        } else if (!cfg.seed_weights.empty() &&
                   (cfg.seed_weights.size() != 1 || cfg.seed_weights[0] != d1)) {
            throw std::invalid_argument(
                "gamma-sum needs --d1 or a single-vertex --seed-weights");
        }
    } else if (cfg.rep != "beta-product" && cfg.rep != "dirichlet") {
        throw std::invalid_argument("rep must be beta-product, gamma-sum, dirichlet, or ppp");
    }

    Batch batch;
    if (cfg.max_mode) {
        if (cfg.rep == "dirichlet")
            throw std::invalid_argument("--max supports beta-product and gamma-sum only");
        batch.columns = {"rep", "max_y"};
        batch.integer_column = {true, false};
        batch.rows.assign(static_cast<std::size_t>(cfg.reps), std::vector<double>(2, 0.0));
        if (gamma_family) {
            parallel_replicates(cfg.reps, cfg.threads, [&](std::int64_t i) {
                RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(i));
                batch.rows[static_cast<std::size_t>(i)] = {
                    static_cast<double>(i),
                    sample_max_limit_gamma(d1, cfg.ell, cfg.r_trunc, rng)};
            });
        } else {
            const LimitSpec spec =
                limit_params(parse_variant(cfg.model), cfg.ell, cfg.seed_weights,
                             std::max(cfg.r, static_cast<int>(cfg.seed_weights.size())));
            parallel_replicates(cfg.reps, cfg.threads, [&](std::int64_t i) {
                RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(i));
                batch.rows[static_cast<std::size_t>(i)] = {
                    static_cast<double>(i), sample_max_limit(spec, cfg.r_trunc, rng)};
            });
        }
        OutputTarget target(cfg.out);
        emit_batch(batch, meta, cfg.format, *target.stream);
        return 0;
    }

    int r = cfg.r;
    LimitSpec spec;
    if (cfg.rep == "dirichlet") {
        const int s = static_cast<int>(cfg.seed_weights.size());
        if (r == 0) r = s;
        if (r != s)
            throw std::invalid_argument("dirichlet requires r equal to the seed size");
        spec = limit_params(parse_variant(cfg.model), cfg.ell, cfg.seed_weights, r);
    } else if (cfg.rep == "beta-product") {
        if (r < 1) throw std::invalid_argument("beta-product requires --r >= 1");
        spec = limit_params(parse_variant(cfg.model), cfg.ell, cfg.seed_weights, r);
    } else {
        if (r < 1) throw std::invalid_argument(cfg.rep + " requires --r >= 1");
    }

    batch.columns = {"rep"};
    for (int k = 1; k <= r; ++k) batch.columns.push_back("z" + std::to_string(k));
    for (int k = 1; k <= r; ++k) batch.columns.push_back("y" + std::to_string(k));
    batch.integer_column.assign(batch.columns.size(), false);
    batch.integer_column[0] = true;
    batch.rows.assign(static_cast<std::size_t>(cfg.reps),
                      std::vector<double>(batch.columns.size(), 0.0));
    parallel_replicates(cfg.reps, cfg.threads, [&](std::int64_t i) {
        RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(i));
        const LimitVector v = gamma_family
                                  ? sample_limit_gamma_rep(d1, cfg.ell, r, rng)
                                  : (cfg.rep == "dirichlet" ? sample_limit_dirichlet_rep(spec, rng)
                                                            : sample_limit_z(spec, rng));
        std::vector<double>& row = batch.rows[static_cast<std::size_t>(i)];
        row[0] = static_cast<double>(i);
        for (int k = 0; k < r; ++k) {
            row[static_cast<std::size_t>(k) + 1] = v.z[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k + r) + 1] = v.y[static_cast<std::size_t>(k)];
        }
    });
    OutputTarget target(cfg.out);
    emit_batch(batch, meta, cfg.format, *target.stream);
    return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyCliConfig {
    std::string suite;
    VerifyOptions opts;
    std::string out;
};

int cmd_verify(const VerifyCliConfig& cfg) {
    SuiteResult result;
    try {
        result = run_suite(cfg.suite, cfg.opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::ostringstream config;
    config << "suite=" << cfg.suite << " ell=" << cfg.opts.ell_filter
           << " grid-max=" << cfg.opts.grid_max;
    const RunMetadata meta{"verify", config.str(), cfg.opts.master_seed, cfg.opts.threads};

    nlohmann::json report;
    report["schema"] = "verify-report/1";
    report["version"] = std::string(kVersion);
    report["suite"] = result.suite;
    report["config_hash"] = format_hash(meta.config_hash());
    report["master_seed"] = cfg.opts.master_seed;
    report["elapsed_seconds"] = result.elapsed_seconds;
    report["pass"] = result.pass();
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : result.checks) {
        checks.push_back({{"test_name", c.name},
                          {"statistic", c.statistic},
                          {"threshold", c.threshold},
                          {"pass", c.pass},
                          {"n_samples", c.n_samples},
                          {"seed", c.seed}});
        std::cerr << (c.pass ? "PASS" : "FAIL") << " " << result.suite << "/" << c.name
                  << " statistic=" << format_double(c.statistic)
                  << " threshold=" << format_double(c.threshold) << "\n";
    }
    report["checks"] = std::move(checks);

    OutputTarget target(cfg.out);
    *target.stream << report.dump(2) << "\n";
    return result.pass() ? 0 : 1;
}

// --------------------------------------------------------------- remy-trace

struct RemyTraceConfig {
    std::int64_t n = 1;
    int k = 3;
    std::int64_t crosscheck_every = 0;
    std::uint64_t master_seed = 20170819;
    std::string out;
    std::string format = "csv";
};

int cmd_remy_trace(const RemyTraceConfig& cfg) {
    std::ostringstream config;
    config << "n=" << cfg.n << " k=" << cfg.k << " crosscheck-every=" << cfg.crosscheck_every
           << " format=" << cfg.format;
    const RunMetadata meta{"remy-trace", config.str(), cfg.master_seed, 1};

    RngStream rng(cfg.master_seed, 0);
    const CoupledGrowth growth = coupled_remy_modelL(cfg.n, cfg.k, rng, cfg.crosscheck_every);

    Batch batch;
    batch.columns = {"step"};
    for (int j = 1; j <= cfg.k; ++j) batch.columns.push_back("t" + std::to_string(j));
    for (int j = 1; j <= cfg.k; ++j) batch.columns.push_back("w" + std::to_string(j));
    batch.integer_column.assign(batch.columns.size(), true);
    batch.rows.reserve(growth.span_trace.size());
    for (std::size_t step = 0; step < growth.span_trace.size(); ++step) {
        std::vector<double> row;
        row.reserve(batch.columns.size());
        row.push_back(static_cast<double>(step));
        for (int j = 0; j < cfg.k; ++j)
            row.push_back(static_cast<double>(growth.span_trace[step][static_cast<std::size_t>(j)]));
        for (int j = 0; j < cfg.k; ++j)
            row.push_back(
                static_cast<double>(growth.weight_trace[step][static_cast<std::size_t>(j)]));
        batch.rows.push_back(std::move(row));
    }
    OutputTarget target(cfg.out);
    emit_batch(batch, meta, cfg.format, *target.stream);
    if (growth.violations != 0) {
        std::cerr << "error: coupled traces diverged (" << growth.violations << " entries)\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------- sample-coupling

struct SampleCouplingConfig {
    int b = 1;
    int w = 1;
    std::int64_t n = 0;
    std::int64_t reps = 1;
    std::uint64_t master_seed = 20170819;
    int threads = env_threads();
    std::string out;
    std::string format = "csv";
};

int cmd_sample_coupling(const SampleCouplingConfig& cfg) {
    std::ostringstream config;
    config << "b=" << cfg.b << " w=" << cfg.w << " n=" << cfg.n << " reps=" << cfg.reps
           << " format=" << cfg.format;
    const RunMetadata meta{"sample-coupling", config.str(), cfg.master_seed, cfg.threads};

    Batch batch;
    batch.columns = {"rep", "x", "y", "bound", "violation"};
    batch.integer_column = {true, true, false, false, true};
    batch.rows.assign(static_cast<std::size_t>(cfg.reps), std::vector<double>(5, 0.0));
    parallel_replicates(cfg.reps, cfg.threads, [&](std::int64_t i) {
        RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(i));
        const CoupledPair p = couple_polya_beta(cfg.b, cfg.w, cfg.n, rng);
        batch.rows[static_cast<std::size_t>(i)] = {static_cast<double>(i),
                                                   static_cast<double>(p.x), p.y, p.bound(),
                                                   p.violation ? 1.0 : 0.0};
    });
    OutputTarget target(cfg.out);
    emit_batch(batch, meta, cfg.format, *target.stream);
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Proportional attachment growth, urn, and limit-law toolkit"};
    app.require_subcommand(1);

    SimulateConfig sim;
    CLI::App* simulate = app.add_subcommand("simulate", "Run replicated growth processes");
    simulate->add_option("--model", sim.model, "N, L, or urn")->capture_default_str();
    simulate->add_option("--ell", sim.ell, "edges per arrival")->capture_default_str();
    simulate->add_option("--seed-weights", sim.seed_weights, "initial weights")
        ->expected(-1);
    simulate->add_option("--n", sim.n, "steps")->required();
    simulate->add_option("--r", sim.r, "tracked coordinates")->capture_default_str();
    simulate->add_option("--reps", sim.reps, "replicates")->capture_default_str();
    simulate->add_option("--master-seed", sim.master_seed, "seed")->capture_default_str();
    simulate->add_option("--threads", sim.threads, "worker threads")->capture_default_str();
    simulate->add_option("--lump-ell", sim.lump_ell, "collapse blocks of this size (ell=1 base)");
    simulate->add_flag("--lump-include-seed", sim.lump_include_seed,
                       "first lump starts at the seed");
    simulate->add_option("--out", sim.out, "output path (default stdout)");
    simulate->add_option("--format", sim.format, "csv or json")->capture_default_str();

    SampleLimitConfig sl;
    CLI::App* sample_limit = app.add_subcommand("sample-limit", "Draw from the limit laws");
    sample_limit->add_option("--rep", sl.rep, "beta-product, gamma-sum, dirichlet, or ppp")
        ->capture_default_str();
    sample_limit->add_option("--model", sl.model, "N, L, or urn")->capture_default_str();
    sample_limit->add_option("--ell", sl.ell, "edges per arrival")->capture_default_str();
    sample_limit->add_option("--seed-weights", sl.seed_weights, "initial weights")
        ->expected(-1);
    sample_limit->add_option("--d1", sl.d1, "single-seed weight (gamma-sum/ppp)");
    sample_limit->add_option("--r", sl.r, "coordinates");
    sample_limit->add_option("--r-trunc", sl.r_trunc, "truncation depth for --max")
        ->capture_default_str();
    sample_limit->add_flag("--max", sl.max_mode, "sample the running maximum");
    sample_limit->add_option("--reps", sl.reps, "replicates")->capture_default_str();
    sample_limit->add_option("--master-seed", sl.master_seed, "seed")->capture_default_str();
    sample_limit->add_option("--threads", sl.threads, "worker threads")->capture_default_str();
    sample_limit->add_option("--out", sl.out, "output path (default stdout)");
    sample_limit->add_option("--format", sl.format, "csv or json")->capture_default_str();

    VerifyCliConfig vc;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", vc.suite, "suite name")->required();
    verify->add_option("--master-seed", vc.opts.master_seed, "seed")->capture_default_str();
    verify->add_option("--threads", vc.opts.threads, "worker threads")->capture_default_str();
    verify->add_option("--ell", vc.opts.ell_filter, "restrict rate checks to one ell");
    verify->add_option("--grid-max", vc.opts.grid_max, "coupling grid upper bound")
        ->capture_default_str();
    verify->add_option("--out", vc.out, "report path (default stdout)");

    RemyTraceConfig rt;
    CLI::App* remy_trace =
        app.add_subcommand("remy-trace", "Coupled tree growth / chain weight trace");
    remy_trace->add_option("--n", rt.n, "steps")->required();
    remy_trace->add_option("--k", rt.k, "tracked labels")->capture_default_str();
    remy_trace->add_option("--crosscheck-every", rt.crosscheck_every,
                           "rebuild spanning sizes every this many steps");
    remy_trace->add_option("--master-seed", rt.master_seed, "seed")->capture_default_str();
    remy_trace->add_option("--out", rt.out, "output path (default stdout)");
    remy_trace->add_option("--format", rt.format, "csv or json")->capture_default_str();

    SampleCouplingConfig sc;
    CLI::App* sample_coupling =
        app.add_subcommand("sample-coupling", "Joint urn / beta companion draws");
    sample_coupling->add_option("--b", sc.b, "black balls")->capture_default_str();
    sample_coupling->add_option("--w", sc.w, "white balls")->capture_default_str();
    sample_coupling->add_option("--n", sc.n, "draws")->required();
    sample_coupling->add_option("--reps", sc.reps, "replicates")->capture_default_str();
    sample_coupling->add_option("--master-seed", sc.master_seed, "seed")->capture_default_str();
    sample_coupling->add_option("--threads", sc.threads, "worker threads")
        ->capture_default_str();
    sample_coupling->add_option("--out", sc.out, "output path (default stdout)");
    sample_coupling->add_option("--format", sc.format, "csv or json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(sim);
        if (sample_limit->parsed()) return cmd_sample_limit(sl);
        if (verify->parsed()) return cmd_verify(vc);
        if (remy_trace->parsed()) return cmd_remy_trace(rt);
        if (sample_coupling->parsed()) return cmd_sample_coupling(sc);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace prefatt
