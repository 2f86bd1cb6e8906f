#include "ncstar/report.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace ncstar;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + cfg.output + "'");
    out << text;
    return kOk;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

VerificationReport merge(std::string task, const VerificationReport& a, const VerificationReport& b) {
    VerificationReport r;
    r.task = std::move(task);
    r.pair = a.pair;
    r.notices = a.notices;
    r.checks = a.checks;
    r.checks.insert(r.checks.end(), b.checks.begin(), b.checks.end());
    r.finish();
    return r;
}

VerificationReport run_action(bool sphere, const CommutationPair& p, const std::string& side, const VerifyOptions& o) {
    auto one = [&](Side s) { return sphere ? verify_sphere_action(p, s, o) : verify_tuple_action(p, s, o); };
    const std::string task = sphere ? "sphere-action" : "tuple-action";
    if (side == "left") return one(Side::Left);
    if (side == "right") return one(Side::Right);
    return merge(task, one(Side::Left), one(Side::Right));
}

int finish_report(const VerificationReport& r, const RunConfig& cfg) {
    if (cfg.format == "json") {
        Json j = stamp(cfg);
        j["report"] = report_json(r, cfg);
        emit(cfg, dump(j));
    } else {
        emit(cfg, report_text(r, cfg));
    }
    return r.passed() ? kOk : kFailed;
}

// ---- regularize ------------------------------------------------------------

int cmd_regularize(const std::string& input, const RunConfig& cfg) {
    CommutationPair before = read_pair_file(input);
    CommutationPair after = regularize(before);
    if (cfg.format == "json") {
        Json j = stamp(cfg);
        j["before"] = pair_json(before);
        j["after"] = pair_json(after);
        j["report_before"] = regularity_json(is_regular(before));
        j["report_after"] = regularity_json(is_regular(after));
        j["changed"] = !(before == after);
        return emit(cfg, dump(j));
    }
    std::ostringstream s;
    s << "before: " << before.str() << "\nregular: " << (is_regular(before).is_regular ? "true" : "false")
      << "\nafter:  " << after.str() << "\n";
    return emit(cfg, s.str());
}

// ---- sweep -----------------------------------------------------------------

struct SweepItem {
    std::string target;
    std::size_t index = 0;
    std::string pair;
    VerificationReport report;
};

std::vector<CommutationPair> sample(std::vector<CommutationPair> all, std::size_t k, std::uint64_t seed) {
    if (k >= all.size()) return all;
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    std::vector<CommutationPair> out;
    for (auto i : idx) out.push_back(all[i]);
    return out;
}

int cmd_sweep(int n, std::vector<std::string> targets, std::size_t sample_size, bool product_bound_given,
              const RunConfig& cfg) {
    if (n < 1 || n > 4) throw UsageError("sweep supports n in 1..4 (got " + std::to_string(n) + ")");
    if (n == 4 && sample_size == 0) throw UsageError("sweep at n = 4 needs --sample N");
    const std::vector<std::string> known = {"hopf", "sphere-action", "tuple-action", "regularization", "witness"};
    if (targets.empty()) targets = known;
    for (const auto& t : targets)
        if (std::find(known.begin(), known.end(), t) == known.end()) throw UsageError("unknown sweep target '" + t + "'");

    VerifyOptions opts = cfg.options();
    VerifyOptions reg_opts = opts;
    if (!product_bound_given) reg_opts.product_bound = 4;

    std::vector<CommutationPair> pairs = enumerate_pairs(n, false);
    std::vector<CommutationPair> epsilons = enumerate_epsilons(n);
    if (sample_size > 0) {
        pairs = sample(std::move(pairs), sample_size, cfg.seed);
        epsilons = sample(std::move(epsilons), sample_size, cfg.seed);
    }

    std::vector<SweepItem> items;
    for (const auto& t : targets) {
        if (t == "witness") {
            for (const auto& s : independence_suites()) items.push_back({t, items.size(), s, {}});
            continue;
        }
        const auto& src = t == "tuple-action" ? epsilons : pairs;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (t == "sphere-action" && !is_regular(src[i]).is_regular) continue;
            if (t == "regularization" && is_regular(src[i]).is_regular) continue;
            items.push_back({t, i, src[i].str(), {}});
        }
    }
    auto find_pair = [&](const SweepItem& it) -> const CommutationPair& {
        return it.target == "tuple-action" ? epsilons[it.index] : pairs[it.index];
    };

    // Outer parallelism over pairs; per-pair checks then run serially inside each thread.
    const long count = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs) if (cfg.jobs > 1)
    for (long k = 0; k < count; ++k) {
        SweepItem& it = items[static_cast<std::size_t>(k)];
        if (it.target == "hopf") it.report = verify_comultiplication(find_pair(it), opts);
        else if (it.target == "sphere-action") it.report = run_action(true, find_pair(it), "both", opts);
        else if (it.target == "tuple-action") it.report = run_action(false, find_pair(it), "both", opts);
        else if (it.target == "regularization") it.report = verify_regularization_consistency(find_pair(it), reg_opts);
        else it.report = verify_independence_suite(it.pair, opts);
    }

    std::vector<std::string> failing;
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& it : items) {
        std::size_t ok = 0, inconclusive = 0;
        for (const auto& c : it.report.checks) {
            ok += c.passed() ? 1 : 0;
            inconclusive += c.certificate.status == Status::Inconclusive ? 1 : 0;
        }
        const std::string label = it.target + " " + it.pair;
        if (!it.report.passed()) failing.push_back(label);
        Json row{{"target", it.target},
                 {"pair", it.pair},
                 {"checks", it.report.checks.size()},
                 {"passed", ok},
                 {"inconclusive", inconclusive},
                 {"overall", to_string(it.report.overall)}};
        if (!it.report.notices.empty()) row["notices"] = it.report.notices;
        row["report"] = report_json(it.report, cfg);
        rows.push_back(row);
        text << (it.report.passed() ? "ok   " : "FAIL ") << label << "  " << ok << "/" << it.report.checks.size()
             << "\n";
    }
    const bool all_ok = failing.empty();
    if (cfg.format == "json") {
        Json j = stamp(cfg);
        j["sweep"] = {{"n", n},
                      {"targets", targets},
                      {"sample", sample_size},
                      {"items", rows},
                      {"failing", failing},
                      {"overall", all_ok ? "ProvedZero" : "Inconclusive"}};
        emit(cfg, dump(j));
    } else {
        text << (all_ok ? "all " + std::to_string(items.size()) + " items passed\n"
                        : std::to_string(failing.size()) + " failing\n");
        emit(cfg, text.str());
    }
    if (!all_ok)
        for (const auto& f : failing) std::cerr << "failing: " << f << "\n";
    return all_ok ? kOk : kFailed;
}

// ---- witness ---------------------------------------------------------------

std::vector<std::pair<Complex, Complex>> read_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("'" + path + "': " + e.what());
    }
    auto z = [](const Json& c) {
        if (!c.is_array() || c.size() != 2) throw UsageError("sample coordinates must be [re, im]");
        return Complex(c[0].get<double>(), c[1].get<double>());
    };
    std::vector<std::pair<Complex, Complex>> out;
    if (!j.is_array()) throw UsageError("samples must be a list of [z1, z2] points");
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw UsageError("each sample is [z1, z2]");
        out.emplace_back(z(p[0]), z(p[1]));
    }
    return out;
}

int cmd_witness(const std::string& suite, const std::string& samples, const std::string& export_path,
                const RunConfig& cfg) {
    VerifyOptions opts = cfg.options();
    if (!samples.empty()) opts.torus_samples = read_samples(samples);
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = independence_suites();
    } else {
        auto all = independence_suites();
        if (std::find(all.begin(), all.end(), suite) == all.end() && suite != "corrected")
            throw UsageError("unknown witness suite '" + suite + "'");
        suites = {suite};
    }
    if (!export_path.empty()) {
        if (suites.size() != 1) throw UsageError("--export needs a single suite");
        std::optional<MatrixModel> m;
        if (suite == "remark-products" || suite == "remark-normality") m = remark_model();
        else if (suite == "torus")
            m = torus_model(opts.torus_samples.empty() ? default_torus_samples() : opts.torus_samples);
        else if (suite == "free-unitary") m = free_unitary_model(4, cfg.seed);
        else if (suite == "o2plus") m = o2plus_model();
        if (m) {
            std::ofstream out(export_path, std::ios::binary);
            if (!out) throw UsageError("cannot write '" + export_path + "'");
            out << dump(model_json(*m));
        }
    }
    std::vector<VerificationReport> reports;
    for (const auto& s : suites) reports.push_back(verify_independence_suite(s, opts));
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    if (cfg.format == "json") {
        Json j = stamp(cfg);
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_json(r, cfg));
        j["reports"] = arr;
        j["overall"] = ok ? "ProvedZero" : "Inconclusive";
        emit(cfg, dump(j));
    } else {
        std::string text;
        for (const auto& r : reports) text += report_text(r, cfg);
        emit(cfg, text);
    }
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncstar: certificates for quantum symmetries of (eps, eta) spheres"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.jobs = default_jobs();
    app.add_option("--bound", cfg.bound, "degree bound for quotient bases")->capture_default_str();
    auto* pb = app.add_option("--product-bound", cfg.product_bound, "product bound for consequence checks (<= 4)")
                   ->capture_default_str();
    app.add_option("--steps", cfg.step_limit, "rewrite step limit")->capture_default_str();
    app.add_option("--tol", cfg.tolerance, "relation residual tolerance")->capture_default_str();
    app.add_option("--svd-threshold", cfg.svd_threshold, "singular value threshold")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for random witnesses and sampling")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads (default: NCSTAR_JOBS or processor count)");
    app.add_option("--format", cfg.format, "json or text")->capture_default_str();
    app.add_option("--output", cfg.output, "write the report here instead of standard output");
    app.add_flag("--timings", cfg.timings, "include per-check microseconds");
    app.add_flag("--certificates", cfg.certificates, "embed full zero evidence");

    std::string input;
    auto* reg = app.add_subcommand("regularize", "regularize a pair file");
    reg->add_option("input", input, "pair file")->required();

    auto* ver = app.add_subcommand("verify", "run one verification target");
    ver->require_subcommand(1);
    std::string side = "both";
    auto* hopf = ver->add_subcommand("hopf", "comultiplication is a *-homomorphism");
    hopf->add_option("input", input, "pair file")->required();
    auto* sph = ver->add_subcommand("sphere-action", "coactions on the sphere");
    sph->add_option("input", input, "pair file")->required();
    sph->add_option("--side", side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
    auto* tup = ver->add_subcommand("tuple-action", "coactions on the tuple space");
    tup->add_option("input", input, "pair file (eta is ignored)")->required();
    tup->add_option("--side", side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
    auto* non = ver->add_subcommand("noninjectivity", "X12 = 0 upstairs, x1 x2* != 0 downstairs");
    non->add_option("input", input, "optional pair file overriding the fixed data");

    int n = 0;
    std::vector<std::string> targets;
    std::size_t sample_size = 0;
    auto* sw = app.add_subcommand("sweep", "run targets over every pair of size n");
    sw->add_option("--n", n, "matrix size")->required();
    sw->add_option("--targets", targets, "hopf, sphere-action, tuple-action, regularization, witness")
        ->delimiter(',');
    sw->add_option("--sample", sample_size, "random sample size (required for n = 4)");

    std::string suite, samples, export_path;
    auto* wit = app.add_subcommand("witness", "independence witnesses");
    wit->add_option("suite", suite, "suite name or 'all'")->required();
    wit->add_option("--samples", samples, "torus sample file [[[re,im],[re,im]], ...]");
    wit->add_option("--export", export_path, "write the witness model as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        cfg.validate();
        if (*reg) return cmd_regularize(input, cfg);
        if (*hopf) return finish_report(verify_comultiplication(read_pair_file(input), cfg.options()), cfg);
        if (*sph) return finish_report(run_action(true, read_pair_file(input), side, cfg.options()), cfg);
        if (*tup) {
            CommutationPair p = read_pair_file(input);
            return finish_report(run_action(false, CommutationPair::validate(p.epsilon(), BitMatrix(p.n())), side,
                                            cfg.options()),
                                 cfg);
        }
        if (*non) {
            std::optional<CommutationPair> p;
            if (!input.empty()) p = read_pair_file(input);
            return finish_report(verify_noninjectivity_example(p, cfg.options()), cfg);
        }
        if (*sw) return cmd_sweep(n, targets, sample_size, pb->count() > 0, cfg);
        if (*wit) return cmd_witness(suite, samples, export_path, cfg);
    } catch (const PairError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
