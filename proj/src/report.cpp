#include "ncstar/report.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ncstar {

const char* version() { return NCSTAR_VERSION; }

void RunConfig::validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (bound <= 0) fail("--bound must be positive");
    if (product_bound <= 0 || product_bound > 4) fail("--product-bound must lie in 1..4");
    if (product_bound < bound) fail("--product-bound must be >= --bound");
    if (step_limit == 0) fail("--steps must be positive");
    if (!(tolerance > 0)) fail("--tol must be positive");
    if (!(svd_threshold > 0)) fail("--svd-threshold must be positive");
    if (jobs <= 0) fail("--jobs must be positive");
    if (format != "json" && format != "text") fail("--format must be json or text");
}

namespace {

std::string fmt_double(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

}  // namespace

std::string RunConfig::hash() const {
    std::ostringstream s;
    s << "bound=" << bound << ";product_bound=" << product_bound << ";steps=" << step_limit
      << ";tol=" << fmt_double(tolerance) << ";svd=" << fmt_double(svd_threshold) << ";seed=" << seed;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s.str())));
    return buf;
}

VerifyOptions RunConfig::options() const {
    VerifyOptions o;
    o.bound = bound;
    o.product_bound = product_bound;
    o.step_limit = step_limit;
    o.tolerance = tolerance;
    o.svd_threshold = svd_threshold;
    o.seed = seed;
    o.jobs = jobs;
    return o;
}

int default_jobs() {
    if (const char* env = std::getenv("NCSTAR_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return std::max(1, omp_get_num_procs());
}

namespace {

std::vector<std::vector<int>> read_matrix(const Json& j, const char* key, int n) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing '") + key + "'");
    const Json& m = j.at(key);
    if (!m.is_array() || static_cast<int>(m.size()) != n)
        throw std::invalid_argument(std::string("'") + key + "' must be a full " + std::to_string(n) + "x" +
                                    std::to_string(n) + " matrix");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i].is_array() || static_cast<int>(m[i].size()) != n)
            throw std::invalid_argument(std::string("'") + key + "' row " + std::to_string(i + 1) + " must have " +
                                        std::to_string(n) + " entries");
        std::vector<int> row;
        for (std::size_t k = 0; k < m[i].size(); ++k) {
            if (!m[i][k].is_number_integer())
                throw std::invalid_argument(std::string("'") + key + "' entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(k + 1) + ") is not an integer");
            row.push_back(m[i][k].get<int>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

CommutationPair parse_pair(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("pair file needs an integer 'n'");
    const int n = j.at("n").get<int>();
    if (n <= 0) throw std::invalid_argument("'n' must be positive");
    auto eps = read_matrix(j, "epsilon", n);
    std::vector<std::vector<int>> eta(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    if (j.contains("eta")) eta = read_matrix(j, "eta", n);
    return CommutationPair::validate(eps, eta);
}

CommutationPair read_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("'" + path + "': " + e.what());
    }
    return parse_pair(j);
}

Json pair_json(const CommutationPair& p) {
    return Json{{"n", p.n()}, {"epsilon", p.epsilon().rows()}, {"eta", p.eta().rows()}};
}

Json regularity_json(const RegularityReport& r) {
    Json a = Json::array();
    for (auto [i, j] : r.violations_convention_A) a.push_back({i, j});
    return Json{{"regular", r.is_regular}, {"violations_A", a}, {"violations_B", r.violations_convention_B}};
}

Json certificate_json(const Certificate& c) {
    Json j{{"status", to_string(c.status)}};
    if (!c.note.empty()) j["note"] = c.note;
    if (c.zero) {
        const auto& z = *c.zero;
        if (!z.trace.empty()) {
            Json t = Json::array();
            for (const auto& s : z.trace)
                t.push_back({{"rule", s.rule}, {"word", s.word.str()}, {"position", s.position}, {"terms", s.terms}});
            j["trace"] = t;
        }
        if (!z.combination.empty()) {
            Json t = Json::array();
            for (const auto& e : z.combination)
                t.push_back({{"relation", e.relation},
                             {"left", e.left.str()},
                             {"right", e.right.str()},
                             {"coefficient", e.coefficient.str()}});
            j["combination"] = t;
        }
        if (!z.tensor_combination.empty()) {
            Json t = Json::array();
            for (const auto& e : z.tensor_combination)
                t.push_back({{"leg", e.leg == 0 ? "left" : "right"},
                             {"relation", e.relation},
                             {"left", e.left.str()},
                             {"right", e.right.str()},
                             {"other", e.other.str()},
                             {"coefficient", e.coefficient.str()}});
            j["tensor_combination"] = t;
        }
        if (!z.notes.empty()) j["notes"] = z.notes;
    }
    if (c.nonzero) j["nonzero"] = {{"model", c.nonzero->model}, {"norm", c.nonzero->norm}, {"detail", c.nonzero->detail}};
    return j;
}

Json check_json(const CheckResult& c, const RunConfig& cfg) {
    Json j{{"relation", c.relation},
           {"description", c.description},
           {"status", to_string(c.certificate.status)},
           {"expected", to_string(c.expected)},
           {"passed", c.passed()}};
    if (!c.required) j["required"] = false;
    if (!c.evidence_ref.empty()) j["evidence-ref"] = c.evidence_ref;
    if (!c.certificate.note.empty()) j["note"] = c.certificate.note;
    if (c.certificate.nonzero)
        j["nonzero"] = {{"model", c.certificate.nonzero->model},
                        {"norm", c.certificate.nonzero->norm},
                        {"detail", c.certificate.nonzero->detail}};
    if (cfg.timings) j["micros"] = c.micros;
    if (cfg.certificates) j["certificate"] = certificate_json(c.certificate);
    if (c.witness) {
        const auto& w = *c.witness;
        Json wj{{"model", w.model},          {"state", w.state}, {"dim", w.dim}, {"residual_max", w.residual_max},
                {"rank", w.rank},            {"expected_rank", w.expected_rank},
                {"singular_values", w.singular_values}};
        if (w.seed) wj["seed"] = *w.seed;
        j["witness"] = wj;
    }
    return j;
}

Json stamp(const RunConfig& cfg) {
    return Json{{"tool", "ncstar"},
                {"version", version()},
                {"config_hash", cfg.hash()},
                {"config",
                 {{"bound", cfg.bound},
                  {"product_bound", cfg.product_bound},
                  {"steps", cfg.step_limit},
                  {"tol", cfg.tolerance},
                  {"svd_threshold", cfg.svd_threshold},
                  {"seed", cfg.seed}}}};
}

Json report_json(const VerificationReport& r, const RunConfig& cfg) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c, cfg));
    Json j{{"task", r.task}, {"pair", r.pair}, {"checks", checks}, {"overall", to_string(r.overall)}};
    if (!r.notices.empty()) j["notices"] = r.notices;
    return j;
}

std::string report_text(const VerificationReport& r, const RunConfig& cfg) {
    std::ostringstream s;
    s << r.task << "  " << r.pair << "\n";
    for (const auto& n : r.notices) s << "  notice: " << n << "\n";
    for (const auto& c : r.checks) {
        char line[64];
        std::snprintf(line, sizeof line, "  %-4s %-13s ", c.passed() ? "ok" : "FAIL", to_string(c.certificate.status));
        s << line << c.relation;
        if (!c.evidence_ref.empty()) s << "  [" << c.evidence_ref << "]";
        if (cfg.timings) s << "  " << c.micros << "us";
        s << "\n";
        if (!c.certificate.note.empty()) s << "       " << c.certificate.note << "\n";
        if (c.witness && c.witness->expected_rank > 0) {
            s << "       " << c.witness->model << " (" << c.witness->state << ", dim " << c.witness->dim << ") rank "
              << c.witness->rank << "/" << c.witness->expected_rank << ", singular values";
            for (double v : c.witness->singular_values) s << " " << fmt_double(v);
            s << "\n";
        }
    }
    s << "  overall: " << to_string(r.overall) << "\n";
    return s.str();
}

Json model_json(const MatrixModel& m) {
    Json gens = Json::object();
    for (const auto& [g, mat] : m.assignment()) {
        Json entries = Json::array();
        for (int i = 0; i < mat.rows(); ++i)
            for (int k = 0; k < mat.cols(); ++k)
                entries.push_back({fmt_double(mat(i, k).real()), fmt_double(mat(i, k).imag())});
        gens[g.name()] = entries;
    }
    Json res = Json::array();
    for (const auto& e : m.residuals().per_relation)
        res.push_back({{"relation", e.relation}, {"description", e.description}, {"residual", e.residual}});
    Json j{{"name", m.name()},
           {"dim", m.dim()},
           {"state", to_string(m.state())},
           {"generators", gens},
           {"residuals", res},
           {"residual_max", m.residuals().max}};
    if (m.seed) j["seed"] = *m.seed;
    return j;
}

}  // namespace ncstar
