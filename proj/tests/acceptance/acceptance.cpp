#include "ncstar/report.hpp"
#include "ncstar/rewrite.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace ncstar;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

Poly w(std::initializer_list<Letter> ls) { return Poly(Word(ls)); }

// Explicit 4x4 matrices, built here without the library constructors.
Matrix unit(int i, int j) {
    Matrix m = Matrix::Zero(4, 4);
    m(i - 1, j - 1) = 1.0;
    return m;
}
Matrix mat_a() { return unit(3, 1) + std::sqrt(0.5) * unit(4, 4); }
Matrix mat_b() { return unit(2, 1) + unit(3, 2) + std::sqrt(0.5) * unit(4, 4); }

std::size_t lu_rank(const std::vector<Matrix>& family) {
    Eigen::MatrixXcd m(family[0].size(), static_cast<Eigen::Index>(family.size()));
    for (std::size_t k = 0; k < family.size(); ++k)
        m.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXcd>(family[k].data(), family[k].size());
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    lu.setThreshold(1e-9);
    return static_cast<std::size_t>(lu.rank());
}

/// Regularity straight from the two conventions.
bool regular_oracle(const CommutationPair& p) {
    const int n = p.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && (p.et(i, i) == 1 || p.et(j, j) == 1) && p.eps(i, j) != p.et(i, j)) return false;
    for (int i = 1; i <= n; ++i) {
        if (p.et(i, i) == 1) continue;
        bool partner = false;
        for (int j = 1; j <= n; ++j)
            if (j != i && p.et(j, j) == 0 && (p.eps(i, j) == 0 || p.et(i, j) == 0)) partner = true;
        if (!partner) return false;
    }
    return true;
}

bool dominates(const BitMatrix& hi, const BitMatrix& lo) {
    for (int i = 1; i <= lo.size(); ++i)
        for (int j = 1; j <= lo.size(); ++j)
            if (hi(i, j) < lo(i, j)) return false;
    return true;
}

std::string first_failure(const VerificationReport& r) {
    for (const auto& c : r.checks)
        if (!c.passed()) return r.pair + " " + c.relation + ": " + c.certificate.note;
    return r.pair;
}

bool is_sum_id(const std::string& id) {
    for (const char* p : {"u*u(", "uu*(", "conj(", "norm", "rows(", "cols("})
        if (id.rfind(p, 0) == 0) return true;
    return false;
}

// ---------------------------------------------------------------------------

Outcome hopf_replay() {
    std::size_t pairs = 0, checks = 0, sums = 0;
    for (int n : {2, 3}) {
        auto all = enumerate_pairs(n, false);
        if (n == 2 && all.size() != 16) return {false, "expected 16 pairs at n = 2, got " + std::to_string(all.size())};
        for (const auto& p : all) {
            auto rep = verify_comultiplication(p);
            const auto expected = unitary_qg_presentation(p).all_relations().size();
            if (!rep.passed()) return {false, first_failure(rep)};
            if (rep.checks.size() != expected) return {false, p.str() + ": check count differs from relation count"};
            ++pairs;
            checks += rep.checks.size();
            for (const auto& c : rep.checks) sums += is_sum_id(c.relation) ? 1 : 0;
        }
    }
    if (sums == 0) return {false, "no unitarity checks seen"};
    return {true, std::to_string(pairs) + " pairs, " + std::to_string(checks) + " relation images (" +
                      std::to_string(sums) + " unitarity) ProvedZero"};
}

Outcome sphere_replay() {
    std::size_t pairs = 0, checks = 0;
    for (int n : {1, 2, 3})
        for (const auto& p : enumerate_pairs(n, true)) {
            for (Side s : {Side::Left, Side::Right}) {
                auto rep = verify_sphere_action(p, s);
                if (!rep.passed() || !rep.notices.empty()) return {false, first_failure(rep)};
                checks += rep.checks.size();
            }
            ++pairs;
        }
    return {true, std::to_string(pairs) + " regular pairs, " + std::to_string(checks) + " images on both sides"};
}

Outcome tuple_replay() {
    std::size_t count = 0, checks = 0;
    for (int n : {1, 2, 3}) {
        auto all = enumerate_epsilons(n);
        if (all.size() != (std::size_t{1} << (n * (n - 1) / 2))) return {false, "wrong epsilon count"};
        for (const auto& e : all) {
            for (Side s : {Side::Left, Side::Right}) {
                auto rep = verify_tuple_action(e, s);
                if (!rep.passed()) return {false, first_failure(rep)};
                checks += rep.checks.size();
            }
            ++count;
        }
    }
    return {true, std::to_string(count) + " epsilon matrices, " + std::to_string(checks) + " images"};
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(NCSTAR_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

Outcome noninjectivity_anchor() {
    auto rep = verify_noninjectivity_example();
    if (rep.checks.size() != 2) return {false, "expected two checks"};
    const auto& zero = rep.checks[0];
    if (zero.certificate.status != Status::ProvedZero) return {false, "X12 not ProvedZero: " + zero.certificate.note};
    if (zero.certificate.note.find("(2/1+0/1 i)") == std::string::npos)
        return {false, "coefficient 2 missing: " + zero.certificate.note};
    const auto& wit = rep.checks[1];
    if (wit.certificate.status != Status::ProvedNonzero || !wit.certificate.nonzero) return {false, "no witness"};

    Matrix ab = mat_a() * mat_b();
    Matrix want = Matrix::Zero(4, 4);
    want(3, 3) = 0.5;
    Matrix lib = evaluate(w({x(1), x(2, true)}), remark_phi_model());
    const double dev = std::max((ab - want).cwiseAbs().maxCoeff(), (lib - want).cwiseAbs().maxCoeff());
    if (dev > 1e-12) return {false, "ab deviates from diag(0,0,0,1/2) by " + std::to_string(dev)};
    if (std::abs(wit.certificate.nonzero->norm - 0.5) > 1e-12) return {false, "witness norm is not 1/2"};
    if (int rc = run_cli("verify noninjectivity"); rc != 0) return {false, "CLI exit " + std::to_string(rc)};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1e", dev);
    return {true, "X12 = 0 with coefficient 2, ab = diag(0,0,0,1/2) within " + std::string(buf) + ", exit 0"};
}

Outcome witness_suite() {
    std::ostringstream s;
    for (const auto& suite : independence_suites()) {
        auto rep = verify_independence_suite(suite);
        if (!rep.passed()) return {false, suite + ": " + first_failure(rep)};
        const auto& c = rep.checks[0];
        s << suite << " " << c.witness->rank << "/" << c.witness->expected_rank << "; ";
    }
    // Oracle ranks for the explicit matrices.
    Matrix a = mat_a(), b = mat_b();
    Matrix as = a.adjoint(), bs = b.adjoint();
    if (lu_rank({as * b, a * bs, bs * a, b * as}) != 4) return {false, "oracle rank for a*b, ab*, b*a, ba* is not 4"};
    if (lu_rank({bs * b, b * bs, Matrix::Identity(4, 4)}) != 3) return {false, "oracle rank for b*b, bb*, 1 is not 3"};
    for (const auto& m : {o2plus_point(), o2plus_anticommuting(), o2plus_model()})
        if (m.residuals().max != 0.0) return {false, m.name() + " residual is not exactly zero"};
    if (free_unitary_model(4, 0).dim() != 4) return {false, "free-unitary dimension"};
    return {true, s.str() + "o2plus residuals exactly 0"};
}

Outcome anomaly_record() {
    MatrixModel m = remark_model();
    if (m.state() != ModelState::Probe) return {false, "remark model is not in probe state"};
    double lib = -1;
    for (const auto& e : m.residuals().per_relation)
        if (e.relation == "norm*") lib = e.residual;
    Matrix a = mat_a(), b = mat_b();
    const double oracle = operator_norm(a.adjoint() * a + b.adjoint() * b - Matrix::Identity(4, 4));
    if (std::abs(lib - 1.0) > 1e-12 || std::abs(oracle - 1.0) > 1e-12)
        return {false, "residual " + std::to_string(lib) + " (oracle " + std::to_string(oracle) + ")"};
    return {true, "sum x*x - 1 residual = 1 (probe state)"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(7);
    std::vector<Presentation> pres;
    for (const auto& p : enumerate_pairs(2, false)) {
        pres.push_back(sphere_presentation(p));
        pres.push_back(unitary_qg_presentation(p));
    }
    for (const auto& e : enumerate_epsilons(2)) {
        pres.push_back(orthogonal_qg_presentation(e));
        pres.push_back(tuple_space_presentation(e));
    }
    const int per = static_cast<int>(1000 / pres.size()) + 2;
    std::size_t total = 0, zeros = 0, evaluations = 0;
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& pr : pres) {
        RewriteSystem rs(pr);
        auto words = pr.roster.words_up_to(2);
        auto rels = pr.star_closed_relations();
        auto models = witness_catalog(pr);
        std::uniform_int_distribution<std::size_t> pick_w(0, words.size() - 1);
        for (int k = 0; k < per; ++k) {
            Poly p;
            if (!rels.empty()) {
                std::uniform_int_distribution<std::size_t> pick_r(0, rels.size() - 1);
                const int terms = 1 + static_cast<int>(rng() % 3);
                for (int t = 0; t < terms; ++t)
                    p += rels[pick_r(rng)].poly * Scalar(Rational(coef(rng)), Rational(coef(rng)));
            }
            if (rels.empty() || rng() % 3 == 0) p.add_term(words[pick_w(rng)], Scalar(Rational(1 + rng() % 3)));
            ++total;
            auto by_rewrite = rs.certify(p);
            auto by_ideal = ideal_membership_bounded(p, pr, 2);
            const bool rz = by_rewrite.status == Status::ProvedZero;
            const bool iz = by_ideal.status == Status::ProvedZero;
            if (rz != iz) return {false, to_string(pr.kind) + std::string(" ") + pr.source_pair.str() + ": " + p.str()};
            if (!rz) continue;
            ++zeros;
            for (const auto& m : models) {
                ++evaluations;
                const double nrm = operator_norm(evaluate(p, m));
                if (nrm >= 1e-9) return {false, m.name() + " gives norm " + std::to_string(nrm) + " on " + p.str()};
            }
        }
    }
    if (total < 1000) return {false, "only " + std::to_string(total) + " polynomials"};
    return {true, std::to_string(total) + " polynomials over " + std::to_string(pres.size()) + " presentations, " +
                      std::to_string(zeros) + " ProvedZero by both, " + std::to_string(evaluations) +
                      " witness evaluations below 1e-9"};
}

Outcome regularize_properties() {
    auto check = [](const CommutationPair& p) -> std::string {
        CommutationPair r = regularize(p);
        if (!(regularize(r) == r)) return "not idempotent at " + p.str();
        if (!dominates(r.epsilon(), p.epsilon()) || !dominates(r.eta(), p.eta())) return "not monotone at " + p.str();
        if (!is_regular(r).is_regular || !regular_oracle(r)) return "output not regular at " + p.str();
        if (is_regular(p).is_regular != regular_oracle(p)) return "is_regular disagrees with oracle at " + p.str();
        if (regular_oracle(p) && !(r == p)) return "regular input changed at " + p.str();
        return "";
    };
    std::size_t exhaustive = 0;
    for (int n : {1, 2, 3})
        for (const auto& p : enumerate_pairs(n, false)) {
            if (auto e = check(p); !e.empty()) return {false, e};
            ++exhaustive;
        }
    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
        std::vector<std::vector<int>> e(4, std::vector<int>(4, 0)), h(4, std::vector<int>(4, 0));
        for (int i = 0; i < 4; ++i) {
            h[i][i] = static_cast<int>(rng() % 2);
            for (int j = i + 1; j < 4; ++j) {
                e[i][j] = e[j][i] = static_cast<int>(rng() % 2);
                h[i][j] = h[j][i] = static_cast<int>(rng() % 2);
            }
        }
        if (auto err = check(CommutationPair::validate(e, h)); !err.empty()) return {false, err};
    }
    return {true, std::to_string(exhaustive) + " pairs (n <= 3) plus 500 random n = 4 pairs"};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    const std::string dir = "ncstar_determinism";
    std::filesystem::create_directories(dir);
    std::size_t bytes = 0;
    for (int n : {1, 2, 3}) {
        std::string runs[2];
        for (int r = 0; r < 2; ++r) {
            std::string out = dir + "/sweep" + std::to_string(n) + "_" + std::to_string(r) + ".json";
            if (int rc = run_cli("sweep --n " + std::to_string(n) + " --seed 0 --format json --output " + out); rc != 0)
                return {false, "sweep n = " + std::to_string(n) + " exit " + std::to_string(rc)};
            runs[r] = slurp(out);
        }
        if (runs[0].empty() || runs[0] != runs[1]) return {false, "sweep n = " + std::to_string(n) + " differs"};
        bytes += runs[0].size();
    }
    std::filesystem::remove_all(dir);
    return {true, "sweeps n = 1..3 byte-identical across two runs (" + std::to_string(bytes) + " bytes each)"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"comultiplication replay", hopf_replay},
        {"sphere action replay", sphere_replay},
        {"tuple action replay", tuple_replay},
        {"non-injectivity anchor", noninjectivity_anchor},
        {"witness suite", witness_suite},
        {"anomaly record", anomaly_record},
        {"oracle equivalence", oracle_equivalence},
        {"regularize properties", regularize_properties},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %zu (%s): %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
