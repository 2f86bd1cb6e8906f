#pragma once

#include "ncstar/certificate.hpp"
#include "ncstar/presentations.hpp"
#include "ncstar/quotient.hpp"
#include "ncstar/repmodels.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncstar {

enum class Side { Left, Right };
const char* to_string(Side s);

enum class Execution { Parallel, Serial };

struct VerifyOptions {
    int bound = 2;
    int product_bound = 2;
    std::size_t step_limit = 100000;
    double tolerance = 1e-9;
    double svd_threshold = 1e-6;
    std::uint64_t seed = 0;
    int jobs = 1;
    Execution execution = Execution::Parallel;
    /// Keep relation combinations and replay each ProvedZero before accepting it.
    bool evidence = true;
    /// Torus samples for the "torus" suite; default samples when empty.
    std::vector<std::pair<Complex, Complex>> torus_samples;
};

struct WitnessData {
    std::string model;
    std::string state;
    int dim = 0;
    double residual_max = 0;
    std::size_t rank = 0;
    std::size_t expected_rank = 0;
    std::vector<double> singular_values;
    std::optional<std::uint64_t> seed;
};

struct CheckResult {
    std::string relation;
    std::string description;
    Certificate certificate;
    Status expected = Status::ProvedZero;
    std::string evidence_ref;
    std::int64_t micros = 0;
    std::optional<WitnessData> witness;
    /// Non-required checks that stay Inconclusive are reported but do not fail the report.
    bool required = true;
    bool passed() const {
        return certificate.status == expected || (!required && certificate.status == Status::Inconclusive);
    }
};

struct VerificationReport {
    std::string task;
    std::string pair;
    std::vector<CheckResult> checks;
    std::vector<std::string> notices;
    /// ProvedZero iff every check reached its expected status; otherwise the meet of the shortfalls.
    Status overall = Status::ProvedZero;
    void finish();
    bool passed() const { return overall == Status::ProvedZero; }
};

VerificationReport verify_comultiplication(const CommutationPair& pair, const VerifyOptions& opts = {});
VerificationReport verify_sphere_action(const CommutationPair& pair, Side side, const VerifyOptions& opts = {});
VerificationReport verify_tuple_action(const CommutationPair& eps_pair, Side side, const VerifyOptions& opts = {});
/// Fixed data n = 2, eps = 0, eta = offdiag(1) unless overridden (the guard then rejects X12 if undefined).
VerificationReport verify_noninjectivity_example(std::optional<CommutationPair> pair = std::nullopt,
                                                 const VerifyOptions& opts = {});

std::vector<std::string> independence_suites();
/// Throws std::invalid_argument for an unknown suite.
VerificationReport verify_independence_suite(const std::string& suite, const VerifyOptions& opts = {});

/// Every relation of the regularised sphere checked against the original presentation at product_bound.
/// Unreached relations are non-required and listed in a notice.
VerificationReport verify_regularization_consistency(const CommutationPair& pair, const VerifyOptions& opts = {});

/// Largest operator norm of p over the given models (all assumed to be witnesses).
double max_witness_norm(const Poly& p, const std::vector<MatrixModel>& models);

/// Witness-based independence test; throws WitnessInvalid when the gated residual exceeds the tolerance.
CheckResult independence_check(const std::string& label, const std::vector<Poly>& family, const MatrixModel& model,
                               double threshold, bool commutation_gate_only = false);

}  // namespace ncstar
