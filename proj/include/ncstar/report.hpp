#pragma once

#include "ncstar/verifier.hpp"

#include <json.hpp>

#include <string>

namespace ncstar {

using Json = nlohmann::json;

const char* version();

struct RunConfig {
    int bound = 2;
    int product_bound = 2;
    std::size_t step_limit = 100000;
    double tolerance = 1e-9;
    double svd_threshold = 1e-6;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json";
    std::string output;
    bool timings = false;
    /// Embed full zero evidence (trace steps and combinations) in each check.
    bool certificates = false;

    /// Throws std::invalid_argument naming the offending knob.
    void validate() const;
    /// FNV-1a over the knobs that influence results (not jobs, output, format, timings).
    std::string hash() const;
    VerifyOptions options() const;
};

/// NCSTAR_JOBS if set and positive, otherwise the processor count.
int default_jobs();

/// {"n", "epsilon", "eta"?}; throws PairError or std::invalid_argument.
CommutationPair parse_pair(const Json& j);
CommutationPair read_pair_file(const std::string& path);
Json pair_json(const CommutationPair& p);
Json regularity_json(const RegularityReport& r);

Json certificate_json(const Certificate& c);
Json check_json(const CheckResult& c, const RunConfig& cfg);
Json report_json(const VerificationReport& r, const RunConfig& cfg);
/// Version and config stamp shared by every top-level document.
Json stamp(const RunConfig& cfg);
std::string report_text(const VerificationReport& r, const RunConfig& cfg);

Json model_json(const MatrixModel& m);

}  // namespace ncstar
