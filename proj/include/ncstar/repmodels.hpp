#pragma once

#include "ncstar/poly.hpp"
#include "ncstar/presentations.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncstar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

struct UnassignedGenerator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PresentationMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WitnessInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// A model that cannot exist; the message carries the obstruction.
struct Unavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResidualEntry {
    std::string relation;
    std::string description;
    bool sum_family = false;
    double residual = 0;
};

struct ResidualReport {
    std::vector<ResidualEntry> per_relation;
    double max = 0;
    /// Largest residual outside the delta-sum families.
    double max_commutation = 0;
};

enum class ModelState { Witness, Probe };
const char* to_string(ModelState s);

class MatrixModel {
public:
    MatrixModel(std::string name, Presentation pres, std::map<Generator, Matrix> assignment,
                double tolerance = 1e-9);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const Presentation& presentation() const { return pres_; }
    const std::map<Generator, Matrix>& assignment() const { return assignment_; }
    double tolerance() const { return tolerance_; }
    const Matrix& at(Generator g) const;
    /// Witness iff every relation residual is within tolerance.
    ModelState state() const { return residuals_.max <= tolerance_ ? ModelState::Witness : ModelState::Probe; }
    const ResidualReport& residuals() const { return residuals_; }
    std::optional<std::uint64_t> seed;

private:
    std::string name_;
    Presentation pres_;
    std::map<Generator, Matrix> assignment_;
    double tolerance_;
    int dim_ = 0;
    ResidualReport residuals_;
};

/// *-homomorphic evaluation; starred letters map to the conjugate transpose.
Matrix evaluate(const Poly& p, const MatrixModel& model);
Matrix evaluate(const Poly& p, const std::map<Generator, Matrix>& assignment, int dim);
double operator_norm(const Matrix& m);
ResidualReport model_residuals(const MatrixModel& model);

struct IndependenceResult {
    std::size_t rank = 0;
    std::vector<double> singular_values;  ///< descending
    bool independent = false;
};

/// Numerical rank of the flattened family; independent iff the smallest singular value exceeds the threshold.
IndependenceResult check_independence(const std::vector<Poly>& family, const MatrixModel& model,
                                      double threshold = 1e-6);

// ---- constructors ---------------------------------------------------------

/// 4x4 matrices a = e31 + sqrt2/2 e44, b = e21 + e32 + sqrt2/2 e44 on the sphere
/// with eps_12 = 1, eta = 0. Fails the normalisation sums (probe state).
MatrixModel remark_model();
/// x1 -> a, x2 -> b* on the sphere with eps = 0, eta = offdiag(1). A genuine witness.
MatrixModel remark_phi_model();
/// Always throws Unavailable: commuting A, B with A*A + B*B = AA* + BB* = 1 are
/// simultaneously diagonalisable, so the requested rank-4 family cannot occur.
MatrixModel corrected_sphere_model();

/// Diagonal model x_i = sqrt2/2 * z_i over the sample points (z_1, z_2).
MatrixModel torus_model(const std::vector<std::pair<Complex, Complex>>& samples,
                        std::optional<CommutationPair> pair = std::nullopt);
std::vector<std::pair<Complex, Complex>> default_torus_samples();
/// x_i = sqrt2/2 U_i with seeded Gram-Schmidt unitaries on the free 1-sphere.
MatrixModel free_unitary_model(int dim, std::uint64_t seed = 0);
/// Classical point (c, s) = (0.6, 0.8) plus an anticommuting pair A = c diag(1,-1), B = s sigma_x.
MatrixModel o2plus_model();
MatrixModel o2plus_point();
MatrixModel o2plus_anticommuting();

MatrixModel point_model_sphere(int k, const CommutationPair& pair, Complex z0 = 1.0);
/// x_ij -> delta_ij; column k is the point x_kk = 1, x_k'k = 0 (the other columns keep the sums intact).
MatrixModel point_model_tuple(int k, const CommutationPair& eps_pair);
/// 1-dimensional model u_ij -> U_ij for a scalar n x n matrix U.
MatrixModel scalar_unitary_model(const CommutationPair& pair, const Matrix& u, std::string name);
/// 1-dimensional model v_ij -> O_ij on the orthogonal presentation.
MatrixModel scalar_orthogonal_model(const CommutationPair& eps_pair, const Matrix& o, std::string name);

/// Block-diagonal sum; all parts must claim the same presentation.
MatrixModel direct_sum(const std::vector<MatrixModel>& models, std::string name = {});
/// Re-targets a sphere model: its x_a becomes x_{targets[a-1]} of `pres`, other coordinates 0.
MatrixModel embed_sphere_model(const MatrixModel& model, const Presentation& pres, const std::vector<int>& targets,
                               std::string name = {});

/// Valid witness models for a presentation, drawn from the constructors above.
std::vector<MatrixModel> witness_catalog(const Presentation& pres);

}  // namespace ncstar
