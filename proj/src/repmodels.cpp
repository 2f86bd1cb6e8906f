#include "ncstar/repmodels.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <random>
#include <set>

namespace ncstar {

namespace {

Complex to_complex(const Scalar& s) { return {s.re().to_double(), s.im().to_double()}; }

const double kHalfRoot2 = std::sqrt(2.0) / 2.0;

Matrix unit(int dim, int i, int j) {
    Matrix m = Matrix::Zero(dim, dim);
    m(i - 1, j - 1) = 1.0;
    return m;
}

Matrix scalar(Complex c) { return Matrix::Constant(1, 1, c); }

std::set<std::string> sum_ids(const Presentation& pres) {
    std::set<std::string> out;
    for (const auto& fam : pres.sum_families)
        for (const auto& r : fam.expand()) out.insert(r.id);
    return out;
}

CommutationPair classical_pair(int n) {
    BitMatrix e(n), h(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            e.set(i, j, i != j);
            h.set(i, j, 1);
        }
    return CommutationPair::validate(e, h);
}

}  // namespace

const char* to_string(ModelState s) { return s == ModelState::Witness ? "witness" : "probe"; }

MatrixModel::MatrixModel(std::string name, Presentation pres, std::map<Generator, Matrix> assignment,
                         double tolerance)
    : name_(std::move(name)), pres_(std::move(pres)), assignment_(std::move(assignment)), tolerance_(tolerance) {
    for (const auto& g : pres_.roster.generators)
        if (!assignment_.count(g)) throw UnassignedGenerator("UnassignedGenerator: " + g.name());
    if (assignment_.empty()) throw UnassignedGenerator("UnassignedGenerator: empty assignment");
    dim_ = static_cast<int>(assignment_.begin()->second.rows());
    for (const auto& [g, m] : assignment_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("matrix for " + g.name() + " is not " + std::to_string(dim_) + "x" +
                                        std::to_string(dim_));
    residuals_ = model_residuals(*this);
}

const Matrix& MatrixModel::at(Generator g) const {
    auto it = assignment_.find(g);
    if (it == assignment_.end()) throw UnassignedGenerator("UnassignedGenerator: " + g.name());
    return it->second;
}

Matrix evaluate(const Poly& p, const std::map<Generator, Matrix>& assignment, int dim) {
    Matrix out = Matrix::Zero(dim, dim);
    // descending word order: the constant term is added last
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        Matrix prod = Matrix::Identity(dim, dim);
        for (const Letter& l : w) {
            auto it = assignment.find(l.generator());
            if (it == assignment.end()) throw UnassignedGenerator("UnassignedGenerator: " + l.generator().name());
            if (l.starred())
                prod = prod * it->second.adjoint();
            else
                prod = prod * it->second;
        }
        out += to_complex(c) * prod;
    }
    return out;
}

Matrix evaluate(const Poly& p, const MatrixModel& model) { return evaluate(p, model.assignment(), model.dim()); }

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

ResidualReport model_residuals(const MatrixModel& model) {
    ResidualReport rep;
    auto sums = sum_ids(model.presentation());
    for (const auto& r : model.presentation().all_relations()) {
        bool is_sum = sums.count(r.id) > 0;
        double res = operator_norm(evaluate(r.poly, model));
        rep.per_relation.push_back({r.id, r.description, is_sum, res});
        rep.max = std::max(rep.max, res);
        if (!is_sum) rep.max_commutation = std::max(rep.max_commutation, res);
    }
    return rep;
}

IndependenceResult check_independence(const std::vector<Poly>& family, const MatrixModel& model, double threshold) {
    if (family.empty()) throw std::invalid_argument("independence family is empty");
    const Eigen::Index d2 = static_cast<Eigen::Index>(model.dim()) * model.dim();
    Matrix flat(d2, static_cast<Eigen::Index>(family.size()));
    for (std::size_t k = 0; k < family.size(); ++k) {
        Matrix m = evaluate(family[k], model);
        flat.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXcd>(m.data(), d2);
    }
    Eigen::JacobiSVD<Matrix> svd(flat);
    IndependenceResult out;
    const auto& sv = svd.singularValues();
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        out.singular_values.push_back(sv(k));
        if (sv(k) > threshold) ++out.rank;
    }
    out.independent = static_cast<Eigen::Index>(family.size()) <= d2 && out.rank == family.size();
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<Matrix, Matrix> remark_ab() {
    Matrix a = unit(4, 3, 1) + kHalfRoot2 * unit(4, 4, 4);
    Matrix b = unit(4, 2, 1) + unit(4, 3, 2) + kHalfRoot2 * unit(4, 4, 4);
    return {a, b};
}

Generator gx(int i) { return x(i).generator(); }

}  // namespace

MatrixModel remark_model() {
    auto [a, b] = remark_ab();
    auto pair = CommutationPair::validate({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}});
    return MatrixModel("remark", sphere_presentation(pair), {{gx(1), a}, {gx(2), b}});
}

MatrixModel remark_phi_model() {
    auto [a, b] = remark_ab();
    auto pair = CommutationPair::validate({{0, 0}, {0, 0}}, {{0, 1}, {1, 0}});
    return MatrixModel("remark-phi", sphere_presentation(pair), {{gx(1), a}, {gx(2), Matrix(b.adjoint())}});
}

MatrixModel corrected_sphere_model() {
    throw Unavailable(
        "Unavailable: no finite-dimensional commuting pair A, B with A*A + B*B = AA* + BB* = 1 is non-normal. "
        "A common eigenvector v of A, B is also an eigenvector of A*, B*, so span(v) reduces both; by induction "
        "A and B are simultaneously diagonal, A*B = BA* and AB* = B*A, and the four-product family has rank <= 2. "
        "tools/regen_corrected_model.py reproduces the failed search");
}

MatrixModel torus_model(const std::vector<std::pair<Complex, Complex>>& samples, std::optional<CommutationPair> pair) {
    if (samples.size() < 2) throw DegenerateSamples("DegenerateSamples: at least two sample points are required");
    const int d = static_cast<int>(samples.size());
    Matrix x1 = Matrix::Zero(d, d), x2 = Matrix::Zero(d, d);
    for (int s = 0; s < d; ++s) {
        x1(s, s) = kHalfRoot2 * samples[static_cast<std::size_t>(s)].first;
        x2(s, s) = kHalfRoot2 * samples[static_cast<std::size_t>(s)].second;
    }
    MatrixModel m("torus", sphere_presentation(pair ? *pair : classical_pair(2)), {{gx(1), x1}, {gx(2), x2}});
    auto ind = check_independence({Poly(Word{x(1, true), x(2)}), Poly(Word{x(1), x(2, true)})}, m);
    if (!ind.independent)
        throw DegenerateSamples("DegenerateSamples: x1* x2 and x1 x2* have rank " + std::to_string(ind.rank) +
                                " < 2 over the samples");
    return m;
}

std::vector<std::pair<Complex, Complex>> default_torus_samples() { return {{1.0, 1.0}, {1.0, Complex(0, 1)}}; }

namespace {

Matrix gram_schmidt(Matrix m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index k = 0; k < j; ++k) {
            Complex proj = m.col(k).dot(m.col(j));
            m.col(j) -= proj * m.col(k);
        }
        m.col(j) /= m.col(j).norm();
    }
    return m;
}

Matrix gaussian_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            double re = g(rng);
            double im = g(rng);
            m(i, j) = Complex(re, im);
        }
    return gram_schmidt(m);
}

}  // namespace

MatrixModel free_unitary_model(int dim, std::uint64_t seed) {
    if (dim < 3) throw std::invalid_argument("free_unitary_model needs dim >= 3");
    auto pair = CommutationPair::validate({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}});
    const std::vector<Poly> family = {Poly(Word{x(1, true), x(2)}), Poly(Word{x(1), x(2, true)}),
                                      Poly(Word{x(2, true), x(1)}), Poly(Word{x(2), x(1, true)})};
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        Matrix u1 = gaussian_unitary(dim, rng);
        Matrix u2 = gaussian_unitary(dim, rng);
        MatrixModel m("free-unitary", sphere_presentation(pair), {{gx(1), kHalfRoot2 * u1}, {gx(2), kHalfRoot2 * u2}});
        m.seed = seed + attempt;
        if (check_independence(family, m).independent) return m;
    }
    throw DegenerateSamples("DegenerateSamples: 16 seeded draws failed to separate the four products");
}

namespace {

Presentation o2plus_presentation() {
    return orthogonal_qg_presentation(CommutationPair::from_epsilon({{0, 0}, {0, 0}}));
}

Generator gv(int i, int j) { return v(i, j).generator(); }

constexpr double kC = 0.6;
constexpr double kS = 0.8;

}  // namespace

MatrixModel o2plus_point() {
    return MatrixModel("o2plus-point", o2plus_presentation(),
                       {{gv(1, 1), scalar(kC)}, {gv(1, 2), scalar(kS)}, {gv(2, 1), scalar(kS)}, {gv(2, 2), scalar(-kC)}});
}

MatrixModel o2plus_anticommuting() {
    Matrix a = kC * (unit(2, 1, 1) - unit(2, 2, 2));
    Matrix b = kS * (unit(2, 1, 2) + unit(2, 2, 1));
    return MatrixModel("o2plus-anticommuting", o2plus_presentation(),
                       {{gv(1, 1), a}, {gv(1, 2), b}, {gv(2, 1), b}, {gv(2, 2), a}});
}

MatrixModel o2plus_model() { return direct_sum({o2plus_point(), o2plus_anticommuting()}, "o2plus"); }

MatrixModel point_model_sphere(int k, const CommutationPair& pair, Complex z0) {
    const int n = pair.n();
    if (k < 1 || k > n) throw std::invalid_argument("point index out of range");
    std::map<Generator, Matrix> a;
    for (int i = 1; i <= n; ++i) a[gx(i)] = scalar(i == k ? z0 : 0.0);
    return MatrixModel("point-sphere-" + std::to_string(k), sphere_presentation(pair), std::move(a));
}

MatrixModel point_model_tuple(int k, const CommutationPair& eps_pair) {
    const int n = eps_pair.n();
    if (k < 1 || k > n) throw std::invalid_argument("point index out of range");
    std::map<Generator, Matrix> a;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a[t(i, j).generator()] = scalar(i == j ? 1.0 : 0.0);
    return MatrixModel("point-tuple-" + std::to_string(k), tuple_space_presentation(eps_pair), std::move(a));
}

MatrixModel scalar_unitary_model(const CommutationPair& pair, const Matrix& m, std::string name) {
    std::map<Generator, Matrix> a;
    for (int i = 1; i <= pair.n(); ++i)
        for (int j = 1; j <= pair.n(); ++j) a[u(i, j).generator()] = scalar(m(i - 1, j - 1));
    return MatrixModel(std::move(name), unitary_qg_presentation(pair), std::move(a));
}

MatrixModel scalar_orthogonal_model(const CommutationPair& eps_pair, const Matrix& m, std::string name) {
    std::map<Generator, Matrix> a;
    for (int i = 1; i <= eps_pair.n(); ++i)
        for (int j = 1; j <= eps_pair.n(); ++j) a[gv(i, j)] = scalar(m(i - 1, j - 1));
    return MatrixModel(std::move(name), orthogonal_qg_presentation(eps_pair), std::move(a));
}

MatrixModel direct_sum(const std::vector<MatrixModel>& models, std::string name) {
    if (models.empty()) throw std::invalid_argument("direct_sum of no models");
    const auto& first = models.front().presentation();
    int dim = 0;
    for (const auto& m : models) {
        const auto& p = m.presentation();
        if (p.kind != first.kind || !(p.source_pair == first.source_pair))
            throw PresentationMismatch("PresentationMismatch: " + m.name() + " claims a different presentation");
        dim += m.dim();
    }
    std::map<Generator, Matrix> a;
    for (const auto& g : first.roster.generators) {
        Matrix block = Matrix::Zero(dim, dim);
        int off = 0;
        for (const auto& m : models) {
            block.block(off, off, m.dim(), m.dim()) = m.at(g);
            off += m.dim();
        }
        a[g] = std::move(block);
    }
    if (name.empty()) {
        for (const auto& m : models) name += (name.empty() ? "" : "+") + m.name();
    }
    return MatrixModel(std::move(name), first, std::move(a), models.front().tolerance());
}

MatrixModel embed_sphere_model(const MatrixModel& model, const Presentation& pres, const std::vector<int>& targets,
                               std::string name) {
    if (model.presentation().kind != PresentationKind::ComplexSphere || pres.kind != PresentationKind::ComplexSphere)
        throw PresentationMismatch("PresentationMismatch: embedding needs sphere presentations");
    if (static_cast<int>(targets.size()) != model.presentation().source_pair.n())
        throw std::invalid_argument("one target per source coordinate is required");
    std::map<Generator, Matrix> a;
    for (const auto& g : pres.roster.generators) a[g] = Matrix::Zero(model.dim(), model.dim());
    for (std::size_t k = 0; k < targets.size(); ++k) {
        if (targets[k] < 1 || targets[k] > pres.source_pair.n()) throw std::invalid_argument("target out of range");
        a[gx(targets[k])] = model.at(gx(static_cast<int>(k + 1)));
    }
    return MatrixModel(name.empty() ? model.name() + "-embedded" : std::move(name), pres, std::move(a),
                       model.tolerance());
}

// ---------------------------------------------------------------------------

namespace {

Matrix permutation(int n, int shift) {
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, (i + shift) % n) = 1.0;
    return m;
}

Matrix phases(int n, double step) {
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = std::polar(1.0, step * (i + 1));
    return m;
}

void keep_valid(std::vector<MatrixModel>& out, MatrixModel m) {
    if (m.state() == ModelState::Witness) out.push_back(std::move(m));
}

template <class Make>
void try_model(std::vector<MatrixModel>& out, Make&& make) {
    try {
        keep_valid(out, make());
    } catch (const std::exception&) {
        // constructor preconditions not met for this presentation
    }
}

}  // namespace

std::vector<MatrixModel> witness_catalog(const Presentation& pres) {
    std::vector<MatrixModel> out;
    const auto& pair = pres.source_pair;
    const int n = pair.n();
    switch (pres.kind) {
        case PresentationKind::ComplexSphere: {
            for (int k = 1; k <= n; ++k) {
                try_model(out, [&] { return point_model_sphere(k, pair); });
                try_model(out, [&] { return point_model_sphere(k, pair, std::polar(1.0, 0.7)); });
            }
            if (n == 2) {
                try_model(out, [&] { return torus_model(default_torus_samples(), pair); });
                try_model(out, [&] { return embed_sphere_model(free_unitary_model(4, 0), pres, {1, 2}); });
                try_model(out, [&] { return embed_sphere_model(remark_phi_model(), pres, {1, 2}); });
            }
            // diagonal points of the classical sphere
            try_model(out, [&] {
                std::map<Generator, Matrix> a;
                for (int i = 1; i <= n; ++i) a[gx(i)] = phases(3, 0.4 * i) / std::sqrt(static_cast<double>(n));
                return MatrixModel("classical-diagonal", pres, std::move(a));
            });
            break;
        }
        case PresentationKind::UnitaryQG:
            try_model(out, [&] { return scalar_unitary_model(pair, Matrix::Identity(n, n), "identity"); });
            try_model(out, [&] { return scalar_unitary_model(pair, phases(n, 0.9), "diagonal-phases"); });
            try_model(out, [&] { return scalar_unitary_model(pair, permutation(n, 1), "cyclic-permutation"); });
            try_model(out, [&] {
                std::mt19937_64 rng(5);
                return scalar_unitary_model(pair, gaussian_unitary(n, rng), "generic-unitary");
            });
            break;
        case PresentationKind::OrthogonalQG: {
            try_model(out, [&] { return scalar_orthogonal_model(pair, Matrix::Identity(n, n), "identity"); });
            Matrix signs = Matrix::Identity(n, n);
            signs(0, 0) = -1.0;
            try_model(out, [&] { return scalar_orthogonal_model(pair, signs * permutation(n, 1), "signed-permutation"); });
            if (n == 2) {
                Matrix rot(2, 2);
                rot << kC, kS, -kS, kC;
                try_model(out, [&] { return scalar_orthogonal_model(pair, rot, "rotation"); });
                try_model(out, [&] { return o2plus_model(); });
            }
            break;
        }
        case PresentationKind::TupleSpace:
            for (int k = 1; k <= n; ++k) try_model(out, [&] { return point_model_tuple(k, pair); });
            break;
    }
    // only models of this exact presentation count
    std::vector<MatrixModel> filtered;
    for (auto& m : out)
        if (m.presentation().kind == pres.kind && m.presentation().source_pair == pair) filtered.push_back(std::move(m));
    return filtered;
}

}  // namespace ncstar
