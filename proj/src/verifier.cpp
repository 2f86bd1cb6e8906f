#include "ncstar/verifier.hpp"

#include "ncstar/rewrite.hpp"

#include <omp.h>

#include <chrono>
#include <functional>
#include <stdexcept>

namespace ncstar {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

void VerificationReport::finish() {
    overall = Status::ProvedZero;
    for (const auto& c : checks)
        if (!c.passed()) overall = Status::Inconclusive;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

/// Runs body(i) for i < count, in parallel unless serial execution is requested
/// or we are already inside a parallel region. body must not throw.
void for_each_index(std::size_t count, const VerifyOptions& opts, const std::function<void(std::size_t)>& body) {
    if (opts.execution == Execution::Serial || opts.jobs <= 1 || omp_in_parallel()) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs)
    for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

QuotientBasis basis_for(const Presentation& pres, const VerifyOptions& opts) {
    return QuotientBasis(pres, {opts.bound, 2'000'000, opts.evidence});
}

std::vector<CheckResult> tensor_checks(const std::vector<Relation>& relations, const TensorHom& hom,
                                       const QuotientBasis& left, const QuotientBasis& right,
                                       const std::string& prefix, const VerifyOptions& opts) {
    std::vector<CheckResult> out(relations.size());
    for_each_index(relations.size(), opts, [&](std::size_t i) {
        const auto start = Clock::now();
        CheckResult& res = out[i];
        res.relation = relations[i].id;
        res.description = prefix + "(" + relations[i].description + ")";
        try {
            TensorPoly img = hom.apply(relations[i].poly);
            res.certificate = is_zero_tensor(img, left, right, opts.evidence);
            if (res.certificate.status == Status::ProvedZero && res.certificate.zero) {
                if (!replay(img, res.certificate.zero->tensor_combination, left.relations(), right.relations())) {
                    res.certificate.status = Status::Inconclusive;
                    res.certificate.note = "evidence replay failed";
                } else {
                    res.evidence_ref = evidence_digest(*res.certificate.zero);
                    res.certificate.note = std::to_string(res.certificate.zero->tensor_combination.size()) +
                                           " relation instances";
                }
            }
        } catch (const std::exception& e) {
            res.certificate = {};
            res.certificate.note = e.what();
        }
        res.micros = micros_since(start);
    });
    return out;
}

VerificationReport fail_report(std::string task, std::string pair, const std::exception& e) {
    VerificationReport rep;
    rep.task = std::move(task);
    rep.pair = std::move(pair);
    CheckResult c;
    c.relation = "setup";
    c.description = "building quotient bases";
    c.certificate.note = e.what();
    rep.checks.push_back(std::move(c));
    rep.finish();
    return rep;
}

}  // namespace

VerificationReport verify_comultiplication(const CommutationPair& pair, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.task = "hopf";
    rep.pair = pair.str();
    try {
        Presentation pres = unitary_qg_presentation(pair);
        QuotientBasis q = basis_for(pres, opts);
        rep.checks = tensor_checks(pres.all_relations(), comultiplication(pair.n()), q, q, "Delta", opts);
    } catch (const std::exception& e) {
        return fail_report(rep.task, rep.pair, e);
    }
    rep.finish();
    return rep;
}

VerificationReport verify_sphere_action(const CommutationPair& input, Side side, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.task = std::string("sphere-action-") + to_string(side);
    CommutationPair pair = input;
    if (!is_regular(input).is_regular) {
        pair = regularize(input);
        rep.notices.push_back("regularized first: " + input.str() + " -> " + pair.str());
    }
    rep.pair = pair.str();
    try {
        QuotientBasis left = basis_for(unitary_qg_presentation(pair), opts);
        Presentation sphere = sphere_presentation(pair);
        QuotientBasis right = basis_for(sphere, opts);
        rep.checks = tensor_checks(sphere.all_relations(), sphere_coaction(pair.n(), side == Side::Left), left, right,
                                   side == Side::Left ? "alpha" : "beta", opts);
    } catch (const std::exception& e) {
        return fail_report(rep.task, rep.pair, e);
    }
    rep.finish();
    return rep;
}

VerificationReport verify_tuple_action(const CommutationPair& eps_pair, Side side, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.task = std::string("tuple-action-") + to_string(side);
    CommutationPair pair = CommutationPair::validate(eps_pair.epsilon(), BitMatrix(eps_pair.n()));
    rep.pair = "eps=" + pair.epsilon().str();
    try {
        QuotientBasis left = basis_for(orthogonal_qg_presentation(pair), opts);
        Presentation tuple = tuple_space_presentation(pair);
        QuotientBasis right = basis_for(tuple, opts);
        rep.checks = tensor_checks(tuple.all_relations(), tuple_coaction(pair.n(), side == Side::Left), left, right,
                                   side == Side::Left ? "alpha" : "beta", opts);
    } catch (const std::exception& e) {
        return fail_report(rep.task, rep.pair, e);
    }
    rep.finish();
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

WitnessData witness_data(const MatrixModel& m) {
    WitnessData w;
    w.model = m.name();
    w.state = to_string(m.state());
    w.dim = m.dim();
    w.residual_max = m.residuals().max;
    w.seed = m.seed;
    return w;
}

}  // namespace

VerificationReport verify_noninjectivity_example(std::optional<CommutationPair> override_pair,
                                                 const VerifyOptions& opts) {
    const CommutationPair pair =
        override_pair ? *override_pair : CommutationPair::validate({{0, 0}, {0, 0}}, {{0, 1}, {1, 0}});
    VerificationReport rep;
    rep.task = "noninjectivity";
    rep.pair = pair.str();

    CheckResult zero;
    zero.relation = "X12";
    zero.description = "X12 = u11* u21 vanishes in the unitary quantum group";
    const auto start = Clock::now();
    const bool defined = pair.n() == 2 && pair.et(1, 2) == 1 && (pair.et(1, 1) == 0 || pair.et(2, 2) == 0);
    if (!defined) {
        zero.certificate.note = "guard: X12 is undefined for this pair (needs eta_12 = 1 and some eta_kk = 0)";
    } else {
        try {
            Presentation pres = unitary_qg_presentation(pair);
            RewriteSystem rs(pres);
            const int k0 = *rs.canonical_column();
            Poly x12(Word{u(1, k0, true), u(2, k0)});
            zero.description = "X12 = " + x12.str() + " vanishes in the unitary quantum group";
            zero.certificate = rs.certify(x12, opts.step_limit);
            if (zero.certificate.status == Status::ProvedZero) {
                if (!replay(x12, zero.certificate.zero->combination, rs.relations())) {
                    zero.certificate.status = Status::Inconclusive;
                    zero.certificate.note = "evidence replay failed";
                } else {
                    zero.evidence_ref = evidence_digest(*zero.certificate.zero);
                    for (const auto& n : zero.certificate.zero->notes) zero.certificate.note += n;
                }
            }
        } catch (const std::exception& e) {
            zero.certificate = {};
            zero.certificate.note = e.what();
        }
    }
    zero.micros = micros_since(start);
    rep.checks.push_back(std::move(zero));

    CheckResult witness;
    witness.relation = "x1 x2*";
    witness.description = "x1 x2* is nonzero on the sphere (x1 -> a, x2 -> b*)";
    witness.expected = Status::ProvedNonzero;
    const auto start2 = Clock::now();
    try {
        MatrixModel base = remark_phi_model();
        MatrixModel model("remark-phi", sphere_presentation(pair), base.assignment(), opts.tolerance);
        witness.witness = witness_data(model);
        Matrix img = evaluate(Poly(Word{x(1), x(2, true)}), model);
        double norm = operator_norm(img);
        if (model.state() != ModelState::Witness) {
            witness.certificate.note = "WitnessInvalid: residual " + std::to_string(model.residuals().max);
        } else if (norm > opts.svd_threshold) {
            witness.certificate.status = Status::ProvedNonzero;
            char buf[160];
            std::snprintf(buf, sizeof buf, "ab = diag(%.17g, %.17g, %.17g, %.17g)", img(0, 0).real(),
                          img(1, 1).real(), img(2, 2).real(), img(3, 3).real());
            witness.certificate.nonzero = NonzeroEvidence{model.name(), norm, buf};
            witness.certificate.note = buf;
        }
    } catch (const std::exception& e) {
        witness.certificate.note = e.what();
    }
    witness.micros = micros_since(start2);
    rep.checks.push_back(std::move(witness));
    rep.finish();
    return rep;
}

// ---------------------------------------------------------------------------

CheckResult independence_check(const std::string& label, const std::vector<Poly>& family, const MatrixModel& model,
                               double threshold, bool commutation_gate_only) {
    CheckResult res;
    res.relation = label;
    res.expected = Status::ProvedNonzero;
    std::string fam;
    for (const auto& p : family) fam += (fam.empty() ? "{" : ", ") + p.str();
    res.description = "independence of " + fam + "} in " + model.name();
    const double gate = commutation_gate_only ? model.residuals().max_commutation : model.residuals().max;
    if (gate > model.tolerance())
        throw WitnessInvalid("WitnessInvalid: " + model.name() + " residual " + std::to_string(gate) +
                             " exceeds tolerance");
    auto ind = check_independence(family, model, threshold);
    WitnessData w = witness_data(model);
    w.rank = ind.rank;
    w.expected_rank = family.size();
    w.singular_values = ind.singular_values;
    res.witness = std::move(w);
    if (ind.independent) {
        res.certificate.status = Status::ProvedNonzero;
        res.certificate.nonzero = NonzeroEvidence{model.name(), ind.singular_values.back(),
                                                  "rank " + std::to_string(ind.rank) + "/" +
                                                      std::to_string(family.size())};
    }
    res.certificate.note = "rank " + std::to_string(ind.rank) + "/" + std::to_string(family.size());
    return res;
}

std::vector<std::string> independence_suites() {
    return {"remark-products", "remark-normality", "torus", "free-unitary", "o2plus"};
}

namespace {

Poly w2(Letter a, Letter b) { return Poly(Word{a, b}); }

std::vector<Poly> four_products() {
    return {w2(x(1, true), x(2)), w2(x(1), x(2, true)), w2(x(2, true), x(1)), w2(x(2), x(1, true))};
}

}  // namespace

VerificationReport verify_independence_suite(const std::string& suite, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.task = "witness-" + suite;
    auto run = [&](const std::string& label, const std::function<MatrixModel()>& make, const std::vector<Poly>& fam,
                   bool commutation_gate) {
        const auto start = Clock::now();
        CheckResult res;
        try {
            MatrixModel m = make();
            res = independence_check(label, fam, m, opts.svd_threshold, commutation_gate);
            if (rep.pair.empty()) rep.pair = m.presentation().source_pair.str();
        } catch (const std::exception& e) {
            res.relation = label;
            res.expected = Status::ProvedNonzero;
            res.description = "independence witness";
            res.certificate.note = e.what();
        }
        res.micros = micros_since(start);
        rep.checks.push_back(std::move(res));
    };

    if (suite == "remark-products") {
        run("a*b, ab*, b*a, ba*", remark_model, four_products(), true);
        rep.notices.push_back("remark model is a probe: only commutation residuals gate this suite");
    } else if (suite == "remark-normality") {
        run("b*b, bb*, 1", remark_model, {w2(x(2, true), x(2)), w2(x(2), x(2, true)), Poly::constant(1)}, true);
        rep.notices.push_back("remark model is a probe: only commutation residuals gate this suite");
    } else if (suite == "torus") {
        auto samples = opts.torus_samples.empty() ? default_torus_samples() : opts.torus_samples;
        run("x1* x2, x1 x2*", [&] { return torus_model(samples); }, {w2(x(1, true), x(2)), w2(x(1), x(2, true))},
            false);
    } else if (suite == "free-unitary") {
        run("u1*u2, u1u2*, u2*u1, u2u1*", [&] { return free_unitary_model(4, opts.seed); }, four_products(), false);
    } else if (suite == "o2plus") {
        run("v11 v21, v21 v11", o2plus_model, {w2(v(1, 1), v(2, 1)), w2(v(2, 1), v(1, 1))}, false);
        CheckResult exact;
        exact.relation = "orthogonality residuals";
        exact.description = "every O2+ relation evaluates to exactly 0 in both summands";
        MatrixModel m = o2plus_model();
        double mx = std::max({m.residuals().max, o2plus_point().residuals().max,
                              o2plus_anticommuting().residuals().max});
        if (mx == 0.0) exact.certificate.status = Status::ProvedZero;
        exact.certificate.note = "max residual " + std::to_string(mx);
        rep.checks.push_back(std::move(exact));
    } else if (suite == "corrected") {
        run("A*B, AB*, B*A, BA*", corrected_sphere_model, four_products(), false);
    } else {
        throw std::invalid_argument("unknown witness suite '" + suite + "'");
    }
    rep.finish();
    return rep;
}

VerificationReport verify_regularization_consistency(const CommutationPair& pair, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.task = "regularization-consistency";
    rep.pair = pair.str();
    CommutationPair reg = regularize(pair);
    if (reg == pair) rep.notices.push_back("pair is already regular");
    try {
        QuotientBasis basis(sphere_presentation(pair), {opts.product_bound, 2'000'000, opts.evidence});
        auto rels = sphere_presentation(reg).all_relations();
        rep.checks.resize(rels.size());
        for_each_index(rels.size(), opts, [&](std::size_t i) {
            const auto start = Clock::now();
            CheckResult& c = rep.checks[i];
            c.relation = rels[i].id;
            c.description = rels[i].description;
            c.required = false;
            try {
                c.certificate = ideal_membership(rels[i].poly, basis);
                if (c.certificate.zero) c.evidence_ref = evidence_digest(*c.certificate.zero);
            } catch (const std::exception& e) {
                c.certificate.note = e.what();
            }
            c.micros = micros_since(start);
        });
    } catch (const std::exception& e) {
        return fail_report(rep.task, rep.pair, e);
    }
    std::string unreached;
    for (const auto& c : rep.checks)
        if (c.certificate.status != Status::ProvedZero) unreached += (unreached.empty() ? "" : ", ") + c.relation;
    if (!unreached.empty())
        rep.notices.push_back("inconclusive at product bound " + std::to_string(opts.product_bound) + ": " + unreached);
    rep.finish();
    return rep;
}

double max_witness_norm(const Poly& p, const std::vector<MatrixModel>& models) {
    double out = 0;
    for (const auto& m : models) out = std::max(out, operator_norm(evaluate(p, m)));
    return out;
}

}  // namespace ncstar
