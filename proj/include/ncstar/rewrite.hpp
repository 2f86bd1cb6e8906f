#pragma once

#include "ncstar/certificate.hpp"
#include "ncstar/presentations.hpp"
#include "ncstar/quotient.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncstar {

/// Oriented rule pattern -> replacement taken from one relation.
struct Rule {
    enum class Kind { Zero, Canonical, Order };
    Kind kind = Kind::Order;
    std::string id;
    int relation = 0;  ///< index into RewriteSystem::relations()
    Word pattern;
    Poly replacement;
    Scalar scale;  ///< coefficient of the pattern inside the relation
};

const char* to_string(Rule::Kind k);

struct RewriteResult {
    Poly result;
    std::vector<TraceStep> trace;
    Combination combination;  ///< input - result, as relation instances
    std::size_t steps = 0;
};

struct StepLimitExceeded : std::runtime_error {
    StepLimitExceeded(const std::string& what, RewriteResult p) : std::runtime_error(what), partial(std::move(p)) {}
    RewriteResult partial;
};

/// Rewriting on length-2 patterns followed by a linear pass.
///
/// Rules come from the star-closed relations: monomial relations become zero
/// rules, two-word relations become oriented rules. X/Y words are sent to the
/// star-first representative at index k0 = min{k : eta_kk = 0}; every other
/// two-word relation points to its smaller word. A rule is kept only if the
/// rule graph on words stays acyclic. Every relation, after rule
/// normalisation, feeds the linear pass, so degree <= 2 reduction is exact.
class RewriteSystem {
public:
    explicit RewriteSystem(const Presentation& pres);

    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<SumFamily>& syzygies() const { return syzygies_; }
    std::optional<int> canonical_column() const { return k0_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const Echelon& linear() const { return linear_; }
    const Rule* rule_for(const Word& pattern) const;

    /// Rule saturation then one linear pass. Throws StepLimitExceeded.
    RewriteResult rewrite(const Poly& p, std::size_t max_steps = 100000) const;
    /// Rule saturation only.
    RewriteResult saturate(const Poly& p, std::size_t max_steps = 100000) const;
    /// Applies the recorded rule steps (linear steps are skipped) and returns the result.
    Poly replay(const Poly& p, const std::vector<TraceStep>& trace) const;
    /// ProvedZero when rewrite(p) is zero; Inconclusive otherwise or on step exhaustion.
    Certificate certify(const Poly& p, std::size_t max_steps = 100000) const;

private:
    void apply(Poly& p, const Word& w, std::size_t pos, const Rule& rule, Combination* combo) const;

    Family family_;
    std::vector<Relation> relations_;
    std::vector<SumFamily> syzygies_;
    std::optional<int> k0_;
    std::vector<Rule> rules_;
    std::map<Word, std::size_t> by_pattern_;
    Echelon linear_{true};
};

}  // namespace ncstar
