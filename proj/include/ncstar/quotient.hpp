#pragma once

#include "ncstar/certificate.hpp"
#include "ncstar/presentations.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncstar {

struct DimensionCap : std::length_error {
    using std::length_error::length_error;
};

/// Exact semi-echelon basis of a span of polynomials. Each row is monic at its
/// pivot (its largest word) and optionally remembers how it was assembled.
class Echelon {
public:
    struct Row {
        Poly poly;
        Combination combo;
        std::string origin;
        Scalar scale;  ///< leading coefficient before normalisation
    };

    explicit Echelon(bool track = false) : track_(track) {}

    /// Adds p (= combo, if tracked) to the span. Returns false when p already lies in it.
    bool insert(Poly p, Combination combo = {}, std::string origin = {});
    /// Eliminates every pivot word. With `combo`, adds the combination equal to p - result.
    /// `used` collects the pivots eliminated, in order.
    Poly reduce(Poly p, Combination* combo = nullptr, std::vector<Word>* used = nullptr) const;

    const Row* row(const Word& pivot) const;
    const std::map<Word, Row>& rows() const { return rows_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t entries() const { return entries_; }
    bool tracking() const { return track_; }

private:
    bool track_;
    std::map<Word, Row> rows_;
    std::size_t entries_ = 0;
};

struct QuotientOptions {
    int bound = 2;                  ///< largest word degree in the span
    std::size_t cap = 2'000'000;    ///< limit on monomials and on stored row entries
    bool provenance = false;        ///< keep relation combinations for evidence
};

/// Quotient of the degree-<= bound words by the span of the two-sided relation
/// products m1 * r * m2 of degree <= bound, built from the star-closed relations.
class QuotientBasis {
public:
    struct NormalForm {
        Poly poly;
        Combination combo;  ///< word - poly, when provenance is on
    };

    QuotientBasis(const Presentation& pres, QuotientOptions options = {});

    int bound() const { return options_.bound; }
    bool provenance() const { return options_.provenance; }
    const Roster& roster() const { return roster_; }
    const std::vector<Word>& monomials() const { return monomials_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t rank() const { return echelon_.rank(); }
    const Echelon& echelon() const { return echelon_; }
    /// Words that are not pivots: coordinates of the quotient.
    std::vector<Word> complement() const;

    /// Normal form of a word of degree <= bound; nullptr above the bound.
    const NormalForm* normal_form(const Word& w) const;
    /// Normal form of p. Words above the bound are left untouched.
    Poly reduce(const Poly& p, Combination* combo = nullptr) const;

private:
    QuotientOptions options_;
    Roster roster_;
    std::vector<Word> monomials_;
    std::vector<Relation> relations_;
    Echelon echelon_;
    std::unordered_map<Word, NormalForm, WordHash> cache_;
};

/// Leg-wise quotient test. ProvedZero when every coefficient of the reduced
/// tensor vanishes; Inconclusive otherwise.
Certificate is_zero_tensor(const TensorPoly& t, const QuotientBasis& left, const QuotientBasis& right,
                           bool evidence = true);

/// Membership of p in the span of m1 * r * m2 with deg <= product_bound.
Certificate ideal_membership_bounded(const Poly& p, const Presentation& pres, int product_bound,
                                     std::size_t cap = 2'000'000);
/// Same, against an already built basis (must carry provenance for evidence).
Certificate ideal_membership(const Poly& p, const QuotientBasis& basis);

}  // namespace ncstar
