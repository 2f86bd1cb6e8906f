#pragma once

#include "ncstar/poly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncstar {

/// Square 0/1 matrix with 1-based access.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n * n), 0) {}
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return n_; }
    int operator()(int i, int j) const { return bits_[idx(i, j)]; }
    void set(int i, int j, int value) { bits_[idx(i, j)] = static_cast<std::uint8_t>(value); }
    /// Principal submatrix on the given 1-based indices (in that order).
    BitMatrix restrict(const std::vector<int>& keep) const;
    std::vector<std::vector<int>> rows() const;
    std::string str() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
    friend auto operator<=>(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
    int n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Validation failure for an (eps, eta) input; names the offending index.
struct PairError : std::invalid_argument {
    enum class Kind { SizeMismatch, NotSymmetric, BadDiagonal, BadEntry };
    PairError(Kind k, int i, int j, const std::string& what);
    Kind kind;
    int i;
    int j;
};

const char* to_string(PairError::Kind k);

/// Validated (eps, eta) data: both symmetric 0/1, eps with zero diagonal.
class CommutationPair {
public:
    /// Throws PairError.
    static CommutationPair validate(const std::vector<std::vector<int>>& epsilon,
                                    const std::vector<std::vector<int>>& eta);
    static CommutationPair validate(const BitMatrix& epsilon, const BitMatrix& eta);
    /// Validates an eps-only input (orthogonal and tuple families); eta is zero.
    static CommutationPair from_epsilon(const std::vector<std::vector<int>>& epsilon);

    int n() const { return epsilon_.size(); }
    const BitMatrix& epsilon() const { return epsilon_; }
    const BitMatrix& eta() const { return eta_; }
    int eps(int i, int j) const { return epsilon_(i, j); }
    int et(int i, int j) const { return eta_(i, j); }

    std::string str() const;
    friend bool operator==(const CommutationPair&, const CommutationPair&) = default;
    friend auto operator<=>(const CommutationPair&, const CommutationPair&) = default;

private:
    CommutationPair(BitMatrix e, BitMatrix h) : epsilon_(std::move(e)), eta_(std::move(h)) {}
    BitMatrix epsilon_;
    BitMatrix eta_;
};

struct RegularityReport {
    bool is_regular = true;
    /// Pairs (i, j), i < j, with eps_ij != eta_ij although x_i or x_j is normal.
    std::vector<std::pair<int, int>> violations_convention_A;
    /// Non-normal i without a non-normal partner j that fails to commute fully.
    std::vector<int> violations_convention_B;
};

RegularityReport is_regular(const CommutationPair& pair);

/// Fixpoint of the forced-normality rule and the OR-merge for normal generators.
CommutationPair regularize(const CommutationPair& pair);

struct TooLarge : std::length_error {
    using std::length_error::length_error;
};

struct EnumerationLimits {
    int max_n = 4;
    std::size_t max_count = std::size_t{1} << 20;
};

/// Every valid pair of size n, lexicographic on flattened (eps, eta).
std::vector<CommutationPair> enumerate_pairs(int n, bool regular_only, EnumerationLimits limits = {});
/// Every symmetric zero-diagonal eps of size n, lexicographic.
std::vector<CommutationPair> enumerate_epsilons(int n, EnumerationLimits limits = {});

// ---------------------------------------------------------------------------

enum class PresentationKind { ComplexSphere, UnitaryQG, OrthogonalQG, TupleSpace };
const char* to_string(PresentationKind k);

/// A relation asserted equal to zero.
struct Relation {
    std::string id;
    Poly poly;
    std::string description;
};

enum class SumShape {
    SphereStarFirst,  ///< sum_i x_i* x_i - 1
    SphereStarLast,   ///< sum_i x_i x_i* - 1
    UnitaryStarU,     ///< (u*u)_ij: sum_k u_ki* u_kj - delta_ij
    UnitaryUStar,     ///< (uu*)_ij: sum_k u_ik u_jk* - delta_ij
    ConjStarU,        ///< (conj(u) conj(u)*)_ij: sum_k u_ik* u_jk - delta_ij
    ConjUStar,        ///< (conj(u)* conj(u))_ij: sum_k u_ki u_kj* - delta_ij
    OrthoRows,        ///< sum_k u_ik u_jk - delta_ij
    OrthoCols,        ///< sum_k u_ki u_kj - delta_ij
    TupleCols,        ///< sum_i x_ik x_il - delta_kl
};

/// A delta-sum family kept as a schema; expand() produces one relation per index pair.
struct SumFamily {
    std::string id;
    SumShape shape;
    int n;
    std::vector<Relation> expand() const;
};

class Presentation {
public:
    PresentationKind kind;
    Roster roster;
    std::vector<Relation> relations;
    std::vector<SumFamily> sum_families;
    CommutationPair source_pair;

    /// relations followed by every expanded sum-family instance, duplicates dropped.
    std::vector<Relation> all_relations() const;
    /// all_relations() closed under the involution.
    std::vector<Relation> star_closed_relations() const;
};

Presentation sphere_presentation(const CommutationPair& pair);
Presentation unitary_qg_presentation(const CommutationPair& pair);
Presentation orthogonal_qg_presentation(const CommutationPair& eps_pair);
Presentation tuple_space_presentation(const CommutationPair& eps_pair);

struct RestrictError : std::invalid_argument {
    enum class Kind { EmptySubset, IndexOutOfRange, DuplicateIndex };
    RestrictError(Kind k, const std::string& what) : std::invalid_argument(what), kind(k) {}
    Kind kind;
};

struct Restriction {
    Presentation presentation;
    /// old index (1-based) -> new index, or nullopt when the coordinate is sent to 0.
    std::vector<std::optional<int>> mapping;
    /// Image of a polynomial over the original sphere under the coordinate map.
    Poly apply(const Poly& p) const;
};

Restriction restrict_presentation(const Presentation& pres, const std::vector<int>& keep);

}  // namespace ncstar
