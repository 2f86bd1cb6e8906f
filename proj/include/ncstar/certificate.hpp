#pragma once

#include "ncstar/poly.hpp"
#include "ncstar/presentations.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncstar {

enum class Status { ProvedZero, ProvedNonzero, Inconclusive };
const char* to_string(Status s);
/// Meet used by reports: anything short of ProvedZero downgrades.
Status meet(Status a, Status b);

/// m1 * r * m2 for relation index r of some relation list.
struct Instance {
    int relation = 0;
    Word left;
    Word right;
    friend auto operator<=>(const Instance&, const Instance&) = default;
    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Exact linear combination of relation instances.
class Combination {
public:
    using Terms = std::map<Instance, Scalar>;
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add(const Instance& inst, const Scalar& c);
    Combination& operator+=(const Combination& o);
    /// this += c * o * (left ... right)
    void add_scaled(const Combination& o, const Scalar& c, const Word& left = {}, const Word& right = {});
    Combination& operator*=(const Scalar& c);
    /// Sum in the free algebra.
    Poly expand(const std::vector<Relation>& relations) const;

private:
    Terms terms_;
};

struct TraceStep {
    std::string rule;
    Word word;
    std::size_t position = 0;
    std::size_t terms = 0;  ///< term count after the step
};

struct CombinationEntry {
    std::string relation;
    Word left;
    Word right;
    Scalar coefficient;
};

/// One leg of a tensor combination: relation instance on `leg`, tensored with `other`.
struct TensorCombinationEntry {
    int leg = 0;  ///< 0 = left, 1 = right
    std::string relation;
    Word left;
    Word right;
    Word other;
    Scalar coefficient;
};

struct ZeroEvidence {
    std::vector<TraceStep> trace;
    std::vector<CombinationEntry> combination;
    std::vector<TensorCombinationEntry> tensor_combination;
    /// Human-readable notes such as normalized syzygies with their leading coefficient.
    std::vector<std::string> notes;
};

struct NonzeroEvidence {
    std::string model;
    double norm = 0;
    std::string detail;
};

struct Certificate {
    Status status = Status::Inconclusive;
    std::optional<ZeroEvidence> zero;
    std::optional<NonzeroEvidence> nonzero;
    std::string note;
};

/// FNV-1a digest of the evidence, rendered as 16 hex digits.
std::string evidence_digest(const ZeroEvidence& ev);
std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 1469598103934665603ull);

std::vector<CombinationEntry> entries(const Combination& c, const std::vector<Relation>& relations);

/// True iff p equals the sum of the evidence's relation instances exactly.
bool replay(const Poly& p, const std::vector<CombinationEntry>& combo, const std::vector<Relation>& relations);
bool replay(const TensorPoly& t, const std::vector<TensorCombinationEntry>& combo,
            const std::vector<Relation>& left_relations, const std::vector<Relation>& right_relations);

}  // namespace ncstar
