#include "ncstar/certificate.hpp"

#include <cstdio>
#include <unordered_map>

namespace ncstar {

const char* to_string(Status s) {
    switch (s) {
        case Status::ProvedZero: return "ProvedZero";
        case Status::ProvedNonzero: return "ProvedNonzero";
        case Status::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Status meet(Status a, Status b) {
    if (a == Status::ProvedZero && b == Status::ProvedZero) return Status::ProvedZero;
    if (a == Status::ProvedZero) return b;
    if (b == Status::ProvedZero) return a;
    return a == b ? a : Status::Inconclusive;
}

void Combination::add(const Instance& inst, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(inst, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Combination& Combination::operator+=(const Combination& o) {
    for (const auto& [inst, c] : o.terms_) add(inst, c);
    return *this;
}

void Combination::add_scaled(const Combination& o, const Scalar& c, const Word& left, const Word& right) {
    if (c.is_zero()) return;
    for (const auto& [inst, k] : o.terms_) add({inst.relation, left * inst.left, inst.right * right}, k * c);
}

Combination& Combination::operator*=(const Scalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [inst, k] : terms_) k *= c;
    return *this;
}

Poly Combination::expand(const std::vector<Relation>& relations) const {
    Poly out;
    for (const auto& [inst, c] : terms_)
        out += Poly(inst.left) * relations.at(static_cast<std::size_t>(inst.relation)).poly * Poly(inst.right) * c;
    return out;
}

std::uint64_t fnv1a(const std::string& data, std::uint64_t h) {
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string evidence_digest(const ZeroEvidence& ev) {
    std::uint64_t h = fnv1a("zero-evidence");
    for (const auto& s : ev.trace)
        h = fnv1a(s.rule + "|" + s.word.str() + "|" + std::to_string(s.position) + "|" + std::to_string(s.terms) + ";", h);
    for (const auto& e : ev.combination)
        h = fnv1a(e.relation + "|" + e.left.str() + "|" + e.right.str() + "|" + e.coefficient.str() + ";", h);
    for (const auto& e : ev.tensor_combination)
        h = fnv1a(std::to_string(e.leg) + "|" + e.relation + "|" + e.left.str() + "|" + e.right.str() + "|" +
                      e.other.str() + "|" + e.coefficient.str() + ";",
                  h);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<CombinationEntry> entries(const Combination& c, const std::vector<Relation>& relations) {
    std::vector<CombinationEntry> out;
    out.reserve(c.size());
    for (const auto& [inst, k] : c.terms())
        out.push_back({relations.at(static_cast<std::size_t>(inst.relation)).id, inst.left, inst.right, k});
    return out;
}

namespace {

std::unordered_map<std::string, const Poly*> index(const std::vector<Relation>& relations) {
    std::unordered_map<std::string, const Poly*> out;
    for (const auto& r : relations) out.emplace(r.id, &r.poly);
    return out;
}

}  // namespace

bool replay(const Poly& p, const std::vector<CombinationEntry>& combo, const std::vector<Relation>& relations) {
    auto byid = index(relations);
    Poly sum;
    for (const auto& e : combo) {
        auto it = byid.find(e.relation);
        if (it == byid.end()) return false;
        sum += Poly(e.left) * *it->second * Poly(e.right) * e.coefficient;
    }
    return sum == p;
}

bool replay(const TensorPoly& t, const std::vector<TensorCombinationEntry>& combo,
            const std::vector<Relation>& left_relations, const std::vector<Relation>& right_relations) {
    auto left = index(left_relations), right = index(right_relations);
    TensorPoly sum(t.left_family(), t.right_family());
    for (const auto& e : combo) {
        auto& table = e.leg == 0 ? left : right;
        auto it = table.find(e.relation);
        if (it == table.end()) return false;
        Poly inst = Poly(e.left) * *it->second * Poly(e.right) * e.coefficient;
        for (const auto& [w, c] : inst.terms()) {
            if (e.leg == 0)
                sum.add_term(w, e.other, c);
            else
                sum.add_term(e.other, w, c);
        }
    }
    return sum == t;
}

}  // namespace ncstar
