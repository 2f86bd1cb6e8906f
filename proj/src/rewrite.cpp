#include "ncstar/rewrite.hpp"

#include <algorithm>
#include <set>

namespace ncstar {

const char* to_string(Rule::Kind k) {
    switch (k) {
        case Rule::Kind::Zero: return "zero";
        case Rule::Kind::Canonical: return "canonical";
        case Rule::Kind::Order: return "order";
    }
    return "?";
}

namespace {

std::set<Word> canonical_words(const Presentation& pres, int k0) {
    std::set<Word> out;
    const auto& p = pres.source_pair;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.n(); ++j)
            if (p.et(i, j)) {
                out.insert(Word{u(i, k0, true), u(j, k0)});
                out.insert(Word{u(k0, i, true), u(k0, j)});
            }
    return out;
}

}  // namespace

RewriteSystem::RewriteSystem(const Presentation& pres)
    : family_(pres.roster.family), relations_(pres.star_closed_relations()), syzygies_(pres.sum_families) {
    std::set<Word> canonical;
    if (pres.kind == PresentationKind::UnitaryQG) {
        for (int k = 1; k <= pres.source_pair.n() && !k0_; ++k)
            if (pres.source_pair.et(k, k) == 0) k0_ = k;
        if (k0_) canonical = canonical_words(pres, *k0_);
    }

    // delta-sums stay linear syzygies even when an instance has two terms
    std::set<std::string> sum_ids;
    for (const auto& fam : syzygies_)
        for (const auto& r : fam.expand()) {
            sum_ids.insert(r.id);
            sum_ids.insert(r.id + "*");
        }

    std::vector<Rule> candidates;
    for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
        const Poly& r = relations_[ri].poly;
        if (r.degree() != 2 || sum_ids.count(relations_[ri].id)) continue;
        const auto& terms = r.terms();
        Rule rule;
        rule.id = relations_[ri].id;
        rule.relation = static_cast<int>(ri);
        if (terms.size() == 1) {
            rule.kind = Rule::Kind::Zero;
            rule.pattern = terms.begin()->first;
        } else if (terms.size() == 2 && terms.begin()->first.degree() == 2) {
            const Word& lo = terms.begin()->first;
            const Word& hi = terms.rbegin()->first;
            bool lo_canon = canonical.count(lo) > 0, hi_canon = canonical.count(hi) > 0;
            if (lo_canon != hi_canon) {
                rule.kind = Rule::Kind::Canonical;
                rule.pattern = lo_canon ? hi : lo;
            } else {
                rule.kind = Rule::Kind::Order;
                rule.pattern = hi;
            }
        } else {
            continue;
        }
        rule.scale = r.coeff(rule.pattern);
        rule.replacement = Poly(rule.pattern) - r * (Scalar(1) / rule.scale);
        candidates.push_back(std::move(rule));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Rule& a, const Rule& b) { return a.kind < b.kind; });

    auto reaches = [this](const Word& from, const Word& target) {
        std::vector<Word> stack{from};
        std::set<Word> seen;
        while (!stack.empty()) {
            Word w = std::move(stack.back());
            stack.pop_back();
            if (w == target) return true;
            if (!seen.insert(w).second) continue;
            if (const Rule* r = rule_for(w))
                for (const auto& [next, c] : r->replacement.terms()) stack.push_back(next);
        }
        return false;
    };
    for (auto& cand : candidates) {
        if (by_pattern_.count(cand.pattern)) continue;
        bool cyclic = std::any_of(cand.replacement.terms().begin(), cand.replacement.terms().end(),
                                  [&](const auto& term) { return reaches(term.first, cand.pattern); });
        if (cyclic) continue;
        by_pattern_.emplace(cand.pattern, rules_.size());
        rules_.push_back(std::move(cand));
    }

    for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
        RewriteResult n = saturate(relations_[ri].poly);
        if (n.result.is_zero()) continue;
        Combination combo;
        combo.add({static_cast<int>(ri), {}, {}}, 1);
        combo.add_scaled(n.combination, -1);
        linear_.insert(n.result, std::move(combo), relations_[ri].id);
    }
}

const Rule* RewriteSystem::rule_for(const Word& pattern) const {
    auto it = by_pattern_.find(pattern);
    return it == by_pattern_.end() ? nullptr : &rules_[it->second];
}

void RewriteSystem::apply(Poly& p, const Word& w, std::size_t pos, const Rule& rule, Combination* combo) const {
    Scalar c = p.coeff(w);
    Word m1 = w.slice(0, pos), m2 = w.slice(pos + 2, w.degree() - pos - 2);
    p.add_term(w, -c);
    p += Poly(m1) * rule.replacement * Poly(m2) * c;
    if (combo) combo->add({rule.relation, m1, m2}, c / rule.scale);
}

RewriteResult RewriteSystem::saturate(const Poly& p, std::size_t max_steps) const {
    RewriteResult out;
    out.result = p;
    for (;;) {
        const Rule* rule = nullptr;
        Word word;
        std::size_t pos = 0;
        for (auto it = out.result.terms().rbegin(); it != out.result.terms().rend() && !rule; ++it) {
            const Word& w = it->first;
            for (std::size_t k = 0; k + 1 < w.degree(); ++k)
                if ((rule = rule_for(w.slice(k, 2)))) {
                    word = w;
                    pos = k;
                    break;
                }
        }
        if (!rule) return out;
        if (out.steps >= max_steps)
            throw StepLimitExceeded("StepLimitExceeded: " + std::to_string(max_steps) + " rewrite steps", out);
        apply(out.result, word, pos, *rule, &out.combination);
        ++out.steps;
        out.trace.push_back({rule->id, word, pos, out.result.size()});
    }
}

RewriteResult RewriteSystem::rewrite(const Poly& p, std::size_t max_steps) const {
    RewriteResult out = saturate(p, max_steps);
    std::vector<Word> used;
    out.result = linear_.reduce(out.result, &out.combination, &used);
    for (const auto& pivot : used)
        out.trace.push_back({"linear:" + linear_.row(pivot)->origin, pivot, 0, out.result.size()});
    return out;
}

Poly RewriteSystem::replay(const Poly& p, const std::vector<TraceStep>& trace) const {
    Poly cur = p;
    for (const auto& step : trace) {
        if (step.rule.rfind("linear:", 0) == 0) continue;
        if (step.position + 2 > step.word.degree()) throw std::invalid_argument("trace position out of range");
        const Rule* rule = rule_for(step.word.slice(step.position, 2));
        if (!rule || rule->id != step.rule) throw std::invalid_argument("trace names an unknown rule: " + step.rule);
        if (cur.coeff(step.word).is_zero()) throw std::invalid_argument("trace word absent: " + step.word.str());
        apply(cur, step.word, step.position, *rule, nullptr);
    }
    return cur;
}

Certificate RewriteSystem::certify(const Poly& p, std::size_t max_steps) const {
    Certificate cert;
    try {
        RewriteResult r = rewrite(p, max_steps);
        if (!r.result.is_zero()) {
            cert.note = "irreducible remainder " + r.result.str();
            return cert;
        }
        cert.status = Status::ProvedZero;
        ZeroEvidence ev;
        ev.trace = std::move(r.trace);
        ev.combination = entries(r.combination, relations_);
        for (const auto& step : ev.trace)
            if (step.rule.rfind("linear:", 0) == 0) {
                const auto* row = linear_.row(step.word);
                ev.notes.push_back(row->origin + " normalises to " + (row->poly * row->scale).str());
            }
        cert.zero = std::move(ev);
    } catch (const StepLimitExceeded& e) {
        cert.note = e.what();
    } catch (const ArithmeticOverflow& e) {
        cert.note = e.what();
    }
    return cert;
}

}  // namespace ncstar
