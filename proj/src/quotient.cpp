#include "ncstar/quotient.hpp"

#include <optional>

namespace ncstar {

bool Echelon::insert(Poly p, Combination combo, std::string origin) {
    while (!p.is_zero()) {
        auto it = rows_.find(p.leading_word());
        if (it == rows_.end()) break;
        Scalar c = p.terms().rbegin()->second;
        p -= it->second.poly * c;
        if (track_) combo.add_scaled(it->second.combo, -c);
    }
    if (p.is_zero()) return false;
    Scalar lead = p.terms().rbegin()->second;
    Scalar inv = Scalar(1) / lead;
    p *= inv;
    if (track_) combo *= inv;
    entries_ += p.size();
    Word pivot = p.leading_word();
    rows_.emplace(std::move(pivot), Row{std::move(p), std::move(combo), std::move(origin), lead});
    return true;
}

Poly Echelon::reduce(Poly p, Combination* combo, std::vector<Word>* used) const {
    std::optional<Word> below;
    for (;;) {
        const auto& terms = p.terms();
        auto it = below ? terms.lower_bound(*below) : terms.end();
        const Row* hit = nullptr;
        Word word;
        Scalar c;
        while (it != terms.begin()) {
            --it;
            auto r = rows_.find(it->first);
            if (r != rows_.end()) {
                hit = &r->second;
                word = it->first;
                c = it->second;
                break;
            }
        }
        if (!hit) break;
        p -= hit->poly * c;
        if (combo && track_) combo->add_scaled(hit->combo, c);
        if (used) used->push_back(word);
        below = std::move(word);
    }
    return p;
}

const Echelon::Row* Echelon::row(const Word& pivot) const {
    auto it = rows_.find(pivot);
    return it == rows_.end() ? nullptr : &it->second;
}

QuotientBasis::QuotientBasis(const Presentation& pres, QuotientOptions options)
    : options_(options), roster_(pres.roster), relations_(pres.star_closed_relations()), echelon_(options.provenance) {
    if (options_.bound < 0) throw std::invalid_argument("bound must be nonnegative");
    // words_up_to would already be enormous past the cap; estimate first
    const double letters = static_cast<double>(roster_.letters().size());
    double estimate = 0, power = 1;
    for (int d = 0; d <= options_.bound; ++d, power *= letters) estimate += power;
    if (estimate > static_cast<double>(options_.cap))
        throw DimensionCap("DimensionCap: " + std::to_string(static_cast<long long>(estimate)) +
                           " monomials exceed the cap " + std::to_string(options_.cap));
    monomials_ = roster_.words_up_to(options_.bound);

    std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(options_.bound + 1));
    for (const auto& w : monomials_) by_degree[w.degree()].push_back(w);

    for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
        const Poly& r = relations_[ri].poly;
        const int slack = options_.bound - r.degree();
        for (int dl = 0; dl <= slack; ++dl)
            for (int dr = 0; dl + dr <= slack; ++dr)
                for (const auto& m1 : by_degree[static_cast<std::size_t>(dl)])
                    for (const auto& m2 : by_degree[static_cast<std::size_t>(dr)]) {
                        Combination c;
                        if (options_.provenance) c.add({static_cast<int>(ri), m1, m2}, 1);
                        echelon_.insert(Poly(m1) * r * Poly(m2), std::move(c), relations_[ri].id);
                        if (echelon_.entries() > options_.cap)
                            throw DimensionCap("DimensionCap: relation span exceeds " + std::to_string(options_.cap) +
                                               " stored entries");
                    }
    }
    cache_.reserve(monomials_.size());
    for (const auto& w : monomials_) {
        NormalForm nf;
        nf.poly = echelon_.reduce(Poly(w), options_.provenance ? &nf.combo : nullptr);
        cache_.emplace(w, std::move(nf));
    }
}

std::vector<Word> QuotientBasis::complement() const {
    std::vector<Word> out;
    for (const auto& w : monomials_)
        if (!echelon_.row(w)) out.push_back(w);
    return out;
}

const QuotientBasis::NormalForm* QuotientBasis::normal_form(const Word& w) const {
    auto it = cache_.find(w);
    return it == cache_.end() ? nullptr : &it->second;
}

Poly QuotientBasis::reduce(const Poly& p, Combination* combo) const {
    Poly out;
    for (const auto& [w, c] : p.terms()) {
        if (const NormalForm* nf = normal_form(w)) {
            out += nf->poly * c;
            if (combo && options_.provenance) combo->add_scaled(nf->combo, c);
        } else {
            out.add_term(w, c);
        }
    }
    return out;
}

namespace {

void check_family(const TensorPoly& t, const QuotientBasis& left, const QuotientBasis& right) {
    if (t.left_family() != left.roster().family || t.right_family() != right.roster().family)
        throw RosterMismatch(std::string("tensor legs (") + family_name(t.left_family()) + ", " +
                             family_name(t.right_family()) + ") do not match the bases (" +
                             family_name(left.roster().family) + ", " + family_name(right.roster().family) + ")");
}

struct TensorKey {
    int leg;
    Instance inst;
    Word other;
    friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
};

}  // namespace

Certificate is_zero_tensor(const TensorPoly& t, const QuotientBasis& left, const QuotientBasis& right,
                           bool evidence) {
    check_family(t, left, right);
    Certificate cert;
    TensorPoly reduced(t.left_family(), t.right_family());
    std::map<TensorKey, Scalar> combo;
    const bool track = evidence && left.provenance() && right.provenance();
    auto bump = [&](TensorKey key, const Scalar& c) {
        auto [it, inserted] = combo.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) combo.erase(it);
        }
    };
    for (const auto& [key, c] : t.terms()) {
        const auto* na = left.normal_form(key.first);
        const auto* nb = right.normal_form(key.second);
        if (!na || !nb) {
            cert.note = "tensor word above the quotient bound";
            return cert;
        }
        for (const auto& [wa, ca] : na->poly.terms())
            for (const auto& [wb, cb] : nb->poly.terms()) reduced.add_term(wa, wb, c * ca * cb);
        if (track) {
            for (const auto& [inst, k] : na->combo.terms()) bump({0, inst, key.second}, c * k);
            for (const auto& [wa, ca] : na->poly.terms())
                for (const auto& [inst, k] : nb->combo.terms()) bump({1, inst, wa}, c * ca * k);
        }
    }
    if (!reduced.is_zero()) {
        cert.note = std::to_string(reduced.size()) + " tensor coordinates survive the leg-wise quotient";
        return cert;
    }
    cert.status = Status::ProvedZero;
    if (track) {
        ZeroEvidence ev;
        ev.tensor_combination.reserve(combo.size());
        for (const auto& [key, c] : combo) {
            const auto& rels = key.leg == 0 ? left.relations() : right.relations();
            ev.tensor_combination.push_back({key.leg, rels.at(static_cast<std::size_t>(key.inst.relation)).id,
                                             key.inst.left, key.inst.right, key.other, c});
        }
        cert.zero = std::move(ev);
    }
    return cert;
}

Certificate ideal_membership(const Poly& p, const QuotientBasis& basis) {
    Certificate cert;
    if (p.degree() > basis.bound()) {
        cert.note = "degree exceeds the product bound";
        return cert;
    }
    Combination combo;
    Poly rest = basis.reduce(p, &combo);
    if (!rest.is_zero()) {
        cert.note = "not in the bounded span; residue " + rest.str();
        return cert;
    }
    cert.status = Status::ProvedZero;
    if (basis.provenance()) {
        ZeroEvidence ev;
        ev.combination = entries(combo, basis.relations());
        cert.zero = std::move(ev);
    }
    return cert;
}

Certificate ideal_membership_bounded(const Poly& p, const Presentation& pres, int product_bound, std::size_t cap) {
    if (product_bound < 2 || product_bound > 4) throw std::invalid_argument("product_bound must lie in 2..4");
    if (p.degree() > product_bound) throw std::invalid_argument("degree(p) exceeds product_bound");
    QuotientBasis basis(pres, {product_bound, cap, true});
    return ideal_membership(p, basis);
}

}  // namespace ncstar
