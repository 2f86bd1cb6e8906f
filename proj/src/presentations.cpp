#include "ncstar/presentations.hpp"

#include <algorithm>
#include <set>

namespace ncstar {

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    BitMatrix m(static_cast<int>(rows.size()));
    for (int i = 1; i <= m.n_; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != m.n_)
            throw PairError(PairError::Kind::SizeMismatch, i, 0,
                            "row " + std::to_string(i) + " has " + std::to_string(rows[i - 1].size()) +
                                " entries, expected " + std::to_string(m.n_));
        for (int j = 1; j <= m.n_; ++j) {
            int value = rows[i - 1][j - 1];
            if (value != 0 && value != 1)
                throw PairError(PairError::Kind::BadEntry, i, j,
                                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                    std::to_string(value) + " is not 0 or 1");
            m.set(i, j, value);
        }
    }
    return m;
}

BitMatrix BitMatrix::restrict(const std::vector<int>& keep) const {
    BitMatrix out(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            out.set(static_cast<int>(a + 1), static_cast<int>(b + 1), (*this)(keep[a], keep[b]));
    return out;
}

std::vector<std::vector<int>> BitMatrix::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) out[i - 1][j - 1] = (*this)(i, j);
    return out;
}

std::string BitMatrix::str() const {
    std::string out = "[";
    for (int i = 1; i <= n_; ++i) {
        out += i > 1 ? ",[" : "[";
        for (int j = 1; j <= n_; ++j) out += (j > 1 ? "," : "") + std::to_string((*this)(i, j));
        out += "]";
    }
    return out + "]";
}

PairError::PairError(Kind k, int i_, int j_, const std::string& what)
    : std::invalid_argument(std::string(to_string(k)) + ": " + what), kind(k), i(i_), j(j_) {}

const char* to_string(PairError::Kind k) {
    switch (k) {
        case PairError::Kind::SizeMismatch: return "SizeMismatch";
        case PairError::Kind::NotSymmetric: return "NotSymmetric";
        case PairError::Kind::BadDiagonal: return "BadDiagonal";
        case PairError::Kind::BadEntry: return "BadEntry";
    }
    return "?";
}

namespace {

void check_symmetric(const BitMatrix& m, const char* name) {
    for (int i = 1; i <= m.size(); ++i)
        for (int j = i + 1; j <= m.size(); ++j)
            if (m(i, j) != m(j, i))
                throw PairError(PairError::Kind::NotSymmetric, i, j,
                                std::string(name) + " is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")/(" + std::to_string(j) + "," + std::to_string(i) + ")");
}

}  // namespace

CommutationPair CommutationPair::validate(const BitMatrix& epsilon, const BitMatrix& eta) {
    if (epsilon.size() < 1) throw PairError(PairError::Kind::SizeMismatch, 0, 0, "n must be at least 1");
    if (epsilon.size() != eta.size())
        throw PairError(PairError::Kind::SizeMismatch, epsilon.size(), eta.size(),
                        "epsilon is " + std::to_string(epsilon.size()) + "x" + std::to_string(epsilon.size()) +
                            " but eta is " + std::to_string(eta.size()) + "x" + std::to_string(eta.size()));
    for (int i = 1; i <= epsilon.size(); ++i)
        if (epsilon(i, i) != 0)
            throw PairError(PairError::Kind::BadDiagonal, i, i,
                            "epsilon(" + std::to_string(i) + "," + std::to_string(i) + ") must be 0");
    check_symmetric(epsilon, "epsilon");
    check_symmetric(eta, "eta");
    return {epsilon, eta};
}

CommutationPair CommutationPair::validate(const std::vector<std::vector<int>>& epsilon,
                                          const std::vector<std::vector<int>>& eta) {
    return validate(BitMatrix::from_rows(epsilon), BitMatrix::from_rows(eta));
}

CommutationPair CommutationPair::from_epsilon(const std::vector<std::vector<int>>& epsilon) {
    BitMatrix e = BitMatrix::from_rows(epsilon);
    return validate(e, BitMatrix(e.size()));
}

std::string CommutationPair::str() const { return "eps=" + epsilon_.str() + " eta=" + eta_.str(); }

RegularityReport is_regular(const CommutationPair& p) {
    RegularityReport r;
    const int n = p.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((p.et(i, i) == 1 || p.et(j, j) == 1) && p.eps(i, j) != p.et(i, j))
                r.violations_convention_A.emplace_back(i, j);
    for (int i = 1; i <= n; ++i) {
        if (p.et(i, i) == 1) continue;
        bool witness = false;
        for (int j = 1; j <= n && !witness; ++j)
            witness = j != i && p.et(j, j) == 0 && (p.eps(i, j) == 0 || p.et(i, j) == 0);
        if (!witness) r.violations_convention_B.push_back(i);
    }
    r.is_regular = r.violations_convention_A.empty() && r.violations_convention_B.empty();
    return r;
}

CommutationPair regularize(const CommutationPair& pair) {
    BitMatrix eps = pair.epsilon();
    BitMatrix eta = pair.eta();
    const int n = pair.n();
    for (bool changed = true; changed;) {
        changed = false;
        // forced normality: every non-normal partner commutes and star-commutes with x_i
        for (int i = 1; i <= n; ++i) {
            if (eta(i, i) == 1) continue;
            bool forced = true;
            for (int j = 1; j <= n && forced; ++j)
                if (j != i && eta(j, j) == 0) forced = eps(i, j) == 1 && eta(i, j) == 1;
            if (forced) {
                eta.set(i, i, 1);
                changed = true;
            }
        }
        // for normal generators the two commutation notions coincide
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j || (eta(i, i) == 0 && eta(j, j) == 0)) continue;
                int merged = std::max(eps(i, j), eta(i, j));
                if (eps(i, j) != merged || eta(i, j) != merged) {
                    eps.set(i, j, merged);
                    eta.set(i, j, merged);
                    changed = true;
                }
            }
    }
    return CommutationPair::validate(eps, eta);
}

namespace {

void check_enumeration(int n, int free_bits, const EnumerationLimits& limits) {
    if (n < 1) throw TooLarge("n must be at least 1");
    if (n > limits.max_n)
        throw TooLarge("n = " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limits.max_n));
    if (free_bits >= 63 || (std::size_t{1} << free_bits) > limits.max_count)
        throw TooLarge("2^" + std::to_string(free_bits) + " pairs exceed the cap " + std::to_string(limits.max_count));
}

std::vector<BitMatrix> symmetric_matrices(int n, bool zero_diagonal) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i)
        for (int j = zero_diagonal ? i + 1 : i; j <= n; ++j) slots.emplace_back(i, j);
    std::vector<BitMatrix> out;
    const std::size_t count = std::size_t{1} << slots.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        BitMatrix m(n);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            int bit = static_cast<int>((mask >> s) & 1u);
            m.set(slots[s].first, slots[s].second, bit);
            m.set(slots[s].second, slots[s].first, bit);
        }
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CommutationPair> enumerate_pairs(int n, bool regular_only, EnumerationLimits limits) {
    check_enumeration(n, n * n, limits);
    auto epsilons = symmetric_matrices(n, true);
    auto etas = symmetric_matrices(n, false);
    std::vector<CommutationPair> out;
    for (const auto& e : epsilons)
        for (const auto& h : etas) {
            CommutationPair p = CommutationPair::validate(e, h);
            if (!regular_only || is_regular(p).is_regular) out.push_back(std::move(p));
        }
    return out;
}

std::vector<CommutationPair> enumerate_epsilons(int n, EnumerationLimits limits) {
    check_enumeration(n, n * (n - 1) / 2, limits);
    std::vector<CommutationPair> out;
    for (const auto& e : symmetric_matrices(n, true)) out.push_back(CommutationPair::validate(e, BitMatrix(n)));
    return out;
}

// ---------------------------------------------------------------------------

const char* to_string(PresentationKind k) {
    switch (k) {
        case PresentationKind::ComplexSphere: return "complex-sphere";
        case PresentationKind::UnitaryQG: return "unitary-qg";
        case PresentationKind::OrthogonalQG: return "orthogonal-qg";
        case PresentationKind::TupleSpace: return "tuple-space";
    }
    return "?";
}

namespace {

std::string idx(std::initializer_list<int> is) {
    std::string out = "(";
    bool first = true;
    for (int i : is) {
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return out + ")";
}

/// Collects relations, dropping zeros and scalar multiples of earlier ones.
class RelationSet {
public:
    void add(std::string id, const Poly& p, std::string description) {
        if (p.is_zero()) return;
        Poly normalized = p * (Scalar(1) / p.terms().rbegin()->second);
        if (!seen_.insert(normalized.str()).second) return;
        out.push_back({std::move(id), p, std::move(description)});
    }
    std::vector<Relation> out;

private:
    std::set<std::string> seen_;
};

Poly w2(Letter a, Letter b) { return Poly(Word{a, b}); }

std::string eq(const Poly& lhs, const Poly& rhs) { return lhs.str() + " = " + rhs.str(); }

Poly delta(int i, int j) { return i == j ? Poly::constant(1) : Poly(); }

}  // namespace

std::vector<Relation> SumFamily::expand() const {
    std::vector<Relation> out;
    auto make = [&](const std::string& rid, const Poly& sum, const Poly& rhs) {
        out.push_back({rid, sum - rhs, eq(sum, rhs)});
    };
    switch (shape) {
        case SumShape::SphereStarFirst:
        case SumShape::SphereStarLast: {
            Poly sum;
            for (int i = 1; i <= n; ++i)
                sum += shape == SumShape::SphereStarFirst ? w2(x(i, true), x(i)) : w2(x(i), x(i, true));
            make(id, sum, Poly::constant(1));
            return out;
        }
        default: break;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Poly sum;
            for (int k = 1; k <= n; ++k) {
                switch (shape) {
                    case SumShape::UnitaryStarU: sum += w2(u(k, i, true), u(k, j)); break;
                    case SumShape::UnitaryUStar: sum += w2(u(i, k), u(j, k, true)); break;
                    case SumShape::ConjStarU: sum += w2(u(i, k, true), u(j, k)); break;
                    case SumShape::ConjUStar: sum += w2(u(k, i), u(k, j, true)); break;
                    case SumShape::OrthoRows: sum += w2(v(i, k), v(j, k)); break;
                    case SumShape::OrthoCols: sum += w2(v(k, i), v(k, j)); break;
                    case SumShape::TupleCols: sum += w2(t(k, i), t(k, j)); break;
                    default: break;
                }
            }
            make(id + idx({i, j}), sum, delta(i, j));
        }
    return out;
}

std::vector<Relation> Presentation::all_relations() const {
    RelationSet set;
    for (const auto& r : relations) set.add(r.id, r.poly, r.description);
    for (const auto& fam : sum_families)
        for (auto& r : fam.expand()) set.add(std::move(r.id), r.poly, std::move(r.description));
    return std::move(set.out);
}

std::vector<Relation> Presentation::star_closed_relations() const {
    RelationSet set;
    auto base = all_relations();
    for (const auto& r : base) set.add(r.id, r.poly, r.description);
    for (const auto& r : base) set.add(r.id + "*", r.poly.star(), "(" + r.description + ")*");
    return std::move(set.out);
}

Presentation sphere_presentation(const CommutationPair& p) {
    const int n = p.n();
    Presentation pres{PresentationKind::ComplexSphere, Roster::sphere(n), {}, {}, p};
    pres.sum_families = {{"norm*", SumShape::SphereStarFirst, n}, {"norm", SumShape::SphereStarLast, n}};
    RelationSet set;
    for (const auto& fam : pres.sum_families)
        for (auto& r : fam.expand()) set.add(r.id, r.poly, r.description);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.eps(i, j) == 1) {
                Poly l = w2(x(i), x(j)), r = w2(x(j), x(i));
                set.add("eps" + idx({i, j}), l - r, eq(l, r));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (p.et(i, j) == 1) {
                Poly l = w2(x(i, true), x(j)), r = w2(x(j), x(i, true));
                set.add("eta" + idx({i, j}), l - r, eq(l, r));
            }
    pres.relations = std::move(set.out);
    return pres;
}

Presentation unitary_qg_presentation(const CommutationPair& p) {
    const int n = p.n();
    Presentation pres{PresentationKind::UnitaryQG, Roster::square(Family::UnitaryU, n), {}, {}, p};
    pres.sum_families = {{"u*u", SumShape::UnitaryStarU, n},
                         {"uu*", SumShape::UnitaryUStar, n},
                         {"conj(u)conj(u)*", SumShape::ConjStarU, n},
                         {"conj(u)*conj(u)", SumShape::ConjUStar, n}};
    RelationSet set;
    auto each = [n](auto&& fn) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) fn(i, j, k, l);
    };
    auto pair_rel = [&](const std::string& id, const Poly& l, const Poly& r) { set.add(id, l - r, eq(l, r)); };
    auto zero_rel = [&](const std::string& id, const Poly& l) { set.add(id, l, l.str() + " = 0"); };

    each([&](int i, int j, int k, int l) {
        const auto ix = idx({i, j, k, l});
        Poly lhs = w2(u(i, k), u(j, l));
        if (p.eps(i, j) && p.eps(k, l)) pair_rel("Reps.cc" + ix, lhs, w2(u(j, l), u(i, k)));
        if (p.eps(i, j) && !p.eps(k, l)) pair_rel("Reps.cn" + ix, lhs, w2(u(j, k), u(i, l)));
        if (!p.eps(i, j) && p.eps(k, l)) pair_rel("Reps.nc" + ix, lhs, w2(u(i, l), u(j, k)));
    });
    each([&](int i, int j, int k, int l) {
        if (p.et(i, j) && p.et(k, l))
            pair_rel("Reta.comm" + idx({i, j, k, l}), w2(u(i, k, true), u(j, l)), w2(u(j, l), u(i, k, true)));
    });
    each([&](int i, int j, int k, int l) {
        const auto ix = idx({i, j, k, l});
        bool zl = p.et(i, j) && !p.et(k, l) && k != l;
        bool zr = !p.et(i, j) && p.et(k, l) && i != j;
        if (zl || zr) {
            const std::string tag = zl ? "Reta.zl" : "Reta.zr";
            zero_rel(tag + ix + "a", w2(u(i, k, true), u(j, l)));
            zero_rel(tag + ix + "b", w2(u(i, k), u(j, l, true)));
        }
    });
    each([&](int i, int j, int k, int l) {
        if (!(p.et(i, j) && !p.et(k, k) && !p.et(l, l))) return;
        const auto ix = idx({i, j, k, l});
        Poly col[4] = {w2(u(i, k, true), u(j, k)), w2(u(i, l, true), u(j, l)), w2(u(j, k), u(i, k, true)),
                       w2(u(j, l), u(i, l, true))};
        for (int m = 1; m < 4; ++m) pair_rel("Reta.X" + ix + "#" + std::to_string(m + 1), col[0], col[m]);
    });
    each([&](int i, int j, int k, int l) {
        if (!(p.et(i, j) && !p.et(k, k) && !p.et(l, l))) return;
        const auto ix = idx({i, j, k, l});
        Poly row[4] = {w2(u(k, i, true), u(k, j)), w2(u(l, i, true), u(l, j)), w2(u(k, j), u(k, i, true)),
                       w2(u(l, j), u(l, i, true))};
        for (int m = 1; m < 4; ++m) pair_rel("Reta.Y" + ix + "#" + std::to_string(m + 1), row[0], row[m]);
    });
    pres.relations = std::move(set.out);
    return pres;
}

namespace {

template <class Make>
std::vector<Relation> ring_relations(const CommutationPair& p, Make&& letter) {
    const int n = p.n();
    RelationSet set;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    const auto ix = idx({i, j, k, l});
                    Poly lhs = w2(letter(i, k), letter(j, l));
                    if (p.eps(i, j) && p.eps(k, l)) {
                        Poly rhs = w2(letter(j, l), letter(i, k));
                        set.add("Ro.comm" + ix, lhs - rhs, eq(lhs, rhs));
                    } else if (p.eps(i, j) != p.eps(k, l)) {
                        set.add((p.eps(i, j) ? "Ro.zl" : "Ro.zr") + ix, lhs, lhs.str() + " = 0");
                    }
                }
    return std::move(set.out);
}

}  // namespace

Presentation orthogonal_qg_presentation(const CommutationPair& eps_pair) {
    const int n = eps_pair.n();
    CommutationPair src = CommutationPair::validate(eps_pair.epsilon(), BitMatrix(n));
    Presentation pres{PresentationKind::OrthogonalQG, Roster::square(Family::OrthoU, n), {}, {}, src};
    pres.relations = ring_relations(src, [](int i, int j) { return v(i, j); });
    pres.sum_families = {{"rows", SumShape::OrthoRows, n}, {"cols", SumShape::OrthoCols, n}};
    return pres;
}

Presentation tuple_space_presentation(const CommutationPair& eps_pair) {
    const int n = eps_pair.n();
    CommutationPair src = CommutationPair::validate(eps_pair.epsilon(), BitMatrix(n));
    Presentation pres{PresentationKind::TupleSpace, Roster::square(Family::TupleX, n), {}, {}, src};
    pres.relations = ring_relations(src, [](int i, int j) { return t(i, j); });
    pres.sum_families = {{"cols", SumShape::TupleCols, n}};
    return pres;
}

Poly Restriction::apply(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p.terms()) {
        Word image;
        bool vanishes = false;
        for (const Letter& l : w) {
            if (l.family() != Family::SphereX) throw RosterMismatch("restriction applies to sphere polynomials");
            const auto& target = mapping.at(static_cast<std::size_t>(l.row()));
            if (!target) {
                vanishes = true;
                break;
            }
            image = image * Word(x(*target, l.starred()));
        }
        if (!vanishes) out.add_term(image, c);
    }
    return out;
}

Restriction restrict_presentation(const Presentation& pres, const std::vector<int>& keep) {
    if (pres.kind != PresentationKind::ComplexSphere)
        throw std::invalid_argument("restriction is defined for complex-sphere presentations");
    if (keep.empty()) throw RestrictError(RestrictError::Kind::EmptySubset, "EmptySubset: keep must be nonempty");
    const int n = pres.source_pair.n();
    std::vector<std::optional<int>> mapping(static_cast<std::size_t>(n + 1));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        int k = keep[a];
        if (k < 1 || k > n)
            throw RestrictError(RestrictError::Kind::IndexOutOfRange,
                                "IndexOutOfRange: index " + std::to_string(k) + " not in 1.." + std::to_string(n));
        if (mapping[static_cast<std::size_t>(k)])
            throw RestrictError(RestrictError::Kind::DuplicateIndex,
                                "DuplicateIndex: index " + std::to_string(k) + " repeated");
        mapping[static_cast<std::size_t>(k)] = static_cast<int>(a + 1);
    }
    const auto& p = pres.source_pair;
    auto sub = CommutationPair::validate(p.epsilon().restrict(keep), p.eta().restrict(keep));
    return {sphere_presentation(sub), std::move(mapping)};
}

}  // namespace ncstar
