#include "ncstar/presentations.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace ncstar;

namespace {

using Rows = std::vector<std::vector<int>>;

CommutationPair pair(const Rows& e, const Rows& h) { return CommutationPair::validate(e, h); }

bool has_relation(const std::vector<Relation>& rels, const Poly& p) {
    return std::any_of(rels.begin(), rels.end(), [&](const Relation& r) { return r.poly == p || r.poly == -p; });
}

Poly w(std::initializer_list<Letter> ls) { return Poly(Word(ls)); }

CommutationPair random_pair(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution coin(0.5);
    BitMatrix e(n), h(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            int a = i == j ? 0 : coin(rng), b = coin(rng);
            e.set(i, j, a);
            e.set(j, i, a);
            h.set(i, j, b);
            h.set(j, i, b);
        }
    return CommutationPair::validate(e, h);
}

void check_regularize_properties(const CommutationPair& p) {
    CommutationPair r = regularize(p);
    EXPECT_EQ(regularize(r), r) << p.str();
    EXPECT_TRUE(is_regular(r).is_regular) << p.str();
    const int n = p.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            EXPECT_GE(r.eps(i, j), p.eps(i, j));
            EXPECT_GE(r.et(i, j), p.et(i, j));
            // off-diagonal changes only where a merge could apply
            if (i != j && (r.eps(i, j) != p.eps(i, j) || r.et(i, j) != p.et(i, j))) {
                EXPECT_TRUE(r.et(i, i) == 1 || r.et(j, j) == 1);
                EXPECT_EQ(r.eps(i, j), r.et(i, j));
            }
        }
    if (is_regular(p).is_regular) EXPECT_EQ(r, p);
}

}  // namespace

TEST(Validate, AcceptsExamples) {
    auto p = pair({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}});
    EXPECT_EQ(p.n(), 2);
    auto q = pair({{0}}, {{1}});
    EXPECT_EQ(q.n(), 1);
    EXPECT_EQ(q.et(1, 1), 1);
}

TEST(Validate, RejectsWithIndex) {
    try {
        pair({{0, 1}, {0, 0}}, {{0, 0}, {0, 0}});
        FAIL();
    } catch (const PairError& e) {
        EXPECT_EQ(e.kind, PairError::Kind::NotSymmetric);
        EXPECT_EQ(e.i, 1);
        EXPECT_EQ(e.j, 2);
        EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos);
    }
    try {
        pair({{1}}, {{0}});
        FAIL();
    } catch (const PairError& e) {
        EXPECT_EQ(e.kind, PairError::Kind::BadDiagonal);
        EXPECT_EQ(e.i, 1);
    }
    try {
        pair({{0, 2}, {2, 0}}, {{0, 0}, {0, 0}});
        FAIL();
    } catch (const PairError& e) {
        EXPECT_EQ(e.kind, PairError::Kind::BadEntry);
        EXPECT_EQ(e.j, 2);
    }
    EXPECT_THROW(pair({{0, 0}, {0, 0}}, {{0}}), PairError);
    EXPECT_THROW(pair({{0, 0}, {0}}, {{0, 0}, {0, 0}}), PairError);
    EXPECT_THROW(pair({}, {}), PairError);
}

TEST(Regularity, Examples) {
    EXPECT_TRUE(is_regular(pair({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}})).is_regular);
    Rows zero3(3, std::vector<int>(3, 0));
    EXPECT_TRUE(is_regular(pair(zero3, zero3)).is_regular);
    auto rep = is_regular(pair({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}));
    EXPECT_FALSE(rep.is_regular);
    EXPECT_TRUE(rep.violations_convention_A.empty());
    EXPECT_EQ(rep.violations_convention_B, (std::vector<int>{1, 2}));
}

TEST(Regularity, ConventionAViolation) {
    // x1 normal, eps_12 = 1 but eta_12 = 0
    auto rep = is_regular(pair({{0, 1}, {1, 0}}, {{1, 0}, {0, 0}}));
    ASSERT_EQ(rep.violations_convention_A.size(), 1u);
    EXPECT_EQ(rep.violations_convention_A[0], std::make_pair(1, 2));
    EXPECT_EQ(rep.violations_convention_B, (std::vector<int>{2}));
}

TEST(Regularize, Examples) {
    auto r = regularize(pair({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}));
    EXPECT_EQ(r.epsilon().rows(), (Rows{{0, 1}, {1, 0}}));
    EXPECT_EQ(r.eta().rows(), (Rows{{1, 1}, {1, 1}}));
    EXPECT_EQ(regularize(pair({{0}}, {{0}})).eta().rows(), (Rows{{1}}));
    auto remark = pair({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}});
    EXPECT_EQ(regularize(remark), remark);
}

TEST(Regularize, PropertiesExhaustiveUpTo3) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : enumerate_pairs(n, false)) check_regularize_properties(p);
}

TEST(Regularize, PropertiesRandomN4) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 500; ++k) check_regularize_properties(random_pair(rng, 4));
}

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate_pairs(1, false).size(), 2u);
    EXPECT_EQ(enumerate_pairs(2, false).size(), 16u);
    EXPECT_EQ(enumerate_pairs(3, false).size(), 512u);
    EXPECT_EQ(enumerate_epsilons(3).size(), 8u);
    EXPECT_EQ(enumerate_epsilons(1).size(), 1u);
}

TEST(Enumerate, RegularFilterAgreesWithPredicate) {
    auto all = enumerate_pairs(2, false);
    auto reg = enumerate_pairs(2, true);
    EXPECT_LT(reg.size(), all.size());
    std::vector<CommutationPair> expected;
    for (const auto& p : all)
        if (is_regular(p).is_regular) expected.push_back(p);
    EXPECT_EQ(reg, expected);
}

TEST(Enumerate, LexicographicAndUnique) {
    auto all = enumerate_pairs(3, false);
    auto flat = [](const CommutationPair& p) {
        std::vector<int> out;
        for (const auto& row : p.epsilon().rows()) out.insert(out.end(), row.begin(), row.end());
        for (const auto& row : p.eta().rows()) out.insert(out.end(), row.begin(), row.end());
        return out;
    };
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(flat(all[k - 1]), flat(all[k]));
}

TEST(Enumerate, Guards) {
    EXPECT_THROW(enumerate_pairs(5, false), TooLarge);
    EXPECT_THROW(enumerate_pairs(3, false, {4, 100}), TooLarge);
    EXPECT_NO_THROW(enumerate_pairs(4, true));
}

TEST(Sphere, RelationCounts) {
    auto free2 = sphere_presentation(pair({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}));
    EXPECT_EQ(free2.relations.size(), 2u);
    EXPECT_EQ(free2.sum_families.size(), 2u);
    auto classical = sphere_presentation(pair({{0, 1}, {1, 0}}, {{1, 1}, {1, 1}}));
    EXPECT_EQ(classical.relations.size(), 6u);
    auto remark = sphere_presentation(pair({{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}));
    ASSERT_EQ(remark.relations.size(), 3u);
    EXPECT_TRUE(has_relation(remark.relations, w({x(1), x(2)}) - w({x(2), x(1)})));
    Poly norm = w({x(1, true), x(1)}) + w({x(2, true), x(2)}) - Poly::constant(1);
    EXPECT_TRUE(has_relation(remark.relations, norm));
}

TEST(Unitary, FreeHasOnlySums) {
    auto p = unitary_qg_presentation(pair({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}));
    EXPECT_TRUE(p.relations.empty());
    EXPECT_EQ(p.sum_families.size(), 4u);
    EXPECT_EQ(p.all_relations().size(), 4u * 4u - 0u);
}

TEST(Unitary, ClassicalN2) {
    auto p = unitary_qg_presentation(pair({{0, 1}, {1, 0}}, {{1, 1}, {1, 1}}));
    // six commutators among the four entries, sixteen star-commutators
    EXPECT_EQ(p.relations.size(), 22u);
    for (const auto& r : p.relations) EXPECT_EQ(r.id.rfind("Reta.zl", 0), std::string::npos);
    EXPECT_TRUE(has_relation(p.relations, w({u(1, 1), u(2, 2)}) - w({u(2, 2), u(1, 1)})));
    EXPECT_TRUE(has_relation(p.relations, w({u(1, 2, true), u(1, 2)}) - w({u(1, 2), u(1, 2, true)})));
}

TEST(Unitary, RemarkPairFamilies) {
    auto p = unitary_qg_presentation(pair({{0, 0}, {0, 0}}, {{0, 1}, {1, 0}}));
    // (11) at (i,j,k,l) = (1,2,1,2)
    EXPECT_TRUE(has_relation(p.relations, w({u(1, 1, true), u(2, 2)}) - w({u(2, 2), u(1, 1, true)})));
    // fourfold X_12 at k = 1, l = 2
    Poly x12 = w({u(1, 1, true), u(2, 1)});
    EXPECT_TRUE(has_relation(p.relations, x12 - w({u(1, 2, true), u(2, 2)})));
    EXPECT_TRUE(has_relation(p.relations, x12 - w({u(2, 1), u(1, 1, true)})));
    // Y_12
    EXPECT_TRUE(has_relation(p.relations, w({u(1, 1, true), u(1, 2)}) - w({u(2, 1, true), u(2, 2)})));
    // zero families need eta_kl = 0 with k != l, or eta_ij = 0 with i != j
    EXPECT_FALSE(has_relation(p.relations, w({u(1, 1, true), u(2, 1)})));
    EXPECT_FALSE(has_relation(p.relations, w({u(1, 1, true), u(1, 2)})));
    for (const auto& r : p.relations) EXPECT_LE(r.poly.degree(), 2);
}

TEST(Unitary, ZeroFamiliesFire) {
    // eta = diag(1, 0): eta_11 = 1, eta_12 = 0 with k != l
    auto p = unitary_qg_presentation(pair({{0, 0}, {0, 0}}, {{1, 0}, {0, 0}}));
    EXPECT_TRUE(has_relation(p.relations, w({u(1, 1, true), u(1, 2)})));
    EXPECT_TRUE(has_relation(p.relations, w({u(1, 1), u(1, 2, true)})));
    EXPECT_TRUE(has_relation(p.relations, w({u(1, 1, true), u(2, 1)})));
}

TEST(Unitary, SumFamiliesExpand) {
    auto p = unitary_qg_presentation(pair({{0}}, {{0}}));
    auto all = p.all_relations();
    Poly uu = w({u(1, 1, true), u(1, 1)}) - Poly::constant(1);
    Poly uus = w({u(1, 1), u(1, 1, true)}) - Poly::constant(1);
    EXPECT_TRUE(has_relation(all, uu));
    EXPECT_TRUE(has_relation(all, uus));
    EXPECT_EQ(all.size(), 2u);  // the conjugate families coincide at n = 1
}

TEST(Orthogonal, Families) {
    auto free2 = orthogonal_qg_presentation(CommutationPair::from_epsilon({{0, 0}, {0, 0}}));
    EXPECT_TRUE(free2.relations.empty());
    EXPECT_EQ(free2.sum_families.size(), 2u);
    auto p = orthogonal_qg_presentation(CommutationPair::from_epsilon({{0, 1}, {1, 0}}));
    EXPECT_TRUE(has_relation(p.relations, w({v(1, 1), v(2, 2)}) - w({v(2, 2), v(1, 1)})));
    EXPECT_TRUE(has_relation(p.relations, w({v(1, 1), v(2, 1)})));
    EXPECT_TRUE(has_relation(p.relations, w({v(1, 1), v(1, 2)})));
    for (const auto& r : p.relations)
        for (const auto& [word, c] : r.poly.terms())
            for (const auto& l : word) EXPECT_FALSE(l.starred());
}

TEST(Tuple, Families) {
    auto p = tuple_space_presentation(CommutationPair::from_epsilon({{0, 1}, {1, 0}}));
    for (int k = 1; k <= 2; ++k) EXPECT_TRUE(has_relation(p.relations, w({t(1, k), t(2, k)})));
    auto free2 = tuple_space_presentation(CommutationPair::from_epsilon({{0, 0}, {0, 0}}));
    EXPECT_TRUE(free2.relations.empty());
    ASSERT_EQ(free2.sum_families.size(), 1u);
    auto sums = free2.sum_families[0].expand();
    EXPECT_EQ(sums.size(), 4u);
    EXPECT_TRUE(has_relation(sums, w({t(1, 1), t(1, 2)}) + w({t(2, 1), t(2, 2)})));
}

TEST(Presentations, DegreeAndRosterInvariant) {
    for (int n = 1; n <= 2; ++n)
        for (const auto& pr : enumerate_pairs(n, false)) {
            auto eps_only = CommutationPair::validate(pr.epsilon(), BitMatrix(n));
            for (const auto& pres : {sphere_presentation(pr), unitary_qg_presentation(pr),
                                     orthogonal_qg_presentation(eps_only), tuple_space_presentation(eps_only)}) {
                for (const auto& r : pres.star_closed_relations()) {
                    EXPECT_LE(r.poly.degree(), 2);
                    for (const auto& [word, c] : r.poly.terms())
                        for (const auto& l : word) EXPECT_TRUE(pres.roster.contains(l.generator())) << r.id;
                }
            }
        }
}

TEST(Presentations, StarClosure) {
    auto pres = unitary_qg_presentation(pair({{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}));
    auto rels = pres.star_closed_relations();
    for (const auto& r : rels) {
        Poly s = r.poly.star();
        bool found = std::any_of(rels.begin(), rels.end(), [&](const Relation& q) {
            auto lc = q.poly.terms().rbegin()->second, ls = s.terms().rbegin()->second;
            return q.poly.terms().rbegin()->first == s.terms().rbegin()->first && q.poly * ls == s * lc;
        });
        EXPECT_TRUE(found) << r.id;
    }
}

TEST(Restrict, Examples) {
    auto p = pair({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}, {{1, 0, 1}, {0, 0, 1}, {1, 1, 1}});
    auto pres = sphere_presentation(p);
    auto r = restrict_presentation(pres, {3, 1});
    const auto& sub = r.presentation.source_pair;
    EXPECT_EQ(sub.eps(1, 2), p.eps(3, 1));
    EXPECT_EQ(sub.et(1, 2), p.et(3, 1));
    EXPECT_EQ(sub.et(1, 1), p.et(3, 3));
    EXPECT_EQ(sub.et(2, 2), p.et(1, 1));
    EXPECT_FALSE(r.mapping[2].has_value());
    EXPECT_EQ(*r.mapping[3], 1);
    EXPECT_EQ(r.apply(w({x(3), x(2, true)}) + w({x(1, true)})), w({x(2, true)}));

    auto id = restrict_presentation(pres, {1, 2, 3});
    EXPECT_EQ(id.presentation.source_pair, p);
    EXPECT_EQ(id.apply(w({x(2), x(3, true)})), w({x(2), x(3, true)}));

    auto p4 = enumerate_pairs(4, false)[12345];
    auto r4 = restrict_presentation(sphere_presentation(p4), {4, 2, 1});
    EXPECT_EQ(r4.presentation.source_pair.n(), 3);
    EXPECT_EQ(r4.presentation.source_pair.et(1, 3), p4.et(4, 1));
}

TEST(Restrict, Errors) {
    auto pres = sphere_presentation(pair({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}));
    try {
        restrict_presentation(pres, {});
        FAIL();
    } catch (const RestrictError& e) {
        EXPECT_EQ(e.kind, RestrictError::Kind::EmptySubset);
    }
    try {
        restrict_presentation(pres, {3});
        FAIL();
    } catch (const RestrictError& e) {
        EXPECT_EQ(e.kind, RestrictError::Kind::IndexOutOfRange);
    }
    try {
        restrict_presentation(pres, {1, 1});
        FAIL();
    } catch (const RestrictError& e) {
        EXPECT_EQ(e.kind, RestrictError::Kind::DuplicateIndex);
    }
}
