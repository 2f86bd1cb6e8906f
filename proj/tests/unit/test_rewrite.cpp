#include "ncstar/rewrite.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncstar;

namespace {

using Rows = std::vector<std::vector<int>>;
CommutationPair pair(const Rows& e, const Rows& h) { return CommutationPair::validate(e, h); }
Poly w(std::initializer_list<Letter> ls) { return Poly(Word(ls)); }

std::vector<Presentation> presentations_up_to(int n_max) {
    std::vector<Presentation> out;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& p : enumerate_pairs(n, false)) {
            out.push_back(sphere_presentation(p));
            out.push_back(unitary_qg_presentation(p));
        }
        for (const auto& e : enumerate_epsilons(n)) {
            out.push_back(orthogonal_qg_presentation(e));
            out.push_back(tuple_space_presentation(e));
        }
    }
    return out;
}

Poly random_poly(std::mt19937_64& rng, const std::vector<Word>& words, const std::vector<Relation>& rels) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> pick_w(0, words.size() - 1);
    Poly p;
    if (!rels.empty()) {
        std::uniform_int_distribution<std::size_t> pick_r(0, rels.size() - 1);
        for (int k = 0; k < 3; ++k) p += rels[pick_r(rng)].poly * Scalar(Rational(coef(rng)), Rational(coef(rng)));
    }
    if (rng() % 2 == 0) p.add_term(words[pick_w(rng)], Scalar(1 + rng() % 3));
    return p;
}

}  // namespace

TEST(Rewrite, FreePairHasNoRules) {
    RewriteSystem rs(unitary_qg_presentation(pair({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}})));
    EXPECT_TRUE(rs.rules().empty());
    EXPECT_EQ(rs.syzygies().size(), 4u);
    EXPECT_EQ(rs.canonical_column(), 1);
}

TEST(Rewrite, RemarkPairCanonicalForms) {
    RewriteSystem rs(unitary_qg_presentation(pair({{0, 0}, {0, 0}}, {{0, 1}, {1, 0}})));
    EXPECT_EQ(rs.canonical_column(), 1);
    Poly x12 = w({u(1, 1, true), u(2, 1)});
    EXPECT_EQ(rs.rule_for(Word{u(1, 1, true), u(2, 1)}), nullptr);
    EXPECT_EQ(rs.saturate(x12).result, x12);
    EXPECT_EQ(rs.saturate(w({u(2, 1), u(1, 1, true)})).result, x12);
    EXPECT_EQ(rs.saturate(w({u(1, 2, true), u(2, 2)})).result, x12);
    const Rule* r = rs.rule_for(Word{u(2, 1), u(1, 1, true)});
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->kind, Rule::Kind::Canonical);
}

TEST(Rewrite, NoCanonicalColumnWhenAllNormal) {
    RewriteSystem rs(unitary_qg_presentation(pair({{0, 1}, {1, 0}}, {{1, 1}, {1, 1}})));
    EXPECT_FALSE(rs.canonical_column().has_value());
}

TEST(Rewrite, OrthogonalZeroRules) {
    RewriteSystem rs(orthogonal_qg_presentation(CommutationPair::from_epsilon({{0, 1}, {1, 0}})));
    const Rule* r = rs.rule_for(Word{v(1, 1), v(2, 1)});
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->kind, Rule::Kind::Zero);
    EXPECT_TRUE(r->replacement.is_zero());
}

TEST(Rewrite, SyzygyPass) {
    RewriteSystem rs(unitary_qg_presentation(pair({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}})));
    Poly p = w({u(1, 1, true), u(1, 1)}) + w({u(1, 2, true), u(1, 2)}) - Poly::constant(1);
    auto res = rs.rewrite(p);
    EXPECT_TRUE(res.result.is_zero());
    EXPECT_EQ(res.combination.expand(rs.relations()), p);
}

TEST(Rewrite, NoninjectivityCoefficientTwo) {
    RewriteSystem rs(unitary_qg_presentation(pair({{0, 0}, {0, 0}}, {{0, 1}, {1, 0}})));
    Certificate c = rs.certify(w({u(1, 1, true), u(2, 1)}));
    ASSERT_EQ(c.status, Status::ProvedZero);
    ASSERT_FALSE(c.zero->notes.empty());
    EXPECT_NE(c.zero->notes[0].find("(2/1+0/1 i)·u11* u21"), std::string::npos) << c.zero->notes[0];
    EXPECT_TRUE(replay(w({u(1, 1, true), u(2, 1)}), c.zero->combination, rs.relations()));
}

TEST(Rewrite, RulesAreSoundAndFormsAgree) {
    std::mt19937_64 rng(2);
    for (const auto& pres : presentations_up_to(2)) {
        RewriteSystem rs(pres);
        QuotientBasis q(pres);
        for (const auto& rule : rs.rules())
            EXPECT_TRUE(q.reduce(Poly(rule.pattern) - rule.replacement).is_zero()) << rule.id;
        auto words = pres.roster.words_up_to(2);
        auto rels = pres.star_closed_relations();
        for (int k = 0; k < 40; ++k) {
            Poly p = random_poly(rng, words, rels);
            auto res = rs.rewrite(p);
            EXPECT_EQ(res.result.is_zero(), q.reduce(p).is_zero()) << p.str();
            EXPECT_EQ(p - res.result, res.combination.expand(rels));
        }
    }
}

TEST(Rewrite, TerminatesOnDegreeFourWords) {
    std::mt19937_64 rng(3);
    for (const auto& pres : presentations_up_to(3)) {
        RewriteSystem rs(pres);
        auto letters = pres.roster.letters();
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
        for (int k = 0; k < 10; ++k) {
            Word word{letters[pick(rng)], letters[pick(rng)], letters[pick(rng)], letters[pick(rng)]};
            EXPECT_NO_THROW(rs.rewrite(Poly(word), 100000)) << word.str();
        }
    }
}

TEST(Rewrite, ReplayReproducesSaturation) {
    RewriteSystem rs(unitary_qg_presentation(pair({{0, 1}, {1, 0}}, {{0, 1}, {1, 1}})));
    Poly p = w({u(2, 2), u(1, 1), u(2, 1, true)}) + w({u(2, 1), u(1, 1, true)});
    auto res = rs.saturate(p);
    EXPECT_FALSE(res.trace.empty());
    EXPECT_EQ(rs.replay(p, res.trace), res.result);
    auto bad = res.trace;
    bad[0].rule = "nope";
    EXPECT_THROW(rs.replay(p, bad), std::invalid_argument);
}

TEST(Rewrite, StepLimit) {
    RewriteSystem rs(sphere_presentation(pair({{0, 1}, {1, 0}}, {{1, 1}, {1, 1}})));
    Poly p = w({x(2, true), x(2), x(1, true), x(1)});
    try {
        rs.rewrite(p, 1);
        FAIL();
    } catch (const StepLimitExceeded& e) {
        EXPECT_EQ(e.partial.steps, 1u);
    }
    EXPECT_EQ(rs.certify(p, 1).status, Status::Inconclusive);
}
