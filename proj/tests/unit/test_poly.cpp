#include "ncstar/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncstar;

TEST(Word, LengthLexOrder) {
    Word a{x(1), x(2)}, b{x(2), x(1)}, c{x(2)};
    EXPECT_LT(a, b);
    EXPECT_LT(c, a);
    EXPECT_LT(Word{}, c);
    EXPECT_LT(Word{x(1)}, Word{x(1, true)});
    EXPECT_LT(Word{x(3, true)}, Word{u(1, 1)});
}

TEST(Word, StarReversesAndToggles) {
    Word w{x(1), x(2, true)};
    EXPECT_EQ(w.star(), (Word{x(2), x(1, true)}));
    EXPECT_EQ(w.star().star(), w);
}

TEST(Letter, SelfAdjointFamiliesIgnoreStar) {
    Letter l = v(1, 2);
    EXPECT_FALSE(l.star().starred());
    EXPECT_EQ(l.star(), l);
    EXPECT_EQ(Word{t(1, 1)}.star(), Word{t(1, 1)});
}

TEST(Roster, WordCounts) {
    Roster s = Roster::sphere(2);
    EXPECT_EQ(s.letters().size(), 4u);
    EXPECT_EQ(s.words_up_to(2).size(), 1u + 4u + 16u);
    Roster o = Roster::square(Family::OrthoU, 2);
    EXPECT_EQ(o.words_up_to(2).size(), 1u + 4u + 16u);
    auto ws = s.words_up_to(2);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
}

TEST(Poly, StarExamples) {
    Poly p = Poly(Word{x(1), x(2, true)});
    EXPECT_EQ(star(p), Poly(Word{x(2), x(1, true)}));
    Poly q = Poly(Word{x(1)}, Scalar::i());
    EXPECT_EQ(star(q), Poly(Word{x(1, true)}, -Scalar::i()));
}

TEST(Poly, CommutatorFromProducts) {
    Poly c = mul(x(1), x(2)) + mul(Poly(x(2)) * Scalar(-1), x(1));
    Poly expected = Poly(Word{x(1), x(2)}) - Poly(Word{x(2), x(1)});
    EXPECT_EQ(c, expected);
    EXPECT_EQ(c.degree(), 2);
    EXPECT_EQ((c - c).degree(), -1);
}

TEST(Poly, RosterMismatch) {
    EXPECT_THROW(mul(x(1), u(1, 1)), RosterMismatch);
    EXPECT_THROW(add(x(1), v(1, 1)), RosterMismatch);
    EXPECT_NO_THROW(mul(Poly::constant(2), u(1, 1)));
}

namespace {

Poly random_poly(std::mt19937_64& rng, const Roster& roster, int max_deg) {
    auto words = roster.words_up_to(max_deg);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    Poly p;
    for (int k = 0; k < 4; ++k) p.add_term(words[pick(rng)], Scalar(Rational(coef(rng)), Rational(coef(rng))));
    return p;
}

}  // namespace

TEST(Poly, StarIsAntimultiplicativeInvolution) {
    std::mt19937_64 rng(11);
    Roster r = Roster::sphere(2);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = random_poly(rng, r, 2), q = random_poly(rng, r, 2);
        EXPECT_EQ(p.star().star(), p);
        EXPECT_EQ((p * q).star(), q.star() * p.star());
        EXPECT_EQ((p + q).star(), p.star() + q.star());
    }
}

TEST(Tensor, ComultiplyGenerator) {
    TensorPoly d = comultiply_generator(1, 1, 2);
    TensorPoly expected(Family::UnitaryU, Family::UnitaryU);
    expected.add_term(Word{u(1, 1)}, Word{u(1, 1)}, 1);
    expected.add_term(Word{u(1, 2)}, Word{u(2, 1)}, 1);
    EXPECT_EQ(d, expected);
    EXPECT_EQ(comultiply_generator(1, 1, 1).size(), 1u);
}

TEST(Tensor, ComultiplicationOfStarProduct) {
    // Delta(u_ik* u_jl) = sum_{r,p} u_ir* u_jp (x) u_rk* u_pl
    const int n = 3;
    TensorHom delta = comultiplication(n);
    TensorPoly img = delta.apply(Poly(Word{u(1, 2, true), u(3, 1)}));
    EXPECT_EQ(img.size(), static_cast<std::size_t>(n * n));
    for (int r = 1; r <= n; ++r)
        for (int p = 1; p <= n; ++p) {
            auto it = img.terms().find({Word{u(1, r, true), u(3, p)}, Word{u(r, 2, true), u(p, 1)}});
            ASSERT_NE(it, img.terms().end());
            EXPECT_EQ(it->second, Scalar(1));
        }
}

TEST(Tensor, HomRespectsStarAndProducts) {
    TensorHom delta = comultiplication(2);
    Poly a = Poly(Word{u(1, 2)}), b = Poly(Word{u(2, 1, true)});
    EXPECT_EQ(delta.apply(a * b), delta.apply(a) * delta.apply(b));
    EXPECT_EQ(delta.apply(a.star()), delta.apply(a).star());
    EXPECT_EQ(delta.apply(Poly::constant(1)), TensorPoly::unit(Family::UnitaryU, Family::UnitaryU));
}

TEST(Tensor, Coactions) {
    TensorHom alpha = sphere_coaction(2, true);
    TensorPoly img = alpha.apply(Poly(x(1)));
    EXPECT_EQ(img.size(), 2u);
    EXPECT_EQ(img.left_family(), Family::UnitaryU);
    EXPECT_EQ(img.right_family(), Family::SphereX);
    EXPECT_TRUE(img.terms().count({Word{u(1, 2)}, Word{x(2)}}));
    TensorHom beta = sphere_coaction(2, false);
    EXPECT_TRUE(beta.apply(Poly(x(1))).terms().count({Word{u(2, 1)}, Word{x(2)}}));
    TensorHom ta = tuple_coaction(2, true);
    EXPECT_TRUE(ta.apply(Poly(t(1, 2))).terms().count({Word{v(1, 2)}, Word{t(2, 2)}}));
    TensorHom tb = tuple_coaction(2, false);
    EXPECT_TRUE(tb.apply(Poly(t(1, 2))).terms().count({Word{v(2, 1)}, Word{t(2, 2)}}));
}

TEST(Tensor, MismatchedLegsThrow) {
    TensorPoly a(Family::UnitaryU, Family::UnitaryU), b(Family::UnitaryU, Family::SphereX);
    EXPECT_THROW(a += b, RosterMismatch);
}
