#pragma once

#include "ncstar/rational.hpp"
#include "ncstar/words.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncstar {

struct RosterMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Noncommutative *-polynomial with exact Gaussian-rational coefficients.
/// Terms are kept sorted by the length-lex word order; zero coefficients are
/// never stored.
class Poly {
public:
    using Terms = std::map<Word, Scalar>;

    Poly() = default;
    Poly(const Word& w, Scalar c = 1);  // NOLINT(google-explicit-constructor)
    Poly(Letter l) : Poly(Word(l)) {}   // NOLINT(google-explicit-constructor)
    static Poly constant(Scalar c) { return Poly(Word{}, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const;
    Scalar coeff(const Word& w) const;
    /// Family tag of the first letter that appears, if any.
    std::optional<Family> family() const;

    void add_term(const Word& w, const Scalar& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const { return *this * Scalar(-1); }

    Poly star() const;
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Leading (largest) word; the polynomial must be nonzero.
    const Word& leading_word() const { return terms_.rbegin()->first; }

    std::string str() const;

private:
    Terms terms_;
};

/// Checked product: throws RosterMismatch when the factors use different
/// generator families.
Poly mul(const Poly& p, const Poly& q);
Poly add(const Poly& p, const Poly& q);
inline Poly star(const Poly& p) { return p.star(); }

/// Element of a two-leg tensor product of free *-algebras.
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Scalar>;

    TensorPoly(Family left, Family right) : left_(left), right_(right) {}

    Family left_family() const { return left_; }
    Family right_family() const { return right_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& l, const Word& r, const Scalar& c);
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const Scalar& c);
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    TensorPoly star() const;
    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

    static TensorPoly elementary(Family left, const Poly& l, Family right, const Poly& r);
    static TensorPoly unit(Family left, Family right);

    std::string str() const;

private:
    void check(const TensorPoly& o) const;

    Family left_;
    Family right_;
    Terms terms_;
};

/// A *-homomorphism from a free *-algebra into a tensor product, fixed by the
/// images of the unstarred generators and extended multiplicatively.
class TensorHom {
public:
    TensorHom(Family source, Family left, Family right) : source_(source), left_(left), right_(right) {}

    void set_image(Generator g, TensorPoly image);
    const TensorPoly& image(Generator g) const;
    TensorPoly apply(const Poly& p) const;

    Family source() const { return source_; }

private:
    Family source_;
    Family left_;
    Family right_;
    std::map<Generator, std::pair<TensorPoly, TensorPoly>> images_;  // (image, star(image))
};

/// Delta(u_ij) = sum_k u_ik (x) u_kj.
TensorPoly comultiply_generator(int i, int j, int n);
/// The comultiplication as a *-homomorphism C(U) -> C(U) (x) C(U).
TensorHom comultiplication(int n);
/// alpha(x_i) = sum_j u_ij (x) x_j (left) or beta(x_i) = sum_k u_ki (x) x_k (right).
TensorHom sphere_coaction(int n, bool left);
/// alpha(x_ik) = sum_j u_ij (x) x_jk (left) or beta(x_ik) = sum_j u_ji (x) x_jk (right).
TensorHom tuple_coaction(int n, bool left);

}  // namespace ncstar
