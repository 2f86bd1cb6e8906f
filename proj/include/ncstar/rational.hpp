#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncstar {

/// Thrown when an exact coefficient leaves the 64-bit range.
struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// Exact rational with a reduced, positive-denominator int64 representation.
/// Intermediate products are formed in 128 bits; results that do not fit
/// throw ArithmeticOverflow instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "a/b", always with an explicit denominator.
    std::string str() const;

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Gaussian rational re + im*i.
class Scalar {
public:
    constexpr Scalar() = default;
    constexpr Scalar(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(re) {}                // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(re), im_(im) {}

    static Scalar i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Scalar conj() const { return {re_, -im_}; }
    Scalar operator-() const { return {-re_, -im_}; }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar&, const Scalar&) = default;

    /// Bit-exact "a/b+c/d i" form used in certificates.
    std::string str() const;
    /// Parses the str() form back.
    static Scalar parse(const std::string& s);

private:
    Rational re_;
    Rational im_;
};

}  // namespace ncstar
