#include "ncstar/rational.hpp"

#include <numeric>

namespace ncstar {
namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr __int128 kMax = INT64_MAX;
constexpr __int128 kMin = INT64_MIN;

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return {};
    __int128 g = wide_gcd(n, d);
    n /= g;
    d /= g;
    if (n > kMax || n < kMin || d > kMax) throw ArithmeticOverflow("rational coefficient overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::operator-() const {
    if (num_ == INT64_MIN) throw ArithmeticOverflow("rational negation overflow");
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t s;
        if (__builtin_add_overflow(num_, o.num_, &s)) throw ArithmeticOverflow("rational sum overflow");
        num_ = s;
        return *this;
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        std::int64_t p;
        if (__builtin_mul_overflow(num_, o.num_, &p)) throw ArithmeticOverflow("rational product overflow");
        num_ = p;
        return *this;
    }
    return *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::string Scalar::str() const {
    std::string out = re_.str();
    if (im_ < Rational(0))
        out += "-" + (-im_).str();
    else
        out += "+" + im_.str();
    return out + " i";
}

Scalar Scalar::parse(const std::string& s) {
    // a/b(+|-)c/d i
    auto fail = [&]() -> Scalar { throw std::invalid_argument("malformed scalar '" + s + "'"); };
    if (s.size() < 2 || s.substr(s.size() - 2) != " i") return fail();
    std::string body = s.substr(0, s.size() - 2);
    std::size_t split = body.find_first_of("+-", 1);
    if (split == std::string::npos) return fail();
    auto parse_rat = [&](const std::string& t) {
        auto slash = t.find('/');
        if (slash == std::string::npos) fail();
        return Rational(std::stoll(t.substr(0, slash)), std::stoll(t.substr(slash + 1)));
    };
    Rational re = parse_rat(body.substr(0, split));
    Rational im = parse_rat(body.substr(split + 1));
    if (body[split] == '-') im = -im;
    return {re, im};
}

}  // namespace ncstar
