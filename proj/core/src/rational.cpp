#include "kcolor/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "kcolor/errors.hpp"

namespace kcolor {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 abs128(int128 x) {
    return x < 0 ? -static_cast<uint128>(x) : static_cast<uint128>(x);
}

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t parse_int64(std::string_view s) {
    std::int64_t value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("invalid integer in rational literal: '" + std::string(s) + "'");
    return value;
}

} // namespace

// Reduces num/den and narrows back to int64, throwing on overflow.
// Operands are products/sums of int64 values, so they fit in int128.
Rational Rational::make(__int128 num, __int128 den) {
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0)
        den = 1;
    uint128 g = gcd128(abs128(num), static_cast<uint128>(den));
    if (g > 1) {
        num /= static_cast<int128>(g);
        den /= static_cast<int128>(g);
    }
    constexpr int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
        throw std::overflow_error("Rational: value does not fit in 64 bits");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), raw_tag{});
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = make(num, den);
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
        --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0)
        ++q;
    return q;
}

Rational& Rational::operator+=(const Rational& o) {
    int128 num = static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_;
    int128 den = static_cast<int128>(den_) * o.den_;
    return *this = make(num, den);
}

Rational& Rational::operator-=(const Rational& o) {
    int128 num = static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_;
    int128 den = static_cast<int128>(den_) * o.den_;
    return *this = make(num, den);
}

Rational& Rational::operator*=(const Rational& o) {
    int128 num = static_cast<int128>(num_) * o.num_;
    int128 den = static_cast<int128>(den_) * o.den_;
    return *this = make(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw std::invalid_argument("Rational: division by zero");
    int128 num = static_cast<int128>(num_) * o.den_;
    int128 den = static_cast<int128>(den_) * o.num_;
    return *this = make(num, den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    int128 lhs = static_cast<int128>(a.num_) * b.den_;
    int128 rhs = static_cast<int128>(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int64(text));
    std::int64_t num = parse_int64(text.substr(0, slash));
    std::int64_t den = parse_int64(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num() << '/' << r.den();
}

} // namespace kcolor
