#ifndef KCOLOR_RATIONAL_HPP
#define KCOLOR_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kcolor {

/// Exact fraction over 64-bit integers, always stored reduced with a
/// positive denominator. Intermediates are computed in 128 bits; a result
/// that does not fit back into int64 throws std::overflow_error, so
/// arithmetic never overflows silently.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Largest integer <= *this.
    std::int64_t floor() const;
    /// Smallest integer >= *this.
    std::int64_t ceil() const;

    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Canonical form makes equality a field-wise compare.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Canonical "num/den" text, e.g. "3/2", "-1/3", "6/1".
    std::string str() const;
    /// Accepts "num/den" or a bare integer. Throws ParseError.
    static Rational parse(std::string_view text);

private:
    struct raw_tag {};
    constexpr Rational(std::int64_t num, std::int64_t den, raw_tag) : num_(num), den_(den) {}
    /// Reduces and narrows, throwing std::overflow_error when out of range.
    static Rational make(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace kcolor

#endif
