#ifndef QUATLIN_RATIONAL_HPP
#define QUATLIN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace quatlin {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit on purpose
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& integer) : value_(integer) {}

    /// Parses "p/q" or "p". The sign goes on the numerator; q must be positive.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Canonical text form: "p" when q = 1, else "p/q".
    std::string str() const;

    /// Display only. Never used for decisions.
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& other) { return *this = *this + other; }
    Rational& operator-=(const Rational& other) { return *this = *this - other; }
    Rational& operator*=(const Rational& other) { return *this = *this * other; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
/// Throws DivisionByZero when b = 0.
Rational rat_div(const Rational& a, const Rational& b);

} // namespace quatlin

#endif
