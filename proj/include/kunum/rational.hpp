#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace kunum {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Expression templates are kept
/// out of the public surface so that `auto` and overload resolution behave.
class Rat {
public:
    Rat() = default;
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(long long n) : q_(std::to_string(n)) {}
    Rat(long num, long den);
    explicit Rat(mpz_class n) : q_(std::move(n)) {}
    explicit Rat(mpq_class q);

    /// Parses "n", "-n", "p/q" (whitespace-free). Throws std::invalid_argument.
    static Rat parse(std::string_view text);

    /// "p/q", or "n" when the denominator is 1.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    mpz_class floor() const;
    mpz_class ceil() const;

    /// Converts an integral value to int64; throws std::overflow_error or
    /// std::domain_error when that is impossible.
    std::int64_t to_int64() const;

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Non-negative generator of the subgroup of Q spanned by `a` and `b`.
Rat rational_gcd(const Rat& a, const Rat& b);

/// Integer power, exponent may be negative for non-zero base.
Rat pow(const Rat& base, int exponent);

} // namespace kunum
