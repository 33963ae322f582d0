#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "engelset/errors.hpp"

namespace engelset {

// Exact arbitrary-precision rational scalar. Invariant: always in canonical
// form, i.e. reduced fraction with positive denominator (gcd(num, den) = 1).
//
// This is a value-semantics wrapper over GMP's mpq_class. All operators
// return plain Rational values rather than gmpxx expression templates, which
// keeps the type usable as an Eigen scalar.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}                 // NOLINT: implicit by design
    Rational(long n) : q_(n) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(long long num, long long den);
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p/q", "p", and decimal strings like "48.15" or "-0.25".
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Serializes as "p/q", or "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_), canonical_tag{}); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct canonical_tag {};
    Rational(mpq_class q, canonical_tag) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// A rational lower bound for sqrt(t), t >= 0: with t = p/q returns isqrt(p*q)/q.
Rational sqrt_lower_bound(const Rational& t);

// Exact square root when t is a perfect square of a rational; nullopt otherwise.
// (Returned via pointer-style optional to avoid <optional> in this header.)
bool exact_sqrt(const Rational& t, Rational& out);

// Floor of a rational as int64; throws ValidationError if out of range.
std::int64_t floor_to_int64(const Rational& r);

}  // namespace engelset
