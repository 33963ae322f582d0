#include "engelset/rational.hpp"

#include <ostream>

namespace engelset {

Rational::Rational(long long num, long long den) : q_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    const std::string s(text);
    const auto bad = [&] { return ValidationError("malformed rational literal: '" + s + "'"); };

    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos || s.find('.', dot + 1) != std::string::npos) throw bad();
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty() || digits == "-" || digits == "+") throw bad();
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw bad();
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10u, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    }

    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw ValidationError("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

Rational sqrt_lower_bound(const Rational& t) {
    if (t.sign() < 0) throw ValidationError("sqrt of negative rational");
    mpz_class prod = t.num() * t.den();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    mpq_class q(root, t.den());
    q.canonicalize();
    return Rational(q);
}

bool exact_sqrt(const Rational& t, Rational& out) {
    if (t.sign() < 0) return false;
    if (mpz_perfect_square_p(t.num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(t.den().get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), t.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), t.den().get_mpz_t());
    out = Rational(mpq_class(rn, rd));
    return true;
}

std::int64_t floor_to_int64(const Rational& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    if (!f.fits_slong_p()) throw ValidationError("rational floor out of int64 range");
    return f.get_si();
}

}  // namespace engelset
