#include "engelset/params.hpp"

#include <string>

#include "engelset/eigen_support.hpp"

namespace engelset {

namespace {

// Smallest q > 0 with q*x and q*y integers.
mpz_class common_denominator(const Rational& x, const Rational& y) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
    return l;
}

std::int64_t to_int64_exact(const Rational& r, const char* what) {
    if (!r.is_integer()) throw ValidationError(std::string(what) + " is not an integer");
    if (!r.num().fits_slong_p()) throw ValidationError(std::string(what) + " out of range");
    return r.num().get_si();
}

}  // namespace

EngelParams::EngelParams(ShiftSequence seq, Rational a, Rational b_sq, Rational delta)
    : seq_(std::move(seq)), a_(std::move(a)), b_sq_(std::move(b_sq)), delta_(std::move(delta)), unit_sq_(b_sq_) {
    Rational root;
    if (exact_sqrt(b_sq_, root)) b_ = root;
    validate();
}

EngelParams EngelParams::with_b(ShiftSequence seq, Rational a, Rational b, Rational delta) {
    if (b.sign() <= 0) throw ValidationError("b must be positive");
    return EngelParams(std::move(seq), std::move(a), b * b, std::move(delta));
}

EngelParams EngelParams::uneven(ShiftSequence seq, Rational a, Rational b, Rational b_prime, Rational delta) {
    if (b.sign() <= 0 || b_prime.sign() <= 0) throw ValidationError("b and b' must be positive");
    EngelParams p(std::move(seq), std::move(a), b * b, std::move(delta));
    if (!(p.a_ * p.a_ < b_prime * b_prime)) throw ValidationError("uneven spacing requires a < b'");
    p.b_prime_ = b_prime;
    // Vertical sub-unit 1/q making every layer height an integer multiple.
    const mpz_class q = common_denominator(Rational(2) * b, Rational(2) * b_prime);
    const Rational qr{mpq_class(q)};
    p.unit_sq_ = Rational(1) / (qr * qr);
    p.vstep_odd_ = to_int64_exact(Rational(2) * b * qr, "vertical step");
    p.vstep_even_ = to_int64_exact(Rational(2) * b_prime * qr, "vertical step");
    return p;
}

void EngelParams::validate() const {
    if (a_.sign() <= 0) throw ValidationError("a must be positive");
    if (delta_.sign() <= 0) throw ValidationError("delta must be positive");
    if (!(delta_ < a_)) throw ValidationError("delta must be smaller than a");
    if (!(a_ * a_ < b_sq_)) throw ValidationError("a must be smaller than b (a^2 < b^2)");
    if (seq_.d() > kMaxHorizDims + 1) throw ValidationError("dimension exceeds supported maximum");
}

const Rational& EngelParams::b_exact() const {
    if (!b_) throw ValidationError("b is irrational for this parameter set (only b^2 is rational)");
    return *b_;
}

const Rational& EngelParams::b_prime_exact() const {
    if (!b_prime_) throw ValidationError("parameter set has even spacing");
    return *b_prime_;
}

std::int64_t EngelParams::vstep_into(std::int64_t m) const {
    // Stepping m-1 -> m: m odd is an E3 step, m even an E4 step.
    const bool even_rule = (m % 2) == 0;
    return even_rule ? vstep_even_ : vstep_odd_;
}

std::int64_t EngelParams::layer_vlevel(std::int64_t m) const {
    if (!uneven_spacing()) return 2 * m;
    // floor(m/2) full (2b + 2b') blocks plus one 2b step for odd m.
    std::int64_t i = m >= 0 ? m / 2 : -((-m + 1) / 2);
    std::int64_t lvl = i * (vstep_odd_ + vstep_even_);
    if (m % 2 != 0) lvl += vstep_odd_;
    return lvl;
}

Rational EngelParams::R_sq() const {
    require_even_spacing(*this, "covering radius");
    return b_sq_ + Rational(d() - 1) * a_ * a_;
}

DeloneRadii delone_radii(const EngelParams& params) {
    return DeloneRadii{params.r(), params.R_sq()};
}

void require_even_spacing(const EngelParams& params, const char* operation) {
    if (params.uneven_spacing())
        throw ValidationError(std::string(operation) + " is not defined for uneven layer spacing");
}

}  // namespace engelset
