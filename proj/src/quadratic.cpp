#include "engelset/quadratic.hpp"

#include <cmath>

namespace engelset {

QuadRadius::QuadRadius(Rational u_, Rational v_, Rational D_) : u(std::move(u_)), v(std::move(v_)), D(std::move(D_)) {
    if (D.sign() < 0) throw ValidationError("quadratic radius with negative radicand");
    if (D.is_zero() && !v.is_zero()) throw ValidationError("quadratic radius with zero radicand and nonzero v");
}

QuadRadius QuadRadius::squared() const {
    return QuadRadius(u * u + v * v * D, Rational(2) * u * v, D);
}

double QuadRadius::to_double() const { return u.to_double() + v.to_double() * std::sqrt(D.to_double()); }

std::string QuadRadius::str() const {
    if (is_rational()) return u.str();
    return u.str() + " + " + v.str() + "*sqrt(" + D.str() + ")";
}

int cmp_rational_quad(const Rational& q, const QuadRadius& alpha) {
    const Rational s = q - alpha.u;
    const int ss = s.sign();
    const int vs = alpha.v.sign();
    if (vs == 0) return ss;
    if (ss != vs) return ss != 0 ? ss : -vs;
    const Rational t = s * s - alpha.v * alpha.v * alpha.D;
    return vs * t.sign();
}

int sign_of(const QuadRadius& alpha) { return -cmp_rational_quad(Rational(0), alpha); }

int cmp_quad(const QuadRadius& alpha, const QuadRadius& beta) {
    if (beta.is_rational()) return -cmp_rational_quad(beta.u, alpha);
    if (alpha.is_rational()) return cmp_rational_quad(alpha.u, beta);
    if (!(alpha.D == beta.D)) throw ValidationError("comparing quadratic radii over different radicands");
    return sign_of(QuadRadius(alpha.u - beta.u, alpha.v - beta.v, alpha.D));
}

int cmp_sqrt_diff(const Rational& A, const Rational& B, const Rational& c) {
    if (A.sign() < 0 || B.sign() < 0) throw ValidationError("sqrt of negative rational in comparison");
    // sign(sqrt(A) - T) with T = c + sqrt(B).
    const int t_sign = sign_of(QuadRadius(c, B.is_zero() ? Rational(0) : Rational(1), B.is_zero() ? Rational(1) : B));
    if (t_sign < 0) return +1;
    // Both sides nonnegative: compare A against T^2 = (c^2 + B) + 2c sqrt(B).
    const Rational lhs = A - c * c - B;
    if (B.is_zero()) return lhs.sign();
    return cmp_rational_quad(lhs, QuadRadius(Rational(0), Rational(2) * c, B));
}

QuadRadius two_dR_minus_eps(int d, const Rational& R_sq, const Rational& eps) {
    QuadRadius rho(-eps, Rational(2 * d), R_sq);
    if (sign_of(rho) <= 0) throw ValidationError("radius 2dR - eps is not positive");
    return rho;
}

QuadRadius two_kR(int k, const Rational& R_sq) {
    if (k < 0) throw ValidationError("negative multiplier in 2kR radius");
    return QuadRadius(Rational(0), Rational(2 * k), R_sq);
}

}  // namespace engelset
