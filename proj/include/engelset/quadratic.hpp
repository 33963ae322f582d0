#pragma once

#include <string>

#include "engelset/rational.hpp"

namespace engelset {

// Value u + v * sqrt(D) with rational u, v and rational D >= 0. Used for
// radii of the form 2dR - eps (and their squares), where R is a square root
// of a rational. v = 0 degenerates to a plain rational; comparisons stay
// exact in every case.
struct QuadRadius {
    Rational u;
    Rational v;
    Rational D;

    QuadRadius() : u(0), v(0), D(1) {}
    QuadRadius(Rational u_, Rational v_, Rational D_);
    QuadRadius(const Rational& q) : u(q), v(0), D(1) {}  // rational values embed as-is

    static QuadRadius from_rational(const Rational& q) { return QuadRadius(q, Rational(0), Rational(1)); }

    bool is_rational() const { return v.is_zero(); }

    // (u + v sqrt(D))^2 = (u^2 + v^2 D) + (2uv) sqrt(D).
    QuadRadius squared() const;

    double to_double() const;
    std::string str() const;
};

// Exact sign of q - (u + v sqrt(D)).
//   s := q - u
//   v = 0                    -> sign(s)
//   sign(s) != sign(v)       -> sign(s) if s != 0, else -sign(v)
//   otherwise                -> sign(v) * sign(s^2 - v^2 D)
int cmp_rational_quad(const Rational& q, const QuadRadius& alpha);

// Exact sign of u + v sqrt(D).
int sign_of(const QuadRadius& alpha);

// Exact sign of alpha - beta. Requires alpha.D == beta.D unless one side is
// rational (v = 0), in which case the radicand mismatch is immaterial.
int cmp_quad(const QuadRadius& alpha, const QuadRadius& beta);

// Exact sign of sqrt(A) - sqrt(B) - c for rationals A, B >= 0.
int cmp_sqrt_diff(const Rational& A, const Rational& B, const Rational& c);

// Radius 2dR - eps with R = sqrt(R_sq): value form {-eps, 2d, R_sq}.
QuadRadius two_dR_minus_eps(int d, const Rational& R_sq, const Rational& eps);

// Radius 2kR as a value: {0, 2k, R_sq}.
QuadRadius two_kR(int k, const Rational& R_sq);

}  // namespace engelset
