#pragma once

#include <Eigen/Dense>

#include "engelset/rational.hpp"

namespace Eigen {

// Registers engelset::Rational as an exact Eigen scalar. epsilon and
// dummy_precision are zero: comparisons against them degenerate to exact
// sign tests, which is what an exact kernel wants.
template <>
struct NumTraits<engelset::Rational> : GenericNumTraits<engelset::Rational> {
    typedef engelset::Rational Real;
    typedef engelset::Rational NonInteger;
    typedef engelset::Rational Nested;
    typedef engelset::Rational Literal;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace engelset {

// Dimension guard: horizontal blocks have at most kMaxHorizDims coordinates
// (supports d up to kMaxHorizDims + 1). Keeps per-point storage inline.
inline constexpr int kMaxHorizDims = 8;

// Horizontal coordinate block of a split vector: d-1 rationals, runtime-sized,
// storage inline up to kMaxHorizDims.
using HVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxHorizDims, 1>;
using HMatrix =
    Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxHorizDims, kMaxHorizDims>;

// Unbounded dense types for generic point-set work.
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace engelset
