#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/field.hpp"
#include "qschur/fraction.hpp"
#include "qschur/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<qschur::LaurentPoly> {
    using Real = qschur::LaurentPoly;
    using NonInteger = qschur::LaurentPoly;
    using Nested = qschur::LaurentPoly;
    using Literal = qschur::LaurentPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64
    };
    static int digits10() { return 0; }
};

template <>
struct NumTraits<qschur::Fraction> {
    using Real = qschur::Fraction;
    using NonInteger = qschur::Fraction;
    using Nested = qschur::Fraction;
    using Literal = qschur::Fraction;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 128
    };
    static int digits10() { return 0; }
};

template <>
struct NumTraits<qschur::FieldElem> {
    using Real = qschur::FieldElem;
    using NonInteger = qschur::FieldElem;
    using Nested = qschur::FieldElem;
    using Literal = qschur::FieldElem;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace qschur {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

// Rank by fraction-free (Bareiss) elimination; entries stay in A throughout,
// no multivariate GCDs are needed.
int bareiss_rank(Mat<LaurentPoly> m);

// Rank over the fraction field: rows are cleared to A by multiplying with the
// product of their denominators, then Bareiss.
int rank_generic(const Mat<Fraction>& m);

int rank_over_field(Mat<FieldElem> m);

template <class M>
int corank_of(const M& m, int rank) { return int(m.cols()) - rank; }

int corank(Mat<FieldElem> m);

// Solves A x = b over the fraction field by Gaussian elimination, preferring
// pivots in the earliest columns; free variables are set to zero. Returns
// nullopt when the system is inconsistent.
std::optional<Vec<Fraction>> solve_fraction_linear(Mat<Fraction> a, Vec<Fraction> b);

} // namespace qschur
