#pragma once

#include <optional>
#include <string>

#include "qschur/laurent.hpp"

namespace qschur {

// num/den over A, kept unreduced apart from joint integer-content removal and
// a sign normalization (den's leading coefficient positive). Equality is
// decided by cross-multiplication.
class Fraction {
public:
    Fraction() : num_(0), den_(LaurentPoly::constant(0, 1)) {}
    explicit Fraction(LaurentPoly num)
        : num_(std::move(num)), den_(LaurentPoly::constant(num_.num_q_vars(), 1)) {}
    Fraction(LaurentPoly num, LaurentPoly den);
    Fraction(int nq, const Rat& c) : Fraction(LaurentPoly::constant(nq, c)) {}

    static Fraction zero(int nq) { return Fraction(LaurentPoly(nq)); }
    static Fraction one(int nq) { return Fraction(LaurentPoly::constant(nq, 1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int num_q_vars() const { return num_.num_q_vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const;

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    bool operator==(const Fraction& o) const;
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    // Exact polynomial value if den divides num (over Q-coefficients).
    std::optional<LaurentPoly> as_polynomial() const;

    // Membership in A = Z[q, q^-1, Q1..Qr]: exact division with an integral
    // quotient. Denominators +-q^k are units of A and always clear.
    std::optional<LaurentPoly> as_coefficient_ring_element() const;

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_, den_;
};

inline Fraction operator*(const LaurentPoly& p, const Fraction& f) { return Fraction(p) * f; }

} // namespace qschur
