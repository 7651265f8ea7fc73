#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qschur {

using Rat = mpq_class;

// Exponent vector of a monomial q^{e0} Q1^{e1} ... Qr^{er}. The q-exponent
// e[0] may be negative; Q-exponents are >= 0. Size is always 1 + nq.
using Expo = std::vector<int>;

// Descending lexicographic order on (e_q, e_Q1, ..., e_Qr); the leading term
// of a polynomial is the first one under this order, and map iteration in
// this order makes serialization canonical.
struct ExpoDescLex {
    bool operator()(const Expo& a, const Expo& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return a.size() < b.size();
    }
};

// Element of A = Z[q, q^-1, Q1, ..., Qr] (rational coefficients allowed for
// intermediate arithmetic). No zero terms are stored.
class LaurentPoly {
public:
    LaurentPoly() : nq_(0) {}
    explicit LaurentPoly(int nq) : nq_(nq) {}
    LaurentPoly(int nq, const Rat& c);

    static LaurentPoly q_power(int nq, int e, const Rat& c = 1);
    static LaurentPoly variable_q(int nq) { return q_power(nq, 1); }
    static LaurentPoly variable_Q(int nq, int k); // k in 1..nq
    static LaurentPoly constant(int nq, const Rat& c) { return LaurentPoly(nq, c); }

    int num_q_vars() const { return nq_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rat, ExpoDescLex>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator*(const Rat& c) const;

    bool operator==(const LaurentPoly& o) const { return nq_ == o.nq_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact quotient, or nullopt when the division leaves a remainder.
    std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& d) const;

    // True when every coefficient is an integer, i.e. the value lies in
    // Z[q, q^-1, Q1, ..., Qr].
    bool has_integer_coefficients() const;

    // Rational content (gcd of numerators / lcm of denominators) of all
    // coefficients; 0 for the zero polynomial.
    Rat content() const;

    // Leading coefficient in the canonical term order; 0 for zero.
    Rat leading_coefficient() const;

    // If the polynomial is a single term c * q^k (no Q's), returns (c, k).
    std::optional<std::pair<Rat, int>> as_q_monomial() const;

    // Substitute Q_k -> value (a polynomial in the same variables).
    LaurentPoly substitute_Q(int k, const LaurentPoly& value) const;

    // Canonical string, e.g. "q^2*Q1 - Q2"; "0" for zero.
    std::string str() const;

    // Parse the canonical grammar back into a polynomial with nq Q-variables.
    static LaurentPoly parse(const std::string& text, int nq);

private:
    int nq_;
    std::map<Expo, Rat, ExpoDescLex> terms_;
};

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

// [k] = (q^k - q^-k)/(q - q^-1) = sum_{j=0}^{|k|-1} q^{|k|-1-2j}, negated for k < 0.
LaurentPoly quantum_int(int k, int nq);

// [t]! = [t][t-1]...[1], with [0]! = 1.
LaurentPoly quantum_factorial(int t, int nq);

// [k][k-1]...[k-t+1] / [t]!; the division is exact.
LaurentPoly quantum_binom(int k, int t, int nq);

} // namespace qschur
