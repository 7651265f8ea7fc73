#pragma once

#include <string>
#include <vector>

#include "qschur/fraction.hpp"
#include "qschur/laurent.hpp"

namespace qschur {

class FieldConfig;

// Element of Q[x]/(m(x)), stored as rational coefficients of degree < deg m.
// In rational mode m(x) = x, so elements are plain rationals.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(const FieldConfig* cfg, std::vector<Rat> coeffs);

    static FieldElem from_rat(const FieldConfig* cfg, const Rat& c);

    const FieldConfig* config() const { return cfg_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Inverse via the extended Euclidean algorithm; a nonzero non-invertible
    // element (reducible minpoly) raises ZeroDivisor.
    FieldElem inverse() const;

    std::string str() const;

private:
    const FieldConfig* cfg_ = nullptr;
    std::vector<Rat> coeffs_;
};

// A specialization target: q and Q_k values inside Q or Q[x]/(m(x)).
class FieldConfig {
public:
    enum class Mode { Rational, NumberField };

    // minpoly is monic with rational coefficients, degree >= 1, constant
    // term first. Rational mode uses m(x) = x.
    FieldConfig(Mode mode, std::vector<Rat> minpoly, std::vector<Rat> q_value,
                std::vector<std::vector<Rat>> q_k_values);

    static FieldConfig rational(const Rat& q, const std::vector<Rat>& Q);
    static FieldConfig from_json_text(const std::string& text);

    Mode mode() const { return mode_; }
    size_t degree() const { return minpoly_.size() - 1; }
    const std::vector<Rat>& minpoly() const { return minpoly_; }
    int num_q_vars() const { return int(q_values_.size()); }

    FieldElem q() const;
    FieldElem q_inv() const;
    FieldElem Q(int k) const; // 1-based

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem element(std::vector<Rat> coeffs) const;

    std::string describe() const;

private:
    Mode mode_;
    std::vector<Rat> minpoly_;           // monic, constant first, size = deg+1
    std::vector<Rat> q_value_;
    std::vector<std::vector<Rat>> q_values_; // Q_1..Q_r
    friend class FieldElem;
};

// Ring-homomorphic image with q -> q_value, Q_k -> Q_values[k].
FieldElem specialize(const LaurentPoly& p, const FieldConfig& cfg);

// DenominatorVanishes when the denominator specializes to zero.
FieldElem specialize(const Fraction& f, const FieldConfig& cfg);

// Univariate polynomial in x with rational coefficients, e.g. "x^2+1",
// "1/4", "-x". Returns coefficients with constant term first.
std::vector<Rat> parse_univariate(const std::string& text);

} // namespace qschur
