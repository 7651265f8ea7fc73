#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qschur/field.hpp"
#include "qschur/fraction.hpp"
#include "qschur/schur.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// Element of V^{otimes n} with dim V = m: finitely supported map from index
// tuples to coefficients in Z[q, q^-1].
struct TensorVector {
    std::map<std::vector<uint8_t>, Fraction> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<uint8_t>& idx, const Fraction& c);
    TensorVector operator+(const TensorVector& o) const;
    TensorVector operator-(const TensorVector& o) const;
    TensorVector operator*(const Fraction& c) const;
    bool operator==(const TensorVector& o) const { return terms == o.terms; }
};

// The two commuting actions on V^{otimes n}: the quantum group through the
// iterated comultiplication, and the Hecke algebra through the R-matrix rule.
class TensorSpace {
public:
    TensorSpace(int n, int m) : n_(n), m_(m) {}

    int n() const { return n_; }
    int m() const { return m_; }

    TensorVector basis_vector(const std::vector<uint8_t>& idx) const;
    TensorVector highest(const Weight& mu) const; // v_mu
    std::vector<std::vector<uint8_t>> all_tuples() const;

    TensorVector act_e(int i, const TensorVector& v) const;
    TensorVector act_f(int i, const TensorVector& v) const;
    TensorVector act_k(int i, int sign, const TensorVector& v) const;
    TensorVector act_T(int j, const TensorVector& v) const; // right action
    TensorVector act_T_word(const Perm& w, const TensorVector& v) const;

    // rho'(monomial) v, letters applied right to left with divided-power
    // normalizations.
    TensorVector act_f_monomial(const std::vector<std::pair<int, int>>& letters,
                                const TensorVector& v) const;

private:
    Fraction qp(int e) const { return Fraction(LaurentPoly::q_power(0, e)); }

    int n_, m_;
};

// Generator-level verification of the classical Schur-Weyl surjection
// formulas plus the defining operator identities.
std::vector<CheckItem> check_prop47(int n, int m);

// r = 1 oracle: the engine's simple-dimension table (type_a eta) must agree
// with ranks of naturally paired tensor images. cfg == nullptr = generic.
std::vector<CheckItem> r1_crosscheck(int n, int m, const FieldConfig* cfg);

} // namespace qschur
