#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qschur/fraction.hpp"
#include "qschur/perm.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// Basis symbol L_1^{c_1} ... L_n^{c_n} T_w with 0 <= c_i <= r-1.
struct HSym {
    std::vector<uint8_t> c;
    std::vector<int> w; // one-line notation

    bool operator<(const HSym& o) const { return std::tie(c, w) < std::tie(o.c, o.w); }
    bool operator==(const HSym& o) const { return c == o.c && w == o.w; }
};

class Hecke;

// A-linear combination of basis symbols, always fully straightened.
class HeckeElem {
public:
    HeckeElem() = default;
    explicit HeckeElem(const Hecke* alg) : alg_(alg) {}

    const Hecke* algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<HSym, Fraction>& terms() const { return terms_; }

    void add(const HSym& s, const Fraction& coeff);

    HeckeElem operator+(const HeckeElem& o) const;
    HeckeElem operator-(const HeckeElem& o) const;
    HeckeElem operator-() const;
    HeckeElem operator*(const Fraction& c) const;
    HeckeElem& operator+=(const HeckeElem& o);
    HeckeElem& operator-=(const HeckeElem& o);

    bool operator==(const HeckeElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const HeckeElem& o) const { return !(*this == o); }

    // Sorted ["L^c T_w", coeff] debug rendering.
    std::string str() const;

private:
    const Hecke* alg_ = nullptr;
    std::map<HSym, Fraction> terms_;
};

// The Ariki-Koike algebra H_{n,r} over A = Z[q,q^-1,Q_1..Q_r] in the basis
// {L^c T_w}; all products are straightened through left multiplication by
// the generators T_0, ..., T_{n-1}.
class Hecke {
public:
    Hecke(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    int nq() const { return r_; }

    Fraction coeff(const LaurentPoly& p) const { return Fraction(p); }
    LaurentPoly q_pow(int e) const { return LaurentPoly::q_power(r_, e); }
    LaurentPoly Q(int k) const { return LaurentPoly::variable_Q(r_, k); }

    HeckeElem zero() const { return HeckeElem(this); }
    HeckeElem one() const;
    HeckeElem from_symbol(const HSym& s, const Fraction& c) const;
    HeckeElem T(const Perm& w) const;                    // basis element T_w
    HeckeElem Tgen(int i) const;                         // T_i, i in 0..n-1
    HeckeElem L(int j) const;                            // L_j, j in 1..n
    HeckeElem x_sum(const Weight& comp) const;           // sum q^{l(w)} T_w over S_comp
    HeckeElem u_plus(const Weight& mu) const;            // prod_k prod_{i<=a_k}(L_i - Q_k)
    const HeckeElem& m(const Weight& mu) const;          // m_mu = x_{bar mu} u_mu^+, cached

    // Left multiplication by T_i (i = 0 is T_0 = L_1).
    HeckeElem lmul_gen(int i, const HeckeElem& x) const;

    HeckeElem mul(const HeckeElem& a, const HeckeElem& b) const;

    // The * anti-automorphism (T_i fixed, words reversed).
    HeckeElem star(const HeckeElem& a) const;

    // m_mu (L_{N+1} + ... + L_{N+mu_p}) for the flat Gamma-position p; zero
    // when the entry vanishes.
    HeckeElem l_sum_right(const Weight& mu, int flat_pos) const;

private:
    int n_, r_;
    std::vector<LaurentPoly> lpow_reduction_; // L_1^r = sum_j lpow_reduction_[j] L_1^j
    mutable std::map<std::vector<int>, HeckeElem> m_cache_;
};

} // namespace qschur
