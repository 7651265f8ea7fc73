#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/hecke.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// The element m_ambient * h of M^ambient. h is the right factor, not unique;
// equality compares the straightened full products.
struct ModuleElem {
    Weight ambient;
    HeckeElem h;
};

// coeff * F-word * E-word with flat position letters; degree 0 within each
// word pair.
struct GWord {
    Fraction coeff;
    std::vector<int> f_word, e_word;
};

// scalar * 1_lambda + sum of GWords * 1_lambda.
struct EtaExpr {
    Fraction scalar;
    std::vector<GWord> words;
};

struct CheckItem {
    std::string identity;
    std::string params;
    bool pass = false;
};

// The concrete endomorphism realization on the cyclic modules M^mu: phi+-,
// kappa, sigma evaluated through Hecke arithmetic, and the g / eta data
// solved from it.
class SchurData {
public:
    SchurData(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    int m() const { return m_; }
    const Hecke& hecke() const { return hecke_; }

    ModuleElem module_unit(const Weight& mu) const;
    ModuleElem module_zero() const;
    HeckeElem full(const ModuleElem& e) const;
    bool is_zero(const ModuleElem& e) const;
    bool equal(const ModuleElem& a, const ModuleElem& b) const;

    // phi^+-_{(i,k)} applied through right-module linearity; zero when the
    // shifted weight leaves the lattice.
    ModuleElem apply_phi(const ModuleElem& e, int flat_pos, int sign) const;

    // sigma^lambda_{(i,k)} on m_lambda, as a ModuleElem anchored at lambda.
    ModuleElem sigma_value(const Weight& lam, int flat_gamma_pos) const;

    // g^-(phi^-) g^+(phi^+) phi^1_{lambda,lambda} on m_lambda: e_word letters
    // are applied right-to-left as phi^+, then f_word as phi^-.
    ModuleElem eval_word(const Weight& lam, const std::vector<int>& f_word,
                         const std::vector<int>& e_word) const;

    // Minimal-degree solution of sigma^lambda = sum r_j f_j(phi^-) e_j(phi^+)
    // by candidate enumeration and linear solving; cached per (lambda, pos).
    const std::vector<GWord>& solve_g(const Weight& lam, int flat_gamma_pos) const;

    // The eta^lambda_{(i,k)} of the presentation, flat position in 1..m-1.
    const EtaExpr& eta(const Weight& lam, int flat_pos) const;

    // Enumerating candidates in reversed per-degree order produces a second
    // valid g-choice for the invariance suite.
    void set_reversed_candidates(bool rev) { reversed_candidates_ = rev; }

    std::vector<CheckItem> verify_section6() const;

private:
    HeckeElem coset_sum(const Weight& a, const Weight& b) const; // sum over S_a S_b
    Fraction q_pow_frac(int e) const { return Fraction(hecke_.q_pow(e)); }

    int n_, r_, m_;
    Hecke hecke_;
    bool reversed_candidates_ = false;
    mutable std::map<std::pair<std::vector<int>, int>, std::vector<GWord>> g_cache_;
    mutable std::map<std::pair<std::vector<int>, int>, EtaExpr> eta_cache_;
};

} // namespace qschur
