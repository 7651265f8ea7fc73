#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qschur/fraction.hpp"
#include "qschur/schur.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// Divided-power monomial F^{(c1)}_{p1} ... F^{(cl)}_{pl} with flat position
// letters, adjacent positions distinct.
struct FMonomial {
    std::vector<std::pair<int, int>> letters; // (flat position, exponent >= 1)

    std::vector<int> plain() const; // expanded letter string
    int degree() const;
    bool operator==(const FMonomial& o) const { return letters == o.letters; }
    bool operator<(const FMonomial& o) const { return letters < o.letters; }
    std::string str() const;

    static FMonomial from_plain(const std::vector<int>& word);
};

// Finitely supported map from plain F-letter strings to coefficients,
// anchored at a weight; all stored strings have in-lattice weight paths.
struct FormalVector {
    Weight anchor;
    std::map<std::vector<int>, Fraction> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& s, const Fraction& c);
};

// The eta table consumed by the engine; every returned expression has
// degree 0. cache_key distinguishes providers with different tables.
class EtaProvider {
public:
    virtual ~EtaProvider() = default;
    virtual const EtaExpr& eta(const Weight& lam, int flat_pos) const = 0;
    virtual int num_q_vars() const = 0;
    virtual std::string cache_key() const = 0;
};

// eta^lambda_p = [lambda_p - lambda_{p+1}] everywhere: the r = 1 relation.
class TypeAProvider : public EtaProvider {
public:
    explicit TypeAProvider(int m) : m_(m) {}
    const EtaExpr& eta(const Weight& lam, int flat_pos) const override;
    int num_q_vars() const override { return 0; }
    std::string cache_key() const override { return "type_a"; }

private:
    int m_;
    mutable std::map<std::pair<std::vector<int>, int>, EtaExpr> cache_;
};

// eta = 0 everywhere (the degenerate quotient).
class ZeroProvider : public EtaProvider {
public:
    explicit ZeroProvider(int nq) : nq_(nq), zero_{Fraction::zero(nq), {}} {}
    const EtaExpr& eta(const Weight&, int) const override { return zero_; }
    int num_q_vars() const override { return nq_; }
    std::string cache_key() const override { return "zero"; }

private:
    int nq_;
    EtaExpr zero_;
};

// Delegates to the concrete cyclotomic realization.
class CyclotomicProvider : public EtaProvider {
public:
    CyclotomicProvider(std::shared_ptr<SchurData> data, std::string variant = "")
        : data_(std::move(data)), variant_(std::move(variant)) {}
    const EtaExpr& eta(const Weight& lam, int flat_pos) const override {
        return data_->eta(lam, flat_pos);
    }
    int num_q_vars() const override { return data_->r(); }
    std::string cache_key() const override { return "cyclotomic" + variant_; }
    const SchurData& data() const { return *data_; }

private:
    std::shared_ptr<SchurData> data_;
    std::string variant_;
};

// An explicit table, for tests.
class TableProvider : public EtaProvider {
public:
    TableProvider(int nq, std::string key) : nq_(nq), key_(std::move(key)) {}
    void set(const Weight& lam, int flat_pos, EtaExpr e) {
        table_[{lam.bar, flat_pos}] = std::move(e);
    }
    const EtaExpr& eta(const Weight& lam, int flat_pos) const override;
    int num_q_vars() const override { return nq_; }
    std::string cache_key() const override { return key_; }

private:
    int nq_;
    std::string key_;
    std::map<std::pair<std::vector<int>, int>, EtaExpr> table_;
};

// Evaluation engine for the presented algebra on the free span of F-strings.
class Engine {
public:
    explicit Engine(const EtaProvider* provider) : provider_(provider) {}

    const EtaProvider* provider() const { return provider_; }

    FormalVector apply_F(const FormalVector& v, int flat_pos) const;
    FormalVector apply_E(const FormalVector& v, int flat_pos) const;

    // Vector of the monomial x applied to the empty string at lam (with the
    // divided-power 1/[c]! normalizations); zero when the path exits.
    FormalVector monomial_vector(const FMonomial& x, const Weight& lam) const;

    // <y, x> at lam: iota(y) applied to the vector of x, empty-string
    // coefficient extracted. Both divided-power normalizations included.
    Fraction pair(const FMonomial& y, const FMonomial& x, const Weight& lam) const;

    size_t memo_size() const { return memo_.size(); }
    long peak_fuel() const { return peak_fuel_; }

private:
    // E applied to a single string with coefficient one.
    const FormalVector& e_on_string(const Weight& anchor, const std::vector<int>& s,
                                    int flat_pos, long fuel) const;

    const EtaProvider* provider_;
    mutable std::map<std::tuple<std::vector<int>, std::vector<int>, int>, FormalVector> memo_;
    mutable long peak_fuel_ = 0;
};

// All divided-power monomials of degree lam - mu with in-lattice paths,
// deterministic (lex) order; empty when mu is not below lam.
std::vector<FMonomial> enumerate_xi(const Weight& lam, const Weight& mu);

struct BasisSelection {
    std::vector<FMonomial> basis;
    bool lattice_ok = true;
};

// Greedy maximal-generic-rank basis of the (lam, mu) weight space, plus the
// A-lattice verification of all remaining spanning monomials. A forced set
// is verified instead of selected; ForcedSetDependent when its rank is
// deficient.
BasisSelection select_basis(const Engine& eng, const Weight& lam, const Weight& mu,
                            const std::vector<FMonomial>* forced = nullptr);

// E^a F^a on the empty vector at every lattice weight and interior position:
// the computed scalar must be [a]! prod_j [d - a + j] whenever the F-path
// stays in the lattice, and the vector must vanish when it exits.
std::vector<CheckItem> verify_ef_power_identity(const Engine& eng, int n, int r);

} // namespace qschur
