#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qschur/field.hpp"
#include "qschur/linalg.hpp"
#include "qschur/presented.hpp"
#include "qschur/weights.hpp"

namespace qschur {

// Gram matrix of a weight space of a standard module, entries cleared to A.
struct GramMatrix {
    Weight lam, mu;
    std::vector<FMonomial> basis;
    Mat<LaurentPoly> entries;
    bool lattice_ok = true;
};

enum class DecompMode { Full, PlusOnly };

struct DecompResult {
    std::vector<Weight> order;           // Lambda+ in descending enumeration order
    Eigen::MatrixXi d;                   // d(row lam, col mu)
    std::vector<std::vector<int>> block_classes; // indices into order
    bool exact = true;                   // false once any lattice check failed
};

// The full pipeline over one lattice (compositions of n into m parts with
// weakly decreasing blocks of length block_len marking Lambda+): Gram
// assembly is symbolic and cached; specializations reuse it.
class Pipeline {
public:
    Pipeline(std::shared_ptr<EtaProvider> provider, int n, int m, int block_len);

    static Pipeline cyclotomic(int n, int r);
    static Pipeline type_a(int n, int m);

    const Engine& engine() const { return engine_; }
    const std::vector<Weight>& lattice() const { return lattice_; }
    const std::vector<Weight>& lambda_plus() const { return plus_; }

    // Cached symbolic Gram of Delta(lam)_mu; optional forced basis (only
    // honored on first computation for the pair).
    const GramMatrix& gram(const Weight& lam, const Weight& mu,
                           const std::vector<FMonomial>* forced = nullptr);

    // Fills the Gram cache for all (lambda+, lattice) pairs using worker
    // threads with private engines; the eta table is warmed first so the
    // shared provider is read-only during the parallel phase.
    void warm_gram_parallel(int jobs);

    int generic_dim(const Weight& lam, const Weight& mu); // dim Delta(lam)_mu

    // Decomposition numbers over cfg; cfg == nullptr runs symbolically over
    // the fraction field (generic coranks).
    DecompResult decomposition_matrix(const FieldConfig* cfg, DecompMode mode);

    // dim L(mu)_nu for all nu in the lattice, by the direct rank formula.
    std::map<std::vector<int>, int> simple_dims(const Weight& mu, const FieldConfig* cfg);

private:
    int corank_at(const GramMatrix& g, const FieldConfig* cfg);

    std::shared_ptr<EtaProvider> provider_;
    Engine engine_;
    int n_, m_, block_len_;
    std::vector<Weight> lattice_;
    std::vector<Weight> plus_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, GramMatrix> gram_cache_;
};

// Connected components of "share a nonzero column" on the decomposition
// matrix; returned as sorted index classes.
std::vector<std::vector<int>> linkage_classes(const Eigen::MatrixXi& d);

} // namespace qschur
