#include "qschur/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "qschur/errors.hpp"

namespace qschur {

Pipeline::Pipeline(std::shared_ptr<EtaProvider> provider, int n, int m, int block_len)
    : provider_(std::move(provider)), engine_(provider_.get()), n_(n), m_(m),
      block_len_(block_len) {
    lattice_ = enumerate_compositions(n_, m_);
    for (const auto& w : lattice_) {
        if (is_r_partition(w, block_len_, m_ / block_len_)) plus_.push_back(w);
    }
}

Pipeline Pipeline::cyclotomic(int n, int r) {
    auto data = std::make_shared<SchurData>(n, r);
    return Pipeline(std::make_shared<CyclotomicProvider>(std::move(data)), n, n * r, n);
}

Pipeline Pipeline::type_a(int n, int m) {
    return Pipeline(std::make_shared<TypeAProvider>(m), n, m, m);
}

const GramMatrix& Pipeline::gram(const Weight& lam, const Weight& mu,
                                 const std::vector<FMonomial>* forced) {
    auto key = std::make_pair(lam.bar, mu.bar);
    auto hit = gram_cache_.find(key);
    if (hit != gram_cache_.end()) return hit->second;

    GramMatrix g;
    g.lam = lam;
    g.mu = mu;
    BasisSelection sel = select_basis(engine_, lam, mu, forced);
    g.basis = std::move(sel.basis);
    g.lattice_ok = sel.lattice_ok;
    const int d = int(g.basis.size());
    g.entries.resize(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            Fraction v = engine_.pair(g.basis[size_t(i)], g.basis[size_t(j)], lam);
            auto a = v.as_coefficient_ring_element();
            if (!a) throw not_a_cleared("Gram entry outside A: " + v.str());
            g.entries(i, j) = *a;
            g.entries(j, i) = *a;
        }
    }
    return gram_cache_.emplace(std::move(key), std::move(g)).first->second;
}

int Pipeline::generic_dim(const Weight& lam, const Weight& mu) {
    return int(gram(lam, mu).basis.size());
}

void Pipeline::warm_gram_parallel(int jobs) {
    // Warm the eta table single-threaded; afterwards the provider serves
    // concurrent reads only.
    for (const auto& lam : lattice_) {
        for (int p = 1; p < m_; ++p) provider_->eta(lam, p);
    }
    std::vector<std::pair<Weight, Weight>> tasks;
    for (const auto& lam : plus_) {
        for (const auto& mu : lattice_) {
            if (lam != mu && !ge(lam, mu)) continue;
            if (gram_cache_.count({lam.bar, mu.bar})) continue;
            tasks.emplace_back(lam, mu);
        }
    }
    std::vector<GramMatrix> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        Engine eng(provider_.get());
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const auto& [lam, mu] = tasks[i];
            GramMatrix g;
            g.lam = lam;
            g.mu = mu;
            BasisSelection sel = select_basis(eng, lam, mu, nullptr);
            g.basis = std::move(sel.basis);
            g.lattice_ok = sel.lattice_ok;
            const int d = int(g.basis.size());
            g.entries.resize(d, d);
            for (int i2 = 0; i2 < d; ++i2) {
                for (int j = 0; j <= i2; ++j) {
                    Fraction v = eng.pair(g.basis[size_t(i2)], g.basis[size_t(j)], lam);
                    auto a = v.as_coefficient_ring_element();
                    if (!a) throw not_a_cleared("Gram entry outside A: " + v.str());
                    g.entries(i2, j) = *a;
                    g.entries(j, i2) = *a;
                }
            }
            results[i] = std::move(g);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < tasks.size(); ++i) {
        gram_cache_.emplace(std::make_pair(tasks[i].first.bar, tasks[i].second.bar),
                            std::move(results[i]));
    }
}

int Pipeline::corank_at(const GramMatrix& g, const FieldConfig* cfg) {
    const int d = int(g.entries.rows());
    if (d == 0) return 0;
    if (!cfg) {
        Mat<Fraction> m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = Fraction(g.entries(i, j));
        return d - rank_generic(m);
    }
    Mat<FieldElem> m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = specialize(g.entries(i, j), *cfg);
    return corank(std::move(m));
}

DecompResult Pipeline::decomposition_matrix(const FieldConfig* cfg, DecompMode mode) {
    DecompResult out;
    out.order = plus_;
    const int z = int(plus_.size());
    out.d = Eigen::MatrixXi::Zero(z, z);

    // Indices ascend dominance from the END of the enumeration order, so we
    // process lambda from last to first.
    auto dominates = [&](int a, int b) {
        return a != b && ge(plus_[size_t(a)], plus_[size_t(b)]);
    };

    // dim L(mu)_nu tables, filled inductively (mu index -> per-lattice-nu).
    std::vector<std::map<std::vector<int>, int>> dimL(static_cast<size_t>(z), std::map<std::vector<int>, int>{});

    for (int li = z - 1; li >= 0; --li) {
        const Weight& lam = plus_[size_t(li)];
        out.d(li, li) = 1;
        // d_{lam,nu} descending in nu: nu just below lam first.
        for (int ni = li + 1; ni < z; ++ni) {
            const Weight& nu = plus_[size_t(ni)];
            if (!dominates(li, ni)) continue;
            const GramMatrix& g = gram(lam, nu);
            if (!g.lattice_ok) out.exact = false;
            int rad = corank_at(g, cfg);
            int between = 0;
            for (int mi = li + 1; mi < ni; ++mi) {
                if (out.d(li, mi) == 0) continue;
                auto it = dimL[size_t(mi)].find(nu.bar);
                int dl = it == dimL[size_t(mi)].end() ? 0 : it->second;
                between += out.d(li, mi) * dl;
            }
            int dval = rad - between;
            if (dval < 0)
                throw negative_multiplicity("negative decomposition number at " +
                                            lam.str_flat() + " / " + nu.str_flat());
            out.d(li, ni) = dval;
        }
        // dim L(lam)_nu for every lattice weight nu.
        for (const auto& nu : lattice_) {
            if (lam != nu && !ge(lam, nu)) continue;
            const GramMatrix& g = gram(lam, nu);
            if (!g.lattice_ok) out.exact = false;
            int dim_delta = int(g.basis.size());
            if (dim_delta == 0) continue;
            int dl;
            if (mode == DecompMode::Full) {
                dl = dim_delta - corank_at(g, cfg);
            } else {
                int lower = 0;
                for (int mi = li + 1; mi < z; ++mi) {
                    if (out.d(li, mi) == 0) continue;
                    auto it = dimL[size_t(mi)].find(nu.bar);
                    if (it != dimL[size_t(mi)].end()) lower += out.d(li, mi) * it->second;
                }
                dl = dim_delta - lower;
            }
            if (dl < 0)
                throw negative_multiplicity("negative simple dimension at " + lam.str_flat());
            if (dl > 0) dimL[size_t(li)][nu.bar] = dl;
        }
    }

    out.block_classes = linkage_classes(out.d);
    return out;
}

std::map<std::vector<int>, int> Pipeline::simple_dims(const Weight& mu, const FieldConfig* cfg) {
    std::map<std::vector<int>, int> out;
    for (const auto& nu : lattice_) {
        if (mu != nu && !ge(mu, nu)) continue;
        const GramMatrix& g = gram(mu, nu);
        int dim = int(g.basis.size());
        if (dim == 0) continue;
        int dl = dim - corank_at(g, cfg);
        if (dl > 0) out[nu.bar] = dl;
    }
    return out;
}

std::vector<std::vector<int>> linkage_classes(const Eigen::MatrixXi& d) {
    const int z = int(d.rows());
    std::vector<int> parent(static_cast<size_t>(z), 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[size_t(find(a))] = find(b); };
    for (int col = 0; col < z; ++col) {
        int first = -1;
        for (int row = 0; row < z; ++row) {
            if (d(row, col) == 0) continue;
            if (first < 0) {
                first = row;
            } else {
                unite(row, first);
            }
        }
        if (first >= 0) unite(col, first); // d_{col,col} = 1 links the column label
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < z; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qschur
