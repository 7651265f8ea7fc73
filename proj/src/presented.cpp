#include "qschur/presented.hpp"

#include <algorithm>
#include <sstream>

#include "qschur/errors.hpp"
#include "qschur/linalg.hpp"

namespace qschur {

std::vector<int> FMonomial::plain() const {
    std::vector<int> out;
    for (const auto& [p, c] : letters) {
        for (int t = 0; t < c; ++t) out.push_back(p);
    }
    return out;
}

int FMonomial::degree() const {
    int d = 0;
    for (const auto& [p, c] : letters) d += c;
    return d;
}

FMonomial FMonomial::from_plain(const std::vector<int>& word) {
    FMonomial m;
    for (int p : word) {
        if (!m.letters.empty() && m.letters.back().first == p) {
            m.letters.back().second++;
        } else {
            m.letters.emplace_back(p, 1);
        }
    }
    return m;
}

std::string FMonomial::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (const auto& [p, c] : letters) {
        os << "F" << p;
        if (c > 1) os << "^(" << c << ")";
        os << " ";
    }
    std::string s = os.str();
    s.pop_back();
    return s;
}

void FormalVector::add(const std::vector<int>& s, const Fraction& c) {
    if (c.is_zero()) return;
    auto it = terms.find(s);
    if (it == terms.end()) {
        terms.emplace(s, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

namespace {

// Weight of the string s anchored at lam (all letters subtract a root).
Weight string_weight(const Weight& lam, const std::vector<int>& s) {
    Weight w = lam;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        auto n = shift(w, *it, -1);
        if (!n) throw internal_error("stored string with invalid path");
        w = *n;
    }
    return w;
}

} // namespace

const EtaExpr& TypeAProvider::eta(const Weight& lam, int flat_pos) const {
    auto key = std::make_pair(lam.bar, flat_pos);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    EtaExpr e{Fraction(quantum_int(lam.at(flat_pos) - lam.at(flat_pos + 1), 0)), {}};
    return cache_.emplace(key, std::move(e)).first->second;
}

const EtaExpr& TableProvider::eta(const Weight& lam, int flat_pos) const {
    auto it = table_.find({lam.bar, flat_pos});
    if (it == table_.end()) throw internal_error("eta table miss");
    return it->second;
}

FormalVector Engine::apply_F(const FormalVector& v, int flat_pos) const {
    FormalVector out{v.anchor, {}};
    for (const auto& [s, c] : v.terms) {
        Weight w = string_weight(v.anchor, s);
        if (!shift(w, flat_pos, -1)) continue;
        std::vector<int> s2;
        s2.reserve(s.size() + 1);
        s2.push_back(flat_pos);
        s2.insert(s2.end(), s.begin(), s.end());
        out.add(s2, c);
    }
    return out;
}

const FormalVector& Engine::e_on_string(const Weight& anchor, const std::vector<int>& s,
                                        int flat_pos, long fuel) const {
    if (fuel <= 0) throw internal_error("apply_E fuel exhausted");
    peak_fuel_ = std::max(peak_fuel_, fuel);
    auto key = std::make_tuple(anchor.bar, s, flat_pos);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    const int nq = provider_->num_q_vars();
    FormalVector out{anchor, {}};
    if (!s.empty()) {
        const int b = s.front();
        std::vector<int> rest(s.begin() + 1, s.end());
        // E_a (F_b rest) = F_b (E_a rest) + delta_{ab} eta^{wt(rest)} rest.
        FormalVector inner{anchor, {}};
        inner.terms.emplace(rest, Fraction::one(nq));
        FormalVector e_rest = e_on_string(anchor, rest, flat_pos, fuel - 1);
        FormalVector shifted = apply_F(e_rest, b);
        for (const auto& [t, c] : shifted.terms) out.add(t, c);
        if (b == flat_pos) {
            Weight w = string_weight(anchor, rest);
            const EtaExpr& eta = provider_->eta(w, flat_pos);
            if (!eta.scalar.is_zero()) {
                out.add(rest, eta.scalar);
            }
            for (const auto& gw : eta.words) {
                // Apply the E-word right-to-left, then the F-word.
                FormalVector cur = inner;
                for (auto it = gw.e_word.rbegin(); it != gw.e_word.rend() && !cur.is_zero();
                     ++it) {
                    FormalVector next{anchor, {}};
                    for (const auto& [t, c] : cur.terms) {
                        const FormalVector& et = e_on_string(anchor, t, *it, fuel - 1);
                        for (const auto& [t2, c2] : et.terms) next.add(t2, c * c2);
                    }
                    cur = std::move(next);
                }
                for (auto it = gw.f_word.rbegin(); it != gw.f_word.rend() && !cur.is_zero();
                     ++it) {
                    cur = apply_F(cur, *it);
                }
                for (const auto& [t, c] : cur.terms) out.add(t, gw.coeff * c);
            }
        }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
}

FormalVector Engine::apply_E(const FormalVector& v, int flat_pos) const {
    FormalVector out{v.anchor, {}};
    for (const auto& [s, c] : v.terms) {
        // Depth bound: every recursive call works on a strictly shorter
        // string, through at most (string length) eta-word E-letters each.
        const long len = long(s.size());
        const long fuel = 16 + len * (len + 8);
        const FormalVector& es = e_on_string(v.anchor, s, flat_pos, fuel);
        for (const auto& [t, c2] : es.terms) out.add(t, c * c2);
    }
    return out;
}

FormalVector Engine::monomial_vector(const FMonomial& x, const Weight& lam) const {
    const int nq = provider_->num_q_vars();
    FormalVector v{lam, {}};
    // Validity of the whole path.
    std::vector<int> word = x.plain();
    Weight w = lam;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto s = shift(w, *it, -1);
        if (!s) return v;
        w = *s;
    }
    Fraction norm = Fraction::one(nq);
    for (const auto& [p, c] : x.letters) {
        norm /= Fraction(quantum_factorial(c, nq));
    }
    v.terms.emplace(std::move(word), norm);
    return v;
}

Fraction Engine::pair(const FMonomial& y, const FMonomial& x, const Weight& lam) const {
    const int nq = provider_->num_q_vars();
    if (y.degree() != x.degree()) return Fraction::zero(nq);
    FormalVector v = monomial_vector(x, lam);
    if (v.is_zero()) return Fraction::zero(nq);
    Fraction norm = Fraction::one(nq);
    for (const auto& [p, c] : y.letters) {
        norm /= Fraction(quantum_factorial(c, nq));
    }
    // iota(y): traverse y's letters left to right as E's.
    for (int p : y.plain()) {
        v = apply_E(v, p);
        if (v.is_zero()) return Fraction::zero(nq);
    }
    auto it = v.terms.find(std::vector<int>{});
    if (it == v.terms.end()) return Fraction::zero(nq);
    return it->second * norm;
}

std::vector<FMonomial> enumerate_xi(const Weight& lam, const Weight& mu) {
    std::vector<FMonomial> out;
    if (lam.parts() != mu.parts() || lam.sum() != mu.sum()) return out;
    try {
        if (!ge(lam, mu)) return out;
    } catch (const Error&) {
        return out;
    }
    // DFS over plain words, first-applied letter chosen last so the emitted
    // word (leftmost letter = last applied) is built left to right; sorted
    // lex at the end.
    std::vector<std::vector<int>> words;
    std::vector<int> rev;
    auto rec = [&](auto&& self, const Weight& cur) -> void {
        if (cur == mu) {
            words.emplace_back(rev.rbegin(), rev.rend());
            return;
        }
        // Remaining degree must stay expressible: cur must dominate mu.
        if (!ge(cur, mu)) return;
        for (int p = 1; p < cur.parts(); ++p) {
            auto s = shift(cur, p, -1);
            if (!s) continue;
            rev.push_back(p);
            self(self, *s);
            rev.pop_back();
        }
    };
    rec(rec, lam);
    std::sort(words.begin(), words.end());
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(FMonomial::from_plain(w));
    return out;
}

namespace {

Mat<Fraction> gram_of(const Engine& eng, const std::vector<FMonomial>& basis,
                      const Weight& lam) {
    Mat<Fraction> g(int(basis.size()), int(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            Fraction v = eng.pair(basis[i], basis[j], lam);
            g(int(i), int(j)) = v;
            g(int(j), int(i)) = v;
        }
    }
    return g;
}

bool lattice_coordinates_ok(const Engine& eng, const Weight& lam,
                            const std::vector<FMonomial>& basis,
                            const std::vector<FMonomial>& rest) {
    if (basis.empty()) return rest.empty();
    Mat<Fraction> g = gram_of(eng, basis, lam);
    for (const auto& xi : rest) {
        Vec<Fraction> b(int(basis.size()));
        for (size_t i = 0; i < basis.size(); ++i) b(int(i)) = eng.pair(basis[i], xi, lam);
        auto sol = solve_fraction_linear(g, b);
        if (!sol) return false;
        for (int i = 0; i < int(basis.size()); ++i) {
            if (!(*sol)(i).as_coefficient_ring_element().has_value()) return false;
        }
    }
    return true;
}

} // namespace

std::vector<CheckItem> verify_ef_power_identity(const Engine& eng, int n, int r) {
    const int nq = eng.provider()->num_q_vars();
    std::ostringstream ps;
    ps << "n=" << n << " r=" << r;
    CheckItem item{"7.10.1 E^a F^a scalar on interior positions", ps.str(), true};
    for (const auto& lam : enumerate_weights(n, r)) {
        for (int p = 1; p < n * r; ++p) {
            if (p % n == 0) continue; // boundary eta carries word parts
            for (int a = 1; a <= 2; ++a) {
                FormalVector v{lam, {}};
                v.terms.emplace(std::vector<int>{}, Fraction::one(nq));
                for (int t = 0; t < a; ++t) v = eng.apply_F(v, p);
                bool path_ok = !v.is_zero();
                for (int t = 0; t < a; ++t) v = eng.apply_E(v, p);
                if (!path_ok) {
                    if (!v.is_zero()) item.pass = false;
                    continue;
                }
                int d = lam.at(p) - lam.at(p + 1);
                LaurentPoly expect = quantum_factorial(a, nq);
                for (int j = 1; j <= a; ++j) expect *= quantum_int(d - a + j, nq);
                FormalVector want{lam, {}};
                want.add(std::vector<int>{}, Fraction(expect));
                if (!(v.terms == want.terms)) item.pass = false;
            }
        }
    }
    return {item};
}

BasisSelection select_basis(const Engine& eng, const Weight& lam, const Weight& mu,
                            const std::vector<FMonomial>* forced) {
    BasisSelection out;
    std::vector<FMonomial> xi = enumerate_xi(lam, mu);
    if (xi.empty()) {
        if (forced && !forced->empty())
            throw forced_set_dependent("forced basis at an empty weight space");
        return out;
    }

    if (forced) {
        // Verify: full generic rank and span agreement with Xi.
        Mat<Fraction> gf = gram_of(eng, *forced, lam);
        int rf = rank_generic(gf);
        if (rf != int(forced->size()))
            throw forced_set_dependent("forced basis has deficient generic Gram rank");
        Mat<Fraction> gx = gram_of(eng, xi, lam);
        if (rank_generic(gx) != rf)
            throw forced_set_dependent("forced basis does not span the weight space");
        out.basis = *forced;
        std::vector<FMonomial> rest;
        for (const auto& x : xi) {
            if (std::find(out.basis.begin(), out.basis.end(), x) == out.basis.end())
                rest.push_back(x);
        }
        out.lattice_ok = lattice_coordinates_ok(eng, lam, out.basis, rest);
        return out;
    }

    Mat<Fraction> gx = gram_of(eng, xi, lam);
    const int target_rank = rank_generic(gx);

    auto greedy = [&](const std::vector<int>& order) {
        std::vector<int> chosen;
        for (int idx : order) {
            if (int(chosen.size()) == target_rank) break;
            std::vector<int> trial = chosen;
            trial.push_back(idx);
            Mat<Fraction> sub(int(trial.size()), int(trial.size()));
            for (size_t i = 0; i < trial.size(); ++i)
                for (size_t j = 0; j < trial.size(); ++j)
                    sub(int(i), int(j)) = gx(trial[i], trial[j]);
            if (rank_generic(sub) == int(trial.size())) chosen = std::move(trial);
        }
        return chosen;
    };

    std::vector<int> natural(xi.size());
    for (size_t i = 0; i < xi.size(); ++i) natural[i] = int(i);
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<int> order = natural;
        if (attempt == 1) std::reverse(order.begin(), order.end());
        std::vector<int> chosen = greedy(order);
        std::vector<FMonomial> basis, rest;
        for (int idx : chosen) basis.push_back(xi[size_t(idx)]);
        for (size_t i = 0; i < xi.size(); ++i) {
            if (std::find(chosen.begin(), chosen.end(), int(i)) == chosen.end())
                rest.push_back(xi[i]);
        }
        if (lattice_coordinates_ok(eng, lam, basis, rest)) {
            out.basis = std::move(basis);
            out.lattice_ok = true;
            return out;
        }
        if (attempt == 1) {
            out.basis = std::move(basis);
            out.lattice_ok = false;
        }
    }
    return out;
}

} // namespace qschur
