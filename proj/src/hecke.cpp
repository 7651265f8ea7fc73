#include "qschur/hecke.hpp"

#include <sstream>

#include "qschur/errors.hpp"

namespace qschur {

void HeckeElem::add(const HSym& s, const Fraction& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElem HeckeElem::operator+(const HeckeElem& o) const {
    HeckeElem e = *this;
    e += o;
    return e;
}

HeckeElem HeckeElem::operator-(const HeckeElem& o) const {
    HeckeElem e = *this;
    e -= o;
    return e;
}

HeckeElem HeckeElem::operator-() const {
    HeckeElem e(alg_);
    for (const auto& [s, c] : terms_) e.terms_.emplace(s, -c);
    return e;
}

HeckeElem HeckeElem::operator*(const Fraction& c) const {
    HeckeElem e(alg_);
    if (c.is_zero()) return e;
    for (const auto& [s, cc] : terms_) e.terms_.emplace(s, cc * c);
    return e;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

std::string HeckeElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*";
        bool any = false;
        for (size_t j = 0; j < s.c.size(); ++j) {
            if (s.c[j] > 0) {
                os << "L" << (j + 1);
                if (s.c[j] > 1) os << "^" << int(s.c[j]);
                any = true;
            }
        }
        Perm w{std::vector<int>(s.w)};
        if (!w.is_identity()) {
            os << "T" << w.str();
            any = true;
        }
        if (!any) os << "1";
    }
    return os.str();
}

Hecke::Hecke(int n, int r) : n_(n), r_(r) {
    // (L_1 - Q_1)...(L_1 - Q_r) = 0 expanded: L_1^r = sum_j red[j] L_1^j with
    // red[j] = (-1)^{r-1-j} e_{r-j}(Q).
    // Elementary symmetric polynomials in Q_1..Q_r.
    std::vector<LaurentPoly> e(size_t(r) + 1, LaurentPoly(r));
    e[0] = LaurentPoly::constant(r, 1);
    for (int k = 1; k <= r; ++k) {
        for (int t = std::min(k, r); t >= 1; --t) {
            e[size_t(t)] += e[size_t(t - 1)] * LaurentPoly::variable_Q(r, k);
        }
    }
    lpow_reduction_.resize(size_t(r));
    for (int j = 0; j < r; ++j) {
        LaurentPoly c = e[size_t(r - j)];
        if ((r - 1 - j) % 2 == 1) c = -c;
        lpow_reduction_[size_t(j)] = c;
    }
}

HeckeElem Hecke::one() const {
    HSym s{std::vector<uint8_t>(size_t(n_), 0), Perm::identity(n_).one_line()};
    return from_symbol(s, Fraction::one(r_));
}

HeckeElem Hecke::from_symbol(const HSym& s, const Fraction& c) const {
    HeckeElem e(this);
    e.add(s, c);
    return e;
}

HeckeElem Hecke::T(const Perm& w) const {
    HSym s{std::vector<uint8_t>(size_t(n_), 0), w.one_line()};
    return from_symbol(s, Fraction::one(r_));
}

HeckeElem Hecke::Tgen(int i) const {
    if (i == 0) return L(1);
    return T(Perm::s(i, n_));
}

HeckeElem Hecke::L(int j) const {
    if (j < 1 || j > n_) throw internal_error("L index out of range");
    if (r_ == 1) {
        // (T_0 - Q_1) = 0 collapses L_1 to the scalar Q_1; higher L_j come
        // from the recursion L_j = T_{j-1} L_{j-1} T_{j-1}.
        HeckeElem acc = one() * Fraction(LaurentPoly::variable_Q(1, 1));
        for (int t = 2; t <= j; ++t) {
            acc = mul(Tgen(t - 1), mul(acc, Tgen(t - 1)));
        }
        return acc;
    }
    std::vector<uint8_t> c(size_t(n_), 0);
    c[size_t(j - 1)] = 1;
    HSym s{std::move(c), Perm::identity(n_).one_line()};
    return from_symbol(s, Fraction::one(r_));
}

HeckeElem Hecke::x_sum(const Weight& comp) const {
    HeckeElem e = zero();
    for (const auto& w : young_subgroup(comp)) {
        e += T(w) * Fraction(q_pow(w.length()));
    }
    return e;
}

HeckeElem Hecke::u_plus(const Weight& mu) const {
    HeckeElem acc = one();
    int a = 0;
    for (int k = 1; k <= r_; ++k) {
        // a_k = |mu^(1)| + ... + |mu^(k-1)|
        if (k > 1) {
            for (int i = 1; i <= n_; ++i) a += mu.at((k - 2) * n_ + i);
        }
        for (int i = 1; i <= a; ++i) {
            acc = mul(acc, L(i) - one() * Fraction(Q(k)));
        }
    }
    return acc;
}

const HeckeElem& Hecke::m(const Weight& mu) const {
    auto it = m_cache_.find(mu.bar);
    if (it != m_cache_.end()) return it->second;
    HeckeElem val = mul(x_sum(mu), u_plus(mu));
    return m_cache_.emplace(mu.bar, std::move(val)).first->second;
}

HeckeElem Hecke::lmul_gen(int i, const HeckeElem& x) const {
    HeckeElem out(this);
    const Fraction qmqi{q_pow(1) - q_pow(-1)};
    for (const auto& [sym, coeff] : x.terms()) {
        if (i == 0) {
            // L_1 * sym: raise c_1, reduce via the characteristic relation.
            int c1 = sym.c[0] + 1;
            if (c1 < r_) {
                HSym s2 = sym;
                s2.c[0] = uint8_t(c1);
                out.add(s2, coeff);
            } else {
                for (int j = 0; j < r_; ++j) {
                    if (lpow_reduction_[size_t(j)].is_zero()) continue;
                    HSym s2 = sym;
                    s2.c[0] = uint8_t(j);
                    out.add(s2, coeff * Fraction(lpow_reduction_[size_t(j)]));
                }
            }
            continue;
        }
        // T_i * L^c T_w: push T_i through the L-block at slots i, i+1, then
        // fold into T_w by the length rule.
        const int a_full = sym.c[size_t(i - 1)];
        const int b_full = sym.c[size_t(i)];
        const int common = std::min(a_full, b_full); // T_i commutes with (L_i L_{i+1})^common
        const int a = a_full - common;
        const int b = b_full - common;

        // Expansion of T_i L_i^a L_{i+1}^b (one of a, b is zero) as terms
        // (x_exp, y_exp, trailing_Ti, coeff).
        struct Piece {
            int x, y;
            bool has_t;
            Fraction c;
        };
        std::vector<Piece> pieces;
        if (a == 0 && b == 0) {
            pieces.push_back({0, 0, true, Fraction::one(r_)});
        } else if (a > 0) {
            pieces.push_back({0, a, true, Fraction::one(r_)});
            for (int t = 1; t <= a; ++t) pieces.push_back({a - t, t, false, -qmqi});
        } else {
            pieces.push_back({b, 0, true, Fraction::one(r_)});
            for (int t = 1; t <= b; ++t) pieces.push_back({b - t, t, false, qmqi});
        }

        Perm w{std::vector<int>(sym.w)};
        for (const auto& pc : pieces) {
            HSym s2 = sym;
            s2.c[size_t(i - 1)] = uint8_t(pc.x + common);
            s2.c[size_t(i)] = uint8_t(pc.y + common);
            Fraction cc = coeff * pc.c;
            if (!pc.has_t) {
                out.add(s2, cc);
                continue;
            }
            Perm siw = Perm::s(i, n_) * w;
            if (siw.length() > w.length()) {
                s2.w = siw.one_line();
                out.add(s2, cc);
            } else {
                HSym s3 = s2;
                s3.w = siw.one_line();
                out.add(s3, cc);
                out.add(s2, cc * qmqi);
            }
        }
    }
    return out;
}

HeckeElem Hecke::mul(const HeckeElem& a, const HeckeElem& b) const {
    HeckeElem out(this);
    for (const auto& [sym, coeff] : a.terms()) {
        // Generator word of the symbol, leftmost factor first:
        // L_1^{c_1} ... L_n^{c_n} T_w with L_j = T_{j-1}...T_1 T_0 T_1...T_{j-1}.
        std::vector<int> word;
        for (int j = 1; j <= n_; ++j) {
            for (int rep = 0; rep < sym.c[size_t(j - 1)]; ++rep) {
                for (int t = j - 1; t >= 1; --t) word.push_back(t);
                word.push_back(0);
                for (int t = 1; t <= j - 1; ++t) word.push_back(t);
            }
        }
        Perm w{std::vector<int>(sym.w)};
        for (int t : w.reduced_word()) word.push_back(t);

        HeckeElem acc = b;
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = lmul_gen(*it, acc);
        out += acc * coeff;
    }
    return out;
}

HeckeElem Hecke::star(const HeckeElem& a) const {
    HeckeElem out(this);
    for (const auto& [sym, coeff] : a.terms()) {
        // (L^c T_w)* = T_{w^-1} L^c.
        HSym lpart{sym.c, Perm::identity(n_).one_line()};
        HeckeElem acc = from_symbol(lpart, coeff);
        Perm winv = Perm{std::vector<int>(sym.w)}.inverse();
        auto word = winv.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = lmul_gen(*it, acc);
        out += acc;
    }
    return out;
}

HeckeElem Hecke::l_sum_right(const Weight& mu, int flat_pos) const {
    int cnt = mu.at(flat_pos);
    if (cnt == 0) return zero();
    int N = 0;
    for (int j = 1; j < flat_pos; ++j) N += mu.at(j);
    HeckeElem lsum = zero();
    for (int j = N + 1; j <= N + cnt; ++j) lsum += L(j);
    return mul(m(mu), lsum);
}

} // namespace qschur
