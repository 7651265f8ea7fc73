#include <random>

#include "doctest.h"
#include "qschur/hecke.hpp"

using namespace qschur;

namespace {

Fraction FP(const Hecke& h, const std::string& s) {
    return Fraction(LaurentPoly::parse(s, h.nq()));
}

HeckeElem random_elem(const Hecke& h, std::mt19937& rng, int nterms) {
    std::uniform_int_distribution<int> cdist(0, h.r() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> qe(-1, 1);
    std::vector<int> line(size_t(h.n()));
    std::iota(line.begin(), line.end(), 1);
    HeckeElem e = h.zero();
    for (int t = 0; t < nterms; ++t) {
        HSym s;
        s.c.resize(size_t(h.n()));
        for (auto& x : s.c) x = uint8_t(cdist(rng));
        std::shuffle(line.begin(), line.end(), rng);
        s.w = line;
        int c = coef(rng);
        if (c == 0) c = 1;
        e.add(s, Fraction(LaurentPoly::q_power(h.r(), qe(rng), c)));
    }
    return e;
}

} // namespace

TEST_CASE("generator relations") {
    Hecke h(2, 2);
    // T_i T_i = (q - q^-1) T_i + 1
    HeckeElem t1 = h.Tgen(1);
    CHECK(h.mul(t1, t1) == t1 * FP(h, "q - q^-1") + h.one());
    // T_0 T_0 = (Q1 + Q2) T_0 - Q1 Q2
    HeckeElem t0 = h.Tgen(0);
    CHECK(h.mul(t0, t0) == t0 * FP(h, "Q1 + Q2") - h.one() * FP(h, "Q1*Q2"));
    // L_2 T_1 = (q - q^-1) L_2 + T_1 L_1
    HeckeElem l2 = h.L(2);
    CHECK(h.mul(l2, t1) == l2 * FP(h, "q - q^-1") + h.mul(t1, h.L(1)));
    // T_1 L_2 = (q - q^-1) L_2 + L_1 T_1
    CHECK(h.mul(t1, l2) == l2 * FP(h, "q - q^-1") + h.mul(h.L(1), t1));
}

TEST_CASE("braid relation and L commutation") {
    for (auto [n, r] : {std::pair{3, 2}, std::pair{3, 3}}) {
        Hecke h(n, r);
        HeckeElem t0 = h.Tgen(0), t1 = h.Tgen(1), t2 = h.Tgen(2);
        CHECK(h.mul(h.mul(h.mul(t0, t1), t0), t1) == h.mul(h.mul(h.mul(t1, t0), t1), t0));
        CHECK(h.mul(h.mul(t1, t2), t1) == h.mul(h.mul(t2, t1), t2));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                CHECK(h.mul(h.L(i), h.L(j)) == h.mul(h.L(j), h.L(i)));
            }
        }
    }
}

TEST_CASE("associativity on random sparse triples") {
    std::mt19937 rng(3);
    for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}}) {
        Hecke h(n, r);
        int trials = (n == 2) ? 120 : 80;
        for (int t = 0; t < trials; ++t) {
            HeckeElem a = random_elem(h, rng, 2);
            HeckeElem b = random_elem(h, rng, 2);
            HeckeElem c = random_elem(h, rng, 2);
            CHECK(h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)));
        }
    }
}

TEST_CASE("products stay inside the basis") {
    std::mt19937 rng(5);
    Hecke h(3, 2);
    for (int t = 0; t < 40; ++t) {
        HeckeElem p = h.mul(random_elem(h, rng, 2), random_elem(h, rng, 2));
        for (const auto& [s, c] : p.terms()) {
            for (auto e : s.c) CHECK(int(e) < h.r());
            std::vector<int> sorted = s.w;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < h.n(); ++i) CHECK(sorted[size_t(i)] == i + 1);
        }
    }
    // r^n n! possible symbols in total for (3,2): 48.
    CHECK(h.mul(h.m(Weight({1, 1, 1, 0, 0, 0})), h.m(Weight({0, 0, 0, 1, 1, 1}))).term_count() <= 48);
}

TEST_CASE("star anti-automorphism") {
    Hecke h(2, 2);
    HeckeElem t0 = h.Tgen(0), t1 = h.Tgen(1);
    CHECK(h.star(h.mul(t1, t0)) == h.mul(t0, t1));
    CHECK(h.star(h.one()) == h.one());
    for (const auto& mu : enumerate_weights(2, 2)) {
        CHECK(h.star(h.m(mu)) == h.m(mu));
    }
    std::mt19937 rng(9);
    for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}}) {
        Hecke hh(n, r);
        for (int t = 0; t < 30; ++t) {
            HeckeElem a = random_elem(hh, rng, 2);
            HeckeElem b = random_elem(hh, rng, 2);
            CHECK(hh.star(hh.star(a)) == a);
            CHECK(hh.star(hh.mul(a, b)) == hh.mul(hh.star(b), hh.star(a)));
        }
    }
}

TEST_CASE("m_mu examples") {
    Hecke h(2, 2);
    auto ws = enumerate_weights(2, 2);
    HeckeElem u = h.mul(h.L(1) - h.one() * FP(h, "Q2"), h.L(2) - h.one() * FP(h, "Q2"));
    CHECK(h.m(ws[1]) == u);
    CHECK(h.m(ws[0]) == h.mul(h.one() + h.Tgen(1) * FP(h, "q"), u));

    Hecke h1(2, 1);
    CHECK(h1.m(Weight({1, 1})) == h1.one());
}

TEST_CASE("l_sum_right examples") {
    Hecke h(2, 2);
    auto ws = enumerate_weights(2, 2);
    // mu = lambda<1>, pos (2,1): m L_2 = Q1((q - q^-1) m T_1 + m).
    HeckeElem lhs = h.l_sum_right(ws[1], 2);
    HeckeElem m1 = h.m(ws[1]);
    HeckeElem rhs = (h.mul(m1, h.Tgen(1)) * FP(h, "q - q^-1") + m1) * FP(h, "Q1");
    CHECK(lhs == rhs);
    // Zero entry.
    CHECK(h.l_sum_right(ws[1], 3).is_zero());
    // mu = lambda<0>, pos (1,1): m (L_1 + L_2).
    CHECK(h.l_sum_right(ws[0], 1) == h.mul(h.m(ws[0]), h.L(1) + h.L(2)));
}

TEST_CASE("internal L-word identities") {
    // (6.11.5)-style: L_N T_{N-1}...T_{N-c} = (q - q^-1) sum_xi
    // T_{N-1}...(drop T_{N-xi})...T_{N-c} L_{N-xi+1} + T_{N-1}...T_{N-c} L_{N-c}.
    Hecke h(3, 2);
    auto tprod = [&](const std::vector<int>& idx) {
        HeckeElem acc = h.one();
        for (int i : idx) acc = h.mul(acc, h.Tgen(i));
        return acc;
    };
    for (int N = 2; N <= 3; ++N) {
        for (int c = 1; c <= N - 1; ++c) {
            std::vector<int> idx;
            for (int t = 1; t <= c; ++t) idx.push_back(N - t);
            HeckeElem lhs = h.mul(h.L(N), tprod(idx));
            HeckeElem rhs = h.mul(tprod(idx), h.L(N - c));
            for (int xi = 1; xi <= c; ++xi) {
                std::vector<int> dropped;
                for (int t = 1; t <= c; ++t) {
                    if (t != xi) dropped.push_back(N - t);
                }
                rhs += h.mul(tprod(dropped), h.L(N - xi + 1)) * FP(h, "q - q^-1");
            }
            CHECK(lhs == rhs);
        }
    }
    // (6.11.8)-style: L_{N+1} T_{N+1}...T_{N+c} expands over subsets with
    // (q^-1 - q) powers, ending in L_{N+c+1}.
    for (int N = 0; N <= 1; ++N) {
        for (int c = 1; N + c + 1 <= 3; ++c) {
            std::vector<int> idx;
            for (int t = 1; t <= c; ++t) idx.push_back(N + t);
            HeckeElem lhs = h.mul(h.L(N + 1), tprod(idx));
            HeckeElem sum = h.zero();
            for (int mask = 0; mask < (1 << c); ++mask) {
                std::vector<int> subset;
                for (int t = 1; t <= c; ++t) {
                    if (mask & (1 << (t - 1))) subset.push_back(N + t);
                }
                int xi = int(subset.size());
                LaurentPoly coef = LaurentPoly::constant(h.nq(), 1);
                for (int p = 0; p < c - xi; ++p) {
                    coef *= LaurentPoly::parse("q^-1 - q", h.nq());
                }
                sum += tprod(subset) * Fraction(coef);
            }
            CHECK(lhs == h.mul(sum, h.L(N + c + 1)));
        }
    }
}
