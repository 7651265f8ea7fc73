#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qschur {

// A multicomposition, stored flat through the bar map: bar[p-1] = lambda_i^(k)
// with p = (k-1)n + i. Flat storage also covers the r = 1 lattices with an
// arbitrary number of parts.
struct Weight {
    std::vector<int> bar;

    Weight() = default;
    explicit Weight(std::vector<int> b) : bar(std::move(b)) {}

    int sum() const;
    int parts() const { return int(bar.size()); }
    int at(int p) const { return bar[size_t(p - 1)]; } // 1-based flat index

    bool operator==(const Weight& o) const { return bar == o.bar; }
    bool operator!=(const Weight& o) const { return bar != o.bar; }
    bool operator<(const Weight& o) const { return bar < o.bar; } // container order only

    // "((2,0),(0,0))" under an (n, r) block structure.
    std::string str(int n, int r) const;
    std::string str_flat() const;
};

struct Position {
    int i = 1, k = 1;

    bool operator==(const Position& o) const { return i == o.i && k == o.k; }
};

inline int flat_of(Position pos, int n) { return (pos.k - 1) * n + pos.i; }
inline Position position_of(int flat, int n) {
    return Position{(flat - 1) % n + 1, (flat - 1) / n + 1};
}

// All of Lambda_{n,r} (compositions of n into n*r parts), in descending
// lexicographic order on bar; for (2,2) this is the labelling
// lambda<0>, ..., lambda<9>.
std::vector<Weight> enumerate_weights(int n, int r);

// Compositions of n into m parts, same order; the r = 1 lattice with m columns.
std::vector<Weight> enumerate_compositions(int n, int m);

bool is_r_partition(const Weight& w, int n, int r);

// Dominance: every prefix sum of bar(a) - bar(b) is >= 0. SizeMismatch when
// the sizes differ.
bool ge(const Weight& a, const Weight& b);

// w +- alpha_p (entry p up/down by sign, entry p+1 the other way), or nullopt
// when an entry would go negative. The (n+1,k) = (1,k+1) boundary convention
// is automatic in flat indexing.
std::optional<Weight> shift(const Weight& w, int flat_pos, int sign);
std::optional<Weight> shift(const Weight& w, Position pos, int sign, int n);

} // namespace qschur
