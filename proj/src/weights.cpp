#include "qschur/weights.hpp"

#include <numeric>
#include <sstream>

#include "qschur/errors.hpp"

namespace qschur {

int Weight::sum() const { return std::accumulate(bar.begin(), bar.end(), 0); }

std::string Weight::str(int n, int r) const {
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < r; ++k) {
        if (k) os << ",";
        os << "(";
        for (int i = 0; i < n; ++i) {
            if (i) os << ",";
            os << bar[size_t(k * n + i)];
        }
        os << ")";
    }
    os << ")";
    return os.str();
}

std::string Weight::str_flat() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < bar.size(); ++i) {
        if (i) os << ",";
        os << bar[i];
    }
    os << ")";
    return os.str();
}

std::vector<Weight> enumerate_compositions(int n, int m) {
    std::vector<Weight> out;
    std::vector<int> cur(size_t(m), 0);
    // Descending lex: fill position 0 with the largest remainder first.
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == m - 1) {
            cur[size_t(pos)] = rest;
            out.emplace_back(cur);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[size_t(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (m >= 1) rec(rec, 0, n);
    return out;
}

std::vector<Weight> enumerate_weights(int n, int r) { return enumerate_compositions(n, n * r); }

bool is_r_partition(const Weight& w, int n, int r) {
    for (int k = 0; k < r; ++k) {
        for (int i = 0; i + 1 < n; ++i) {
            if (w.bar[size_t(k * n + i)] < w.bar[size_t(k * n + i + 1)]) return false;
        }
    }
    return true;
}

bool ge(const Weight& a, const Weight& b) {
    if (a.sum() != b.sum() || a.parts() != b.parts())
        throw size_mismatch("dominance comparison of weights of different size");
    int acc = 0;
    for (size_t i = 0; i < a.bar.size(); ++i) {
        acc += a.bar[i] - b.bar[i];
        if (acc < 0) return false;
    }
    return true;
}

std::optional<Weight> shift(const Weight& w, int flat_pos, int sign) {
    if (flat_pos < 1 || flat_pos >= w.parts())
        throw shift_out_of_range("shift position out of range");
    Weight out = w;
    out.bar[size_t(flat_pos - 1)] += sign;
    out.bar[size_t(flat_pos)] -= sign;
    if (out.bar[size_t(flat_pos - 1)] < 0 || out.bar[size_t(flat_pos)] < 0) return std::nullopt;
    return out;
}

std::optional<Weight> shift(const Weight& w, Position pos, int sign, int n) {
    return shift(w, flat_of(pos, n), sign);
}

} // namespace qschur
