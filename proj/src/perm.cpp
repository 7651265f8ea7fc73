#include "qschur/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qschur/errors.hpp"

namespace qschur {

namespace {

int inversions(const std::vector<int>& img) {
    int inv = 0;
    for (size_t i = 0; i < img.size(); ++i)
        for (size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
    return inv;
}

} // namespace

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)), len_(inversions(img_)) {}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::s(int i, int n) {
    if (i < 1 || i >= n) throw internal_error("transposition index out of range");
    Perm p = identity(n);
    std::swap(p.img_[size_t(i - 1)], p.img_[size_t(i)]);
    p.len_ = 1;
    return p;
}

Perm Perm::operator*(const Perm& o) const {
    std::vector<int> v(img_.size());
    for (size_t x = 0; x < v.size(); ++x) v[x] = img_[size_t(o.img_[x] - 1)];
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (size_t x = 0; x < v.size(); ++x) v[size_t(img_[x] - 1)] = int(x) + 1;
    Perm p(std::move(v));
    return p;
}

bool Perm::is_identity() const {
    for (size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != int(x) + 1) return false;
    return true;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    std::vector<int> v = img_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back(int(i) + 1);
                changed = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ",";
        os << img_[i];
    }
    os << "]";
    return os.str();
}

namespace {

// Block ranges [start, end) of a flat composition, skipping empty blocks.
std::vector<std::pair<int, int>> blocks_of(const Weight& mu) {
    std::vector<std::pair<int, int>> blocks;
    int start = 0;
    for (int part : mu.bar) {
        if (part > 0) blocks.emplace_back(start, start + part);
        start += part;
    }
    return blocks;
}

} // namespace

std::vector<Perm> young_subgroup(const Weight& mu) {
    int n = mu.sum();
    std::vector<std::vector<int>> lines{std::vector<int>(size_t(n))};
    std::iota(lines[0].begin(), lines[0].end(), 1);
    for (auto [lo, hi] : blocks_of(mu)) {
        std::vector<int> vals;
        for (int x = lo; x < hi; ++x) vals.push_back(x + 1);
        std::vector<std::vector<int>> next;
        std::sort(vals.begin(), vals.end());
        do {
            for (const auto& base : lines) {
                std::vector<int> line = base;
                for (int x = lo; x < hi; ++x) line[size_t(x)] = vals[size_t(x - lo)];
                next.push_back(std::move(line));
            }
        } while (std::next_permutation(vals.begin(), vals.end()));
        lines = std::move(next);
    }
    std::vector<Perm> out;
    out.reserve(lines.size());
    for (auto& l : lines) out.emplace_back(std::move(l));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_coset_minimal(const Perm& w, const Weight& mu) {
    // Minimal in S_mu w: consecutive values within a block appear in
    // increasing positions.
    Perm inv = w.inverse();
    for (auto [lo, hi] : blocks_of(mu)) {
        for (int a = lo + 1; a < hi; ++a) {
            if (inv(a) > inv(a + 1)) return false;
        }
    }
    return true;
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

std::vector<Perm> coset_reps(const Weight& mu) {
    std::vector<Perm> out;
    for (auto& w : all_perms(mu.sum())) {
        if (is_coset_minimal(w, mu)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> double_coset_reps(const Weight& mu, const Weight& nu) {
    std::vector<Perm> out;
    for (auto& w : all_perms(mu.sum())) {
        if (is_coset_minimal(w, mu) && is_coset_minimal(w.inverse(), nu)) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Perm> double_coset_product(const Weight& mu, const Weight& nu) {
    std::set<Perm> seen;
    for (const auto& u : young_subgroup(mu)) {
        for (const auto& v : young_subgroup(nu)) {
            seen.insert(u * v);
        }
    }
    return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<Perm> x_set(const Weight& mu, int flat_pos, XKind kind) {
    const int n = mu.sum();
    const int p = flat_pos;
    if (p < 1 || p >= mu.parts()) throw shift_out_of_range("x_set position out of range");
    if ((kind == XKind::SubSource || kind == XKind::SubTarget) && !shift(mu, p, -1))
        throw shift_out_of_range("x_set: shifted weight is absent");
    if ((kind == XKind::AddSource || kind == XKind::AddTarget) && !shift(mu, p, +1))
        throw shift_out_of_range("x_set: shifted weight is absent");

    int N = 0;
    for (int j = 1; j <= p; ++j) N += mu.at(j);

    std::vector<Perm> out{Perm::identity(n)};
    auto telescope = [&](int first, int step, int count) {
        Perm w = Perm::identity(n);
        int idx = first;
        for (int t = 0; t < count; ++t) {
            w = w * Perm::s(idx, n);
            out.push_back(w);
            idx += step;
        }
    };
    switch (kind) {
    case XKind::SubSource: // in D_mu, ascending from s_N; size mu_{p+1} + 1
        telescope(N, +1, mu.at(p + 1));
        break;
    case XKind::SubTarget: // in D_{mu-alpha}, descending from s_{N-1}; size mu_p
        telescope(N - 1, -1, mu.at(p) - 1);
        break;
    case XKind::AddSource: // in D_mu, descending from s_N; size mu_p + 1
        telescope(N, -1, mu.at(p));
        break;
    case XKind::AddTarget: // in D_{mu+alpha}, ascending from s_{N+1}; size mu_{p+1}
        telescope(N + 1, +1, mu.at(p + 1) - 1);
        break;
    }
    return out;
}

} // namespace qschur
