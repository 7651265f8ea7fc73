#pragma once

#include <string>
#include <vector>

#include "qschur/weights.hpp"

namespace qschur {

// Permutation of {1..n} in one-line notation with cached Coxeter length.
// Products compose as functions: (u*v)(x) = u(v(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line);

    static Perm identity(int n);
    static Perm s(int i, int n); // adjacent transposition (i, i+1), 1-based

    int degree() const { return int(img_.size()); }
    int length() const { return len_; }
    int operator()(int x) const { return img_[size_t(x - 1)]; } // 1-based
    const std::vector<int>& one_line() const { return img_; }

    Perm operator*(const Perm& o) const;
    Perm inverse() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    bool is_identity() const;

    // Reduced word as 1-based generator indices, w = s_{w[0]} s_{w[1]} ...
    std::vector<int> reduced_word() const;

    std::string str() const;

private:
    std::vector<int> img_;
    int len_ = 0;
};

// All elements of the Young subgroup S_mu for a flat composition, sorted.
std::vector<Perm> young_subgroup(const Weight& mu);

// Minimal-length representatives of right cosets S_mu \ S_n, sorted.
std::vector<Perm> coset_reps(const Weight& mu);

// Minimal-length representatives of S_mu - S_nu double cosets, sorted.
std::vector<Perm> double_coset_reps(const Weight& mu, const Weight& nu);

// The set S_mu * S_nu = { u v } without repetition, sorted.
std::vector<Perm> double_coset_product(const Weight& mu, const Weight& nu);

// The four telescoping coset lists attached to a weight and a flat position;
// source lists live in D_mu, target lists in D_{mu -+ alpha}.
enum class XKind { SubSource, SubTarget, AddSource, AddTarget };

std::vector<Perm> x_set(const Weight& mu, int flat_pos, XKind kind);

} // namespace qschur
