#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gspin/weyl.hpp"

namespace gspin {

// Reduced restricted root of (P, A): a[i,j] = f_i - f_j, b[i,j] = f_i + f_j,
// g[i] = f_i in the block-symbol model (f_i the restriction class of the
// i-th GL block).  Indices are 0-based internally, i < j for alpha/beta.
struct ReducedRoot {
    enum class Kind { alpha, beta, gamma };
    Kind kind = Kind::gamma;
    int i = 0;
    int j = -1;

    auto operator<=>(const ReducedRoot&) const = default;
};

struct SignedRoot {
    ReducedRoot root;
    int sign = 1;

    bool operator==(const SignedRoot&) const = default;
};

inline ReducedRoot alpha_root(int i, int j) { return {ReducedRoot::Kind::alpha, i, j}; }
inline ReducedRoot beta_root(int i, int j) { return {ReducedRoot::Kind::beta, i, j}; }
inline ReducedRoot gamma_root(int i) { return {ReducedRoot::Kind::gamma, i, -1}; }

// All of Phi(P,A) in deterministic order: alpha block, beta block, gamma
// block, each lexicographic.  For family D with m = 0, Gamma(i) exists only
// for blocks of size >= 2 (its ray is carried by roots inside the block).
std::vector<ReducedRoot> all_reduced_roots(const LeviSpec& levi);

// Image of a root symbol under w, renormalized to a positive root times a
// sign.  Works on any symbol, admissible for levi or not.
SignedRoot act_on_root(const LeviSpec& levi, const WeylElement& w, const ReducedRoot& root);

// R(w) = { root in Phi(P,A) : w(root) < 0 }.
std::vector<ReducedRoot> negative_set(const LeviSpec& levi, const WeylElement& w);

// R(w) as a bitmask over the positions of `roots` (usually all_reduced_roots).
std::uint64_t negative_mask(const LeviSpec& levi, const WeylElement& w,
                            const std::vector<ReducedRoot>& roots);

// "a[i,j]", "b[i,j]", "g[i]" with 1-based indices.
std::string render_root(const ReducedRoot& root);

}  // namespace gspin
