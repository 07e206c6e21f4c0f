#pragma once

#include <span>
#include <string>
#include <vector>

#include "gspin/rational.hpp"

namespace gspin {

// Ambient group family: B <-> GSpin_{2n+1}, D <-> GSpin_{2n}.
enum class Family { B, D };

struct GroupSpec {
    Family family = Family::B;
    int n = 1;

    bool operator==(const GroupSpec&) const = default;
};

// Levi block data for GL_{n_1} x ... x GL_{n_r} x G_m inside G_n,
// with n_1 + ... + n_r + m = n and r >= 1.
class LeviSpec {
public:
    LeviSpec(GroupSpec group, std::vector<int> blocks, int m);

    const GroupSpec& group() const { return group_; }
    Family family() const { return group_.family; }
    int n() const { return group_.n; }
    int rank() const { return static_cast<int>(blocks_.size()); }
    int block(int i) const { return blocks_[static_cast<size_t>(i)]; }
    const std::vector<int>& blocks() const { return blocks_; }
    int m() const { return m_; }
    bool block_odd(int i) const { return blocks_[static_cast<size_t>(i)] % 2 != 0; }

    bool operator==(const LeviSpec&) const = default;

private:
    GroupSpec group_;
    std::vector<int> blocks_;
    int m_;
};

// Element of the relative Weyl group W_M: a block permutation together with
// a set of block sign changes.  perm[i] is the target block of block i
// (0-based).  Bit i of flips means the sign change C_{i+1} is applied after
// the permutation.  cn is derived from flips (see derive_cn), never free.
struct WeylElement {
    std::vector<int> perm;
    unsigned flips = 0;
    bool cn = false;

    bool operator==(const WeylElement&) const = default;
    bool is_identity() const;
    bool is_pure_sign_change() const;
};

// Derived c_n twist of a sign-change set: only family D with m > 0 picks up
// the twist, with parity given by the number of odd-size flipped blocks.
bool derive_cn(const LeviSpec& levi, unsigned flips);

// Family D with m = 0 admits only sign-change sets flipping an even number
// of odd-size blocks; everything is allowed otherwise.
bool is_valid_flips(const LeviSpec& levi, unsigned flips);

// Throws std::invalid_argument if w is not an element of W_M for levi.
void check_element(const LeviSpec& levi, const WeylElement& w);

WeylElement identity(const LeviSpec& levi);
WeylElement sign_change(const LeviSpec& levi, unsigned flips);
WeylElement make_element(const LeviSpec& levi, std::vector<int> perm, unsigned flips);

WeylElement multiply(const LeviSpec& levi, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const LeviSpec& levi, const WeylElement& w);

// All elements of W_M, each exactly once, in a deterministic order.
std::vector<WeylElement> enumerate_wm(const LeviSpec& levi);

// Action on a_M = {(x_1,...,x_r,y)}: the permutation moves x-coordinates,
// each flipped block i replaces x_i by y - x_i, and y is fixed.
std::vector<Rat> act_on_a(const LeviSpec& levi, const WeylElement& w, std::span<const Rat> v);

// (r+1)x(r+1) matrix of act_on_a in the standard basis, row-major.
std::vector<std::vector<Rat>> action_matrix(const LeviSpec& levi, const WeylElement& w);

bool element_less(const WeylElement& a, const WeylElement& b);

// Rendering: "1", "(1 2)", "C_1C_3", "(1 2)·C_2·c_n".  Indices are 1-based.
std::string render_element(const WeylElement& w);

}  // namespace gspin
