#include "gspin/weyl.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace gspin {

LeviSpec::LeviSpec(GroupSpec group, std::vector<int> blocks, int m)
    : group_(group), blocks_(std::move(blocks)), m_(m) {
    if (group_.n < 1)
        throw std::invalid_argument("LeviSpec: group rank n must be >= 1");
    if (blocks_.empty())
        throw std::invalid_argument("LeviSpec: at least one GL block required (r >= 1)");
    if (blocks_.size() > 31)
        throw std::invalid_argument("LeviSpec: too many blocks");
    if (m_ < 0)
        throw std::invalid_argument("LeviSpec: m must be >= 0");
    int total = m_;
    for (int b : blocks_) {
        if (b < 1)
            throw std::invalid_argument("LeviSpec: block sizes must be positive");
        total += b;
    }
    if (total != group_.n)
        throw std::invalid_argument("LeviSpec: block sizes and m must sum to n");
}

bool WeylElement::is_identity() const {
    if (flips != 0) return false;
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

bool WeylElement::is_pure_sign_change() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

bool derive_cn(const LeviSpec& levi, unsigned flips) {
    if (levi.family() != Family::D || levi.m() == 0) return false;
    int odd = 0;
    for (int i = 0; i < levi.rank(); ++i)
        if ((flips >> i & 1u) && levi.block_odd(i)) ++odd;
    return odd % 2 != 0;
}

bool is_valid_flips(const LeviSpec& levi, unsigned flips) {
    if (flips >> levi.rank() != 0) return false;
    if (levi.family() == Family::D && levi.m() == 0) {
        int odd = 0;
        for (int i = 0; i < levi.rank(); ++i)
            if ((flips >> i & 1u) && levi.block_odd(i)) ++odd;
        return odd % 2 == 0;
    }
    return true;
}

void check_element(const LeviSpec& levi, const WeylElement& w) {
    const int r = levi.rank();
    if (static_cast<int>(w.perm.size()) != r)
        throw std::invalid_argument("WeylElement: permutation size does not match Levi rank");
    std::vector<char> seen(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        int t = w.perm[static_cast<size_t>(i)];
        if (t < 0 || t >= r || seen[static_cast<size_t>(t)])
            throw std::invalid_argument("WeylElement: perm is not a bijection");
        seen[static_cast<size_t>(t)] = 1;
        if (levi.block(i) != levi.block(t))
            throw std::invalid_argument("WeylElement: perm relates blocks of different sizes");
    }
    if (!is_valid_flips(levi, w.flips))
        throw std::invalid_argument("WeylElement: flip set not admissible for this Levi");
    if (w.cn != derive_cn(levi, w.flips))
        throw std::invalid_argument("WeylElement: stored c_n flag disagrees with derived value");
}

WeylElement identity(const LeviSpec& levi) {
    WeylElement w;
    w.perm.resize(static_cast<size_t>(levi.rank()));
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

WeylElement sign_change(const LeviSpec& levi, unsigned flips) {
    WeylElement w = identity(levi);
    w.flips = flips;
    w.cn = derive_cn(levi, flips);
    check_element(levi, w);
    return w;
}

WeylElement make_element(const LeviSpec& levi, std::vector<int> perm, unsigned flips) {
    WeylElement w;
    w.perm = std::move(perm);
    w.flips = flips;
    w.cn = derive_cn(levi, flips);
    check_element(levi, w);
    return w;
}

// Group law of the wreath-type product: an element acts as the sign changes
// composed after the permutation, so (s1,B1)(s2,B2) = (s1 s2, B1 xor s1(B2)).
WeylElement multiply(const LeviSpec& levi, const WeylElement& a, const WeylElement& b) {
    check_element(levi, a);
    check_element(levi, b);
    const int r = levi.rank();
    WeylElement w;
    w.perm.resize(static_cast<size_t>(r));
    unsigned transported = 0;
    for (int i = 0; i < r; ++i) {
        w.perm[static_cast<size_t>(i)] = a.perm[static_cast<size_t>(b.perm[static_cast<size_t>(i)])];
        if (b.flips >> i & 1u) transported |= 1u << a.perm[static_cast<size_t>(i)];
    }
    w.flips = a.flips ^ transported;
    w.cn = derive_cn(levi, w.flips);
    return w;
}

WeylElement inverse(const LeviSpec& levi, const WeylElement& w) {
    check_element(levi, w);
    const int r = levi.rank();
    WeylElement v;
    v.perm.resize(static_cast<size_t>(r));
    unsigned flips = 0;
    for (int i = 0; i < r; ++i) {
        v.perm[static_cast<size_t>(w.perm[static_cast<size_t>(i)])] = i;
        if (w.flips >> w.perm[static_cast<size_t>(i)] & 1u) flips |= 1u << i;
    }
    v.flips = flips;
    v.cn = derive_cn(levi, v.flips);
    return v;
}

namespace {

// All permutations of {0..r-1} preserving block sizes, lexicographically.
std::vector<std::vector<int>> size_preserving_perms(const LeviSpec& levi) {
    const int r = levi.rank();
    std::vector<std::vector<int>> out;
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            ok = levi.block(i) == levi.block(perm[static_cast<size_t>(i)]);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

std::vector<WeylElement> enumerate_wm(const LeviSpec& levi) {
    const int r = levi.rank();
    std::vector<WeylElement> out;
    for (const auto& perm : size_preserving_perms(levi)) {
        for (unsigned flips = 0; flips < (1u << r); ++flips) {
            if (!is_valid_flips(levi, flips)) continue;
            WeylElement w;
            w.perm = perm;
            w.flips = flips;
            w.cn = derive_cn(levi, flips);
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<Rat> act_on_a(const LeviSpec& levi, const WeylElement& w, std::span<const Rat> v) {
    check_element(levi, w);
    const int r = levi.rank();
    if (static_cast<int>(v.size()) != r + 1)
        throw std::invalid_argument("act_on_a: vector must have length r+1");
    const Rat y = v[static_cast<size_t>(r)];
    std::vector<Rat> out(static_cast<size_t>(r) + 1);
    out[static_cast<size_t>(r)] = y;
    for (int i = 0; i < r; ++i) {
        int t = w.perm[static_cast<size_t>(i)];
        out[static_cast<size_t>(t)] = (w.flips >> t & 1u) ? y - v[static_cast<size_t>(i)]
                                                          : v[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<std::vector<Rat>> action_matrix(const LeviSpec& levi, const WeylElement& w) {
    const int n = levi.rank() + 1;
    std::vector<Rat> e(static_cast<size_t>(n), Rat(0));
    std::vector<std::vector<Rat>> cols;
    cols.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        e[static_cast<size_t>(k)] = Rat(1);
        cols.push_back(act_on_a(levi, w, e));
        e[static_cast<size_t>(k)] = Rat(0);
    }
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(n),
                                      std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            mat[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                cols[static_cast<size_t>(k)][static_cast<size_t>(i)];
    return mat;
}

bool element_less(const WeylElement& a, const WeylElement& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.flips < b.flips;
}

std::string render_element(const WeylElement& w) {
    std::string out;
    const int r = static_cast<int>(w.perm.size());
    std::vector<char> seen(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        if (seen[static_cast<size_t>(i)] || w.perm[static_cast<size_t>(i)] == i) continue;
        std::string cyc = "(" + std::to_string(i + 1);
        seen[static_cast<size_t>(i)] = 1;
        for (int j = w.perm[static_cast<size_t>(i)]; j != i; j = w.perm[static_cast<size_t>(j)]) {
            cyc += " " + std::to_string(j + 1);
            seen[static_cast<size_t>(j)] = 1;
        }
        cyc += ")";
        out += cyc;
    }
    if (w.flips != 0) {
        if (!out.empty()) out += "·";
        for (int i = 0; i < r; ++i)
            if (w.flips >> i & 1u) out += "C_" + std::to_string(i + 1);
    }
    if (w.cn) {
        if (!out.empty()) out += "·";
        out += "c_n";
    }
    return out.empty() ? "1" : out;
}

}  // namespace gspin
