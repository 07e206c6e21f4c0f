#include "gspin/roots.hpp"

#include <stdexcept>

namespace gspin {

std::vector<ReducedRoot> all_reduced_roots(const LeviSpec& levi) {
    const int r = levi.rank();
    std::vector<ReducedRoot> out;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) out.push_back(alpha_root(i, j));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) out.push_back(beta_root(i, j));
    // For family D with m = 0 there is no G_m block to lean on: the ray of
    // Gamma(i) comes from roots supported inside block i, which exist only
    // when the block has size at least two.
    const bool inner_gamma = levi.family() == Family::D && levi.m() == 0;
    for (int i = 0; i < r; ++i) {
        if (inner_gamma && levi.block(i) < 2) continue;
        out.push_back(gamma_root(i));
    }
    return out;
}

namespace {

// Image of the symbol f_i: the permutation sends it to f_{perm(i)} and a
// flip on the target block negates it.
std::pair<int, int> image_of_symbol(const WeylElement& w, int i) {
    int t = w.perm[static_cast<size_t>(i)];
    int sign = (w.flips >> t & 1u) ? -1 : 1;
    return {t, sign};
}

}  // namespace

SignedRoot act_on_root(const LeviSpec& levi, const WeylElement& w, const ReducedRoot& root) {
    check_element(levi, w);
    if (root.kind == ReducedRoot::Kind::gamma) {
        auto [t, s] = image_of_symbol(w, root.i);
        return {gamma_root(t), s};
    }
    auto [a, sa] = image_of_symbol(w, root.i);
    int sb = (root.kind == ReducedRoot::Kind::beta) ? 1 : -1;
    auto [b, tb] = image_of_symbol(w, root.j);
    sb *= tb;
    // Now the image is sa*f_a + sb*f_b with a != b; renormalize.
    if (a > b) {
        std::swap(a, b);
        std::swap(sa, sb);
    }
    if (sa == sb) return {beta_root(a, b), sa};
    return {alpha_root(a, b), sa};
}

std::vector<ReducedRoot> negative_set(const LeviSpec& levi, const WeylElement& w) {
    std::vector<ReducedRoot> out;
    for (const ReducedRoot& root : all_reduced_roots(levi))
        if (act_on_root(levi, w, root).sign < 0) out.push_back(root);
    return out;
}

std::uint64_t negative_mask(const LeviSpec& levi, const WeylElement& w,
                            const std::vector<ReducedRoot>& roots) {
    if (roots.size() > 64) throw std::invalid_argument("negative_mask: too many roots");
    std::uint64_t mask = 0;
    for (size_t k = 0; k < roots.size(); ++k)
        if (act_on_root(levi, w, roots[k]).sign < 0) mask |= std::uint64_t(1) << k;
    return mask;
}

std::string render_root(const ReducedRoot& root) {
    switch (root.kind) {
        case ReducedRoot::Kind::alpha:
            return "a[" + std::to_string(root.i + 1) + "," + std::to_string(root.j + 1) + "]";
        case ReducedRoot::Kind::beta:
            return "b[" + std::to_string(root.i + 1) + "," + std::to_string(root.j + 1) + "]";
        default:
            return "g[" + std::to_string(root.i + 1) + "]";
    }
}

}  // namespace gspin
