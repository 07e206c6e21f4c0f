#include "gspin/inertia.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gspin {

std::vector<std::string> check_inertia(const LeviSpec& levi, const InertiaDatum& sigma) {
    std::vector<std::string> out;
    const int r = levi.rank();
    const int nl = sigma.label_count();
    auto name = [&](int l) { return sigma.labels[static_cast<size_t>(l)]; };

    if (static_cast<int>(sigma.assign.size()) != r) {
        out.push_back("assign must give one label per block");
        return out;
    }
    if (static_cast<int>(sigma.dual.size()) != nl ||
        static_cast<int>(sigma.reducible.size()) != nl ||
        static_cast<int>(sigma.size_of.size()) != nl) {
        out.push_back("dual, reducible and size_of must cover every label");
        return out;
    }
    for (int l = 0; l < nl; ++l) {
        int d = sigma.dual[static_cast<size_t>(l)];
        if (d < 0 || d >= nl) {
            out.push_back("dual image out of range for label " + name(l));
            return out;
        }
        if (sigma.dual[static_cast<size_t>(d)] != l)
            out.push_back("dual is not an involution at label " + name(l));
        if (sigma.size_of[static_cast<size_t>(d)] != sigma.size_of[static_cast<size_t>(l)])
            out.push_back("dual pair " + name(l) + "," + name(d) + " has mismatched GL sizes");
        if (sigma.reducible[static_cast<size_t>(l)] && d != l)
            out.push_back("label " + name(l) +
                          " is marked reducible but is not fixed by the duality twist"
                          " (reducible induction forces the class to be self-dual)");
    }
    for (int i = 0; i < r; ++i) {
        int l = sigma.assign[static_cast<size_t>(i)];
        if (l < 0 || l >= nl) {
            out.push_back("assign refers to an unknown label");
            return out;
        }
        if (sigma.size_of[static_cast<size_t>(l)] != levi.block(i))
            out.push_back("block " + std::to_string(i + 1) + " carries label " + name(l) +
                          " of GL size " + std::to_string(sigma.size_of[static_cast<size_t>(l)]) +
                          " but has size " + std::to_string(levi.block(i)));
    }
    if (levi.family() == Family::B && sigma.cn_fixes_tau)
        out.push_back("cn_fixes_tau is meaningful only for family D");
    if (levi.family() == Family::D && levi.m() == 0 && sigma.cn_fixes_tau)
        out.push_back("cn_fixes_tau requires m > 0");
    return out;
}

AppliedSigma apply(const LeviSpec& levi, const WeylElement& w, const InertiaDatum& sigma) {
    check_element(levi, w);
    const int r = levi.rank();
    if (static_cast<int>(sigma.assign.size()) != r)
        throw std::invalid_argument("apply: sigma does not match the Levi");
    AppliedSigma out;
    out.assign.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        int t = w.perm[static_cast<size_t>(i)];
        int l = sigma.assign[static_cast<size_t>(i)];
        out.assign[static_cast<size_t>(t)] =
            (w.flips >> t & 1u) ? sigma.dual[static_cast<size_t>(l)] : l;
    }
    out.tau_twisted = w.cn;
    return out;
}

bool fixes(const LeviSpec& levi, const WeylElement& w, const InertiaDatum& sigma) {
    AppliedSigma img = apply(levi, w, sigma);
    if (img.tau_twisted && !sigma.cn_fixes_tau) return false;
    return img.assign == sigma.assign;
}

std::vector<WeylElement> stabilizer(const LeviSpec& levi, const InertiaDatum& sigma) {
    std::vector<WeylElement> out;
    for (WeylElement& w : enumerate_wm(levi))
        if (fixes(levi, w, sigma)) out.push_back(std::move(w));
    return out;
}

namespace {

// Does the rank-one Weyl group of gamma_i meet W(sigma) nontrivially?
// W_{gamma_i} = {1, C_i} for family B or even blocks, {1, C_i c_n} for odd
// blocks in family D with m > 0, and trivial for odd blocks with m = 0.
bool gamma_stabilized(const LeviSpec& levi, const InertiaDatum& sigma, int i) {
    int l = sigma.assign[static_cast<size_t>(i)];
    if (!sigma.self_dual(l)) return false;
    if (levi.family() == Family::B || !levi.block_odd(i)) return true;
    return levi.m() > 0 && sigma.cn_fixes_tau;
}

}  // namespace

std::vector<ReducedRoot> delta_prime(const LeviSpec& levi, const InertiaDatum& sigma) {
    std::vector<ReducedRoot> out;
    auto lab = [&](int i) { return sigma.assign[static_cast<size_t>(i)]; };
    for (const ReducedRoot& root : all_reduced_roots(levi)) {
        bool in = false;
        switch (root.kind) {
            case ReducedRoot::Kind::alpha:
                in = levi.block(root.i) == levi.block(root.j) && lab(root.i) == lab(root.j);
                break;
            case ReducedRoot::Kind::beta:
                in = levi.block(root.i) == levi.block(root.j) &&
                     lab(root.i) == sigma.dual[static_cast<size_t>(lab(root.j))];
                break;
            case ReducedRoot::Kind::gamma:
                in = gamma_stabilized(levi, sigma, root.i) &&
                     !sigma.reducible[static_cast<size_t>(lab(root.i))];
                break;
        }
        if (in) out.push_back(root);
    }
    return out;
}

namespace {

// Generators of an elementary abelian 2-group of sign changes, by Gaussian
// elimination over GF(2) on the flip masks.
std::vector<unsigned> mask_basis(const std::vector<unsigned>& masks) {
    std::vector<unsigned> basis;
    std::vector<unsigned> reduced;
    for (unsigned m : masks) {
        unsigned x = m;
        for (unsigned b : reduced) x = std::min(x, x ^ b);
        if (x != 0) {
            basis.push_back(m);
            reduced.push_back(x);
        }
    }
    return basis;
}

RGroup package_sign_group(const LeviSpec& levi, std::vector<WeylElement> elements) {
    RGroup g;
    std::sort(elements.begin(), elements.end(), element_less);
    // Subgroup and shape checks; these are theorems, so any failure is an
    // internal inconsistency.
    for (const WeylElement& w : elements) {
        if (!w.is_pure_sign_change())
            throw std::logic_error("R-group element with nontrivial permutation part");
    }
    if (!std::has_single_bit(elements.size()))
        throw std::logic_error("R-group size is not a power of two");
    for (const WeylElement& a : elements)
        for (const WeylElement& b : elements) {
            WeylElement p = multiply(levi, a, b);
            if (!std::binary_search(elements.begin(), elements.end(), p, element_less))
                throw std::logic_error("R-group is not closed under multiplication");
        }
    std::vector<unsigned> masks;
    for (const WeylElement& w : elements)
        if (w.flips != 0) masks.push_back(w.flips);
    for (unsigned m : mask_basis(masks)) g.generators.push_back(sign_change(levi, m));
    g.rank = static_cast<int>(g.generators.size());
    if (elements.size() != (size_t(1) << g.rank))
        throw std::logic_error("R-group rank disagrees with its order");
    g.elements = std::move(elements);
    return g;
}

std::vector<WeylElement> span_of_sign_changes(const LeviSpec& levi,
                                              const std::vector<unsigned>& gen_masks) {
    std::vector<unsigned> basis = mask_basis(gen_masks);
    std::vector<unsigned> all{0};
    for (unsigned b : basis) {
        size_t n = all.size();
        for (size_t k = 0; k < n; ++k) all.push_back(all[k] ^ b);
    }
    std::vector<WeylElement> out;
    out.reserve(all.size());
    for (unsigned m : all) out.push_back(sign_change(levi, m));
    std::sort(out.begin(), out.end(), element_less);
    return out;
}

}  // namespace

RGroup r_group_bruteforce(const LeviSpec& levi, const InertiaDatum& sigma) {
    const std::vector<ReducedRoot> roots = all_reduced_roots(levi);
    std::uint64_t bad = 0;
    {
        std::uint64_t bit = 1;
        const std::vector<ReducedRoot> dp = delta_prime(levi, sigma);
        for (const ReducedRoot& root : roots) {
            if (std::binary_search(dp.begin(), dp.end(), root)) bad |= bit;
            bit <<= 1;
        }
    }
    std::vector<WeylElement> members;
    for (const WeylElement& w : stabilizer(levi, sigma))
        if ((negative_mask(levi, w, roots) & bad) == 0) members.push_back(w);
    return package_sign_group(levi, std::move(members));
}

RGroup r_group_closed_form(const LeviSpec& levi, const InertiaDatum& sigma) {
    const int r = levi.rank();
    auto lab = [&](int i) { return sigma.assign[static_cast<size_t>(i)]; };
    auto last_of_its_class = [&](int i) {
        for (int j = i + 1; j < r; ++j)
            if (lab(j) == lab(i)) return false;
        return true;
    };
    auto red = [&](int i) { return sigma.reducible[static_cast<size_t>(lab(i))] != 0; };

    RGroup g;
    std::vector<unsigned> gen_masks;
    if (levi.family() == Family::B) {
        for (int i = 0; i < r; ++i)
            if (red(i) && last_of_its_class(i)) g.omega.push_back(i);
        for (int i : g.omega) gen_masks.push_back(1u << i);
    } else if (levi.m() == 0 || !sigma.cn_fixes_tau) {
        // Family D case (i): even blocks enter through reducibility, odd
        // blocks through self-duality, and odd sign changes only in pairs.
        for (int i = 0; i < r; ++i) {
            if (!last_of_its_class(i)) continue;
            if (!levi.block_odd(i)) {
                if (red(i)) g.omega1.push_back(i);
            } else if (sigma.self_dual(lab(i))) {
                g.omega2.push_back(i);
            }
        }
        for (int i : g.omega1) gen_masks.push_back(1u << i);
        for (size_t k = 1; k < g.omega2.size(); ++k)
            gen_masks.push_back((1u << g.omega2[0]) | (1u << g.omega2[k]));
    } else {
        // Family D case (ii): m > 0 and c_n tau ~ tau.
        for (int i = 0; i < r; ++i)
            if (red(i) && last_of_its_class(i)) g.omega.push_back(i);
        for (int i : g.omega) gen_masks.push_back(1u << i);
    }
    for (unsigned m : gen_masks) g.generators.push_back(sign_change(levi, m));
    g.rank = static_cast<int>(g.generators.size());
    g.elements = span_of_sign_changes(levi, gen_masks);
    return g;
}

}  // namespace gspin
