#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gspin/inertia.hpp"

namespace gspin::testutil {

inline LeviSpec make_levi(Family f, std::vector<int> blocks, int m) {
    int n = m;
    for (int b : blocks) n += b;
    return LeviSpec({f, n}, std::move(blocks), m);
}

// Sigma from block label names; labels named in dual_pairs but assigned to
// no block become external partners.
inline InertiaDatum make_sigma(const LeviSpec& levi, const std::vector<std::string>& assign,
                               const std::vector<std::pair<std::string, std::string>>& dual_pairs = {},
                               const std::vector<std::string>& reducible = {}, bool cn = false) {
    InertiaDatum sigma;
    std::map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, static_cast<int>(sigma.labels.size()));
        if (fresh) {
            sigma.labels.push_back(name);
            sigma.dual.push_back(static_cast<int>(sigma.labels.size()) - 1);
            sigma.reducible.push_back(0);
            sigma.size_of.push_back(0);
        }
        return it->second;
    };
    for (size_t i = 0; i < assign.size(); ++i) {
        int l = intern(assign[i]);
        sigma.assign.push_back(l);
        if (sigma.size_of[static_cast<size_t>(l)] == 0)
            sigma.size_of[static_cast<size_t>(l)] = levi.block(static_cast<int>(i));
    }
    for (const auto& [x, y] : dual_pairs) {
        int a = intern(x);
        int b = intern(y);
        sigma.dual[static_cast<size_t>(a)] = b;
        sigma.dual[static_cast<size_t>(b)] = a;
    }
    for (size_t k = 0; k < sigma.labels.size(); ++k) {
        int d = sigma.dual[k];
        if (sigma.size_of[k] == 0) sigma.size_of[k] = sigma.size_of[static_cast<size_t>(d)];
    }
    for (const std::string& name : reducible) sigma.reducible[static_cast<size_t>(intern(name))] = 1;
    sigma.cn_fixes_tau = cn;
    return sigma;
}

}  // namespace gspin::testutil
