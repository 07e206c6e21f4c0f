#pragma once

#include <string>
#include <vector>

#include "gspin/roots.hpp"

namespace gspin {

// Symbolic discrete-series datum sigma_1 x ... x sigma_r x tau.  A label
// names an equivalence class of GL representations; dual encodes the
// duality twist (contragredient tensored with the central character of
// tau); reducible records whether the rank-one induction of that class
// against tau reduces.
struct InertiaDatum {
    std::vector<std::string> labels;
    std::vector<int> assign;     // block -> label index
    std::vector<int> dual;       // label index -> label index, an involution
    std::vector<char> reducible; // label index -> bit
    bool cn_fixes_tau = false;   // family D only: whether c_n tau ~ tau
    std::vector<int> size_of;    // label index -> GL size

    bool operator==(const InertiaDatum&) const = default;

    int label_count() const { return static_cast<int>(labels.size()); }
    bool self_dual(int label) const { return dual[static_cast<size_t>(label)] == label; }
};

// Invariant violations as data; empty means consistent.
std::vector<std::string> check_inertia(const LeviSpec& levi, const InertiaDatum& sigma);

// Image of sigma under w: per-block labels plus whether the tau component
// picked up the c_n twist.
struct AppliedSigma {
    std::vector<int> assign;
    bool tau_twisted = false;

    bool operator==(const AppliedSigma&) const = default;
};

AppliedSigma apply(const LeviSpec& levi, const WeylElement& w, const InertiaDatum& sigma);

// Does w fix sigma?  Twisted tau requires cn_fixes_tau.
bool fixes(const LeviSpec& levi, const WeylElement& w, const InertiaDatum& sigma);

// W(sigma) = { w in W_M : w sigma ~ sigma }, in enumerate_wm order.
std::vector<WeylElement> stabilizer(const LeviSpec& levi, const InertiaDatum& sigma);

// Delta' = zero set of the rank-one Plancherel measures, case by case on
// the root kind.
std::vector<ReducedRoot> delta_prime(const LeviSpec& levi, const InertiaDatum& sigma);

struct RGroup {
    std::vector<WeylElement> generators;
    std::vector<WeylElement> elements;  // sorted, identity first
    int rank = 0;
    std::vector<int> omega;             // family B / family D case (ii), 0-based
    std::vector<int> omega1, omega2;    // family D case (i), 0-based
};

// R(sigma) from the definition: stabilizer elements whose negative-root set
// avoids Delta'.  Verifies the result is an elementary abelian 2-group of
// pure sign changes and throws std::logic_error otherwise.
RGroup r_group_bruteforce(const LeviSpec& levi, const InertiaDatum& sigma);

// R(sigma) from the closed-form description via the Omega index sets.
RGroup r_group_closed_form(const LeviSpec& levi, const InertiaDatum& sigma);

}  // namespace gspin
