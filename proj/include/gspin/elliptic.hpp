#pragma once

#include <optional>
#include <utility>

#include "gspin/inertia.hpp"

namespace gspin {

// A rational subspace of a_M ~ Q^{r+1}, stored as the reduced row echelon
// basis of its span, so equal spaces compare equal.
struct FixedSpace {
    std::vector<std::vector<Rat>> basis;
    int dim = 0;

    bool operator==(const FixedSpace&) const = default;
};

// a_w = { v : w v = v }, the exact kernel of (M_w - I).
FixedSpace fixed_space(const LeviSpec& levi, const WeylElement& w);

// Intersection of the fixed spaces of a set of elements (a_R for R-groups).
FixedSpace common_fixed_space(const LeviSpec& levi, const std::vector<WeylElement>& ws);

// z = span{(1,...,1,2)}, the split-center line {(y/2,...,y/2,y)}.
FixedSpace center_line(const LeviSpec& levi);

// Basis vectors scaled to primitive integer form for display.
std::vector<std::vector<long long>> primitive_basis(const FixedSpace& space);

struct EllipticClass {
    bool has_elliptic = false;
    bool all_components_elliptic = false;
    bool irreducibly_induced = false;
    std::optional<WeylElement> elliptic_witness;   // w in R with a_w = z
    std::optional<WeylElement> inducing_witness;   // w in R with a_w = a_R
    FixedSpace a_r;
    RGroup r_group;
};

// Fixed-space classification of the induced representation, with the
// closed-form condition kept as a cross-check (throws std::logic_error on
// divergence, which would contradict the classification theorems).
EllipticClass classify_elliptic(const LeviSpec& levi, const InertiaDatum& sigma);

// Formal self-intertwining operator: a product of block involutions
// T_i (i in factors), optionally times the tau-swap operator.  All factors
// square to the identity and commute, so composition is xor.
struct FormalOperator {
    unsigned factors = 0;
    bool tau_flag = false;

    bool operator==(const FormalOperator&) const = default;
};

FormalOperator compose(const FormalOperator& a, const FormalOperator& b);

// Multiplicative section w -> T_w over R(sigma); being a homomorphism into
// the xor-group of formal operators certifies the cocycle is trivial.
std::vector<std::pair<WeylElement, FormalOperator>> splitting_section(const LeviSpec& levi,
                                                                      const InertiaDatum& sigma);

// Character of R ~ Z_2^d by its values on the generator list, with
// epsilon = value at the distinguished full sign change C_0.
struct SignChar {
    std::vector<int> values;
    int epsilon = 1;
};

// The element C_0: the unique member of R flipping every block (with the
// derived c_n twist).  Throws std::invalid_argument when absent, i.e. when
// the induced representation has no elliptic components.
WeylElement c0_element(const LeviSpec& levi, const RGroup& r);

// All 2^d characters of R, in binary order over the generator list.
std::vector<SignChar> sign_characters(const LeviSpec& levi, const RGroup& r);

}  // namespace gspin
