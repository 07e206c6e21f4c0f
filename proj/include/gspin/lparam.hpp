#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gspin/inertia.hpp"

namespace gspin {

// Twisted self-duality type of an irreducible cuspidal parameter: the kind
// of bilinear form it fixes up to the similitude character, if any.
enum class SelfDualType { orthogonal, symplectic, none };

// Reducibility point b in {0, 1/2, 1} of the rank-one cuspidal induction.
enum class ReducPoint { zero, half, one };

enum class FormType { symmetric, symplectic };
enum class FactorTarget { GSp, GO };
enum class PoleKind { exterior_square, symmetric_square };
enum class ArthurOrder { trivial, z2 };

struct CuspParam {
    std::string id;
    int dim = 1;
    SelfDualType selfdual = SelfDualType::none;
    std::optional<ReducPoint> b;          // present iff selfdual != none
    std::optional<std::string> dual_id;   // explicit twisted-dual partner

    bool operator==(const CuspParam&) const = default;
};

// Generalized Steinberg block: the parameter of delta(rho, a).
struct SegmentParam {
    CuspParam rho;
    int a = 1;

    bool operator==(const SegmentParam&) const = default;
};

// Jordan data of the inducing discrete series tau.
struct TauParam {
    std::vector<std::pair<std::string, int>> jordan;  // (rho id, a)

    bool contains(const std::string& id, int a) const;
    bool operator==(const TauParam&) const = default;
};

struct CentralizerType {
    enum class Kind { GL, GSp, GO, GO11, Torus };
    Kind kind = Kind::Torus;
    int k = 0;        // matrix size for GL/GSp/GO, rank for Torus
    bool z2 = false;  // component group Z_2?

    bool operator==(const CentralizerType&) const = default;
};

std::string render_centralizer(const CentralizerType& c);

// Form type of phi_rho tensor S_a: tensoring with S_a flips the type when
// a is even.
FactorTarget segment_factor_type(const SegmentParam& seg);

// Which of the two degree-2 L-functions has the pole at 0 for a twisted
// self-dual cuspidal parameter.
PoleKind siegel_pole(const CuspParam& phi0);

// Unitary-axis reducibility of the Siegel induction per family.
bool siegel_reducible(Family family, const CuspParam& phi0);

// Centralizer of a Siegel-Levi parameter in the dual group, following the
// final table; the mu*c form computation is kept as an internal cross-check.
CentralizerType siegel_centralizer(const CuspParam& phi0, Family family, int n);

// Centralizer of an isotypic parameter phi_0^m inside the similitude group
// of an ambient form: GO(m) when the ambient and block forms have the same
// type, GSp(m) otherwise.
CentralizerType multiplicity_centralizer(FormType ambient, FormType sub, int mult);

// Is delta(rho, a) x| tau reducible?
bool rank_one_reducibility(const SegmentParam& seg, const TauParam& tau);

// R-group of the parameter for the maximal Levi GL_k x GSpin_{2l+1},
// computed through the isotypic centralizer of phi_sigma in phi.
ArthurOrder arthur_r_group_maximal(const SegmentParam& seg, const TauParam& tau);

// Knapp-Stein input data induced by a family-B parameter instance.
InertiaDatum derive_inertia(const LeviSpec& levi, const std::vector<SegmentParam>& blocks,
                            const TauParam& tau);

// W_{phi,sigma} with the reflection subgroup W0 generated by the s_alpha
// for roots with vanishing Plancherel shadow, and the quotient by cosets.
struct ArthurRGroup {
    std::vector<WeylElement> stabilizer;        // W_{phi,sigma}
    std::vector<WeylElement> reflection_gens;   // s_alpha generators of W0
    std::vector<WeylElement> reflection_subgroup;
    std::vector<std::vector<WeylElement>> cosets;
    std::vector<WeylElement> reps;              // canonical sign-change reps
    int rank = 0;                               // log2 of the coset count
};

ArthurRGroup arthur_r_group_general(const LeviSpec& levi, const std::vector<SegmentParam>& blocks,
                                    const TauParam& tau);

// Does the Knapp-Stein R-group map bijectively onto the parameter-side
// quotient under w -> w W0?
bool match_check(const LeviSpec& levi, const std::vector<SegmentParam>& blocks,
                 const TauParam& tau);

}  // namespace gspin
