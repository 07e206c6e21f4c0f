#include "gspin/lparam.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace gspin {

bool TauParam::contains(const std::string& id, int a) const {
    for (const auto& [jid, ja] : jordan)
        if (jid == id && ja == a) return true;
    return false;
}

std::string render_centralizer(const CentralizerType& c) {
    switch (c.kind) {
        case CentralizerType::Kind::GL: return "GL(" + std::to_string(c.k) + ")";
        case CentralizerType::Kind::GSp: return "GSp(" + std::to_string(c.k) + ")";
        case CentralizerType::Kind::GO: return "GO(" + std::to_string(c.k) + ")";
        case CentralizerType::Kind::GO11: return "GO_{1,1}";
        default: return "torus^" + std::to_string(c.k);
    }
}

FactorTarget segment_factor_type(const SegmentParam& seg) {
    if (seg.rho.selfdual == SelfDualType::none)
        throw std::invalid_argument("segment_factor_type: cuspidal block has no self-duality type");
    const bool a_even = seg.a % 2 == 0;
    const bool rho_orth = seg.rho.selfdual == SelfDualType::orthogonal;
    return (rho_orth == a_even) ? FactorTarget::GSp : FactorTarget::GO;
}

PoleKind siegel_pole(const CuspParam& phi0) {
    if (phi0.selfdual == SelfDualType::none)
        throw std::invalid_argument("siegel_pole: parameter is not twisted self-dual");
    return phi0.selfdual == SelfDualType::symplectic ? PoleKind::exterior_square
                                                     : PoleKind::symmetric_square;
}

bool siegel_reducible(Family family, const CuspParam& phi0) {
    if (phi0.selfdual == SelfDualType::none) return false;
    if (family == Family::B) return phi0.selfdual == SelfDualType::symplectic;
    // Family D: for n odd the relative Weyl group is trivial, so the
    // induction is irreducible outright.
    if (phi0.dim % 2 != 0) return false;
    return phi0.selfdual == SelfDualType::orthogonal;
}

CentralizerType siegel_centralizer(const CuspParam& phi0, Family family, int n) {
    if (phi0.dim != n)
        throw std::invalid_argument("siegel_centralizer: parameter dimension must equal n");
    using Kind = CentralizerType::Kind;
    if (phi0.selfdual == SelfDualType::none) return {Kind::Torus, 2, false};

    // Final table.
    CentralizerType table;
    if (family == Family::B) {
        table = phi0.selfdual == SelfDualType::symplectic ? CentralizerType{Kind::GO11, 2, true}
                                                          : CentralizerType{Kind::GL, 2, false};
    } else if (phi0.selfdual == SelfDualType::symplectic) {
        table = {Kind::GL, 2, false};
    } else {
        table = n % 2 == 0 ? CentralizerType{Kind::GO11, 2, true}
                           : CentralizerType{Kind::Torus, 1, false};
    }

    // Cross-check: the centralizer in the full similitude group depends only
    // on mu*c (c = +1 for an orthogonal block form, -1 symplectic; mu = -1
    // for the symplectic ambient form of family B, +1 for family D), and
    // family D then intersects with the kernel of the similitude norm.
    const int c = phi0.selfdual == SelfDualType::orthogonal ? 1 : -1;
    const int mu = family == Family::B ? -1 : 1;
    CentralizerType check;
    if (mu * c == -1) {
        check = {Kind::GL, 2, false};
    } else if (family == Family::B || n % 2 == 0) {
        check = {Kind::GO11, 2, true};
    } else {
        check = {Kind::Torus, 1, false};
    }
    if (check != table)
        throw std::logic_error("siegel_centralizer: mu*c computation disagrees with the table");
    return table;
}

CentralizerType multiplicity_centralizer(FormType ambient, FormType sub, int mult) {
    if (mult < 1) throw std::invalid_argument("multiplicity_centralizer: mult must be positive");
    if (ambient == sub) return {CentralizerType::Kind::GO, mult, true};
    if (mult % 2 != 0)
        throw std::invalid_argument(
            "multiplicity_centralizer: no symplectic form in odd dimension");
    return {CentralizerType::Kind::GSp, mult, false};
}

bool rank_one_reducibility(const SegmentParam& seg, const TauParam& tau) {
    if (seg.rho.selfdual == SelfDualType::none) return false;
    if (!seg.rho.b)
        throw std::invalid_argument("rank_one_reducibility: self-dual block without a b-point");
    if (tau.contains(seg.rho.id, seg.a)) return false;
    // 2b+1 is even exactly for b = 1/2.
    const bool two_b_plus_one_even = *seg.rho.b == ReducPoint::half;
    return (seg.a % 2 == 0) == two_b_plus_one_even;
}

ArthurOrder arthur_r_group_maximal(const SegmentParam& seg, const TauParam& tau) {
    if (seg.rho.selfdual == SelfDualType::none) return ArthurOrder::trivial;
    const int mult = tau.contains(seg.rho.id, seg.a) ? 3 : 2;
    const FormType sub = segment_factor_type(seg) == FactorTarget::GSp ? FormType::symplectic
                                                                       : FormType::symmetric;
    // Ambient dual group GSp_{2n}: a symplectic form.
    const CentralizerType c = multiplicity_centralizer(FormType::symplectic, sub, mult);
    // Only GO(even) pushes the torus flip outside the connected part; in
    // GO(odd) and GSp(m) the flip is realized in the identity component.
    if (c.kind == CentralizerType::Kind::GO && c.k % 2 == 0) return ArthurOrder::z2;
    return ArthurOrder::trivial;
}

namespace {

std::string segment_label(const SegmentParam& seg) {
    return seg.rho.id + "@" + std::to_string(seg.a);
}

void require_family_b(const LeviSpec& levi, const char* who) {
    if (levi.family() != Family::B)
        throw std::invalid_argument(std::string(who) +
                                    ": parameter-side computation beyond the Siegel case is "
                                    "supported for family B only");
}

}  // namespace

InertiaDatum derive_inertia(const LeviSpec& levi, const std::vector<SegmentParam>& blocks,
                            const TauParam& tau) {
    require_family_b(levi, "derive_inertia");
    const int r = levi.rank();
    if (static_cast<int>(blocks.size()) != r)
        throw std::invalid_argument("derive_inertia: one segment per block required");
    for (int i = 0; i < r; ++i)
        if (blocks[static_cast<size_t>(i)].rho.dim * blocks[static_cast<size_t>(i)].a !=
            levi.block(i))
            throw std::invalid_argument("derive_inertia: segment dimension does not match block");

    InertiaDatum sigma;
    std::map<std::string, int> index;
    auto intern = [&](const std::string& name, int size) {
        auto [it, fresh] = index.emplace(name, sigma.label_count());
        if (fresh) {
            sigma.labels.push_back(name);
            sigma.dual.push_back(-1);
            sigma.reducible.push_back(0);
            sigma.size_of.push_back(size);
        }
        return it->second;
    };
    std::map<std::string, const CuspParam*> cusps;
    for (const SegmentParam& seg : blocks) {
        auto [it, fresh] = cusps.emplace(seg.rho.id, &seg.rho);
        if (!fresh && !(*it->second == seg.rho))
            throw std::invalid_argument("derive_inertia: conflicting data for cuspidal id " +
                                        seg.rho.id);
    }

    for (const SegmentParam& seg : blocks) {
        const int size = seg.rho.dim * seg.a;
        const int l = intern(segment_label(seg), size);
        sigma.assign.push_back(l);
        if (seg.rho.selfdual != SelfDualType::none) {
            sigma.dual[static_cast<size_t>(l)] = l;
            sigma.reducible[static_cast<size_t>(l)] = rank_one_reducibility(seg, tau) ? 1 : 0;
            continue;
        }
        int partner;
        if (seg.rho.dual_id) {
            auto it = cusps.find(*seg.rho.dual_id);
            if (it == cusps.end())
                throw std::invalid_argument(
                    "derive_inertia: declared dual partner '" + *seg.rho.dual_id +
                    "' of '" + seg.rho.id + "' does not occur; explicit pairing required");
            const CuspParam& mate = *it->second;
            if (mate.selfdual != SelfDualType::none || mate.dim != seg.rho.dim ||
                !mate.dual_id || *mate.dual_id != seg.rho.id)
                throw std::invalid_argument("derive_inertia: dual pairing of '" + seg.rho.id +
                                            "' and '" + mate.id + "' is not reciprocal");
            partner = intern(mate.id + "@" + std::to_string(seg.a), size);
        } else {
            partner = intern(segment_label(seg) + "~", size);
        }
        sigma.dual[static_cast<size_t>(l)] = partner;
        sigma.dual[static_cast<size_t>(partner)] = l;
    }
    return sigma;
}

namespace {

std::vector<WeylElement> close_subgroup(const LeviSpec& levi, std::vector<WeylElement> gens) {
    std::vector<WeylElement> elems{identity(levi)};
    std::sort(elems.begin(), elems.end(), element_less);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<WeylElement> fresh;
        for (const WeylElement& a : elems)
            for (const WeylElement& g : gens) {
                WeylElement p = multiply(levi, a, g);
                if (!std::binary_search(elems.begin(), elems.end(), p, element_less) &&
                    !std::binary_search(fresh.begin(), fresh.end(), p, element_less)) {
                    fresh.insert(std::upper_bound(fresh.begin(), fresh.end(), p, element_less), p);
                }
            }
        if (!fresh.empty()) {
            grew = true;
            std::vector<WeylElement> merged;
            std::merge(elems.begin(), elems.end(), fresh.begin(), fresh.end(),
                       std::back_inserter(merged), element_less);
            elems = std::move(merged);
        }
    }
    return elems;
}

// Preference for coset display: fewest flips, then the numerically largest
// mask (drops indices that an equivalent later block could stand in for).
bool rep_preferred(const WeylElement& a, const WeylElement& b) {
    const int pa = std::popcount(a.flips), pb = std::popcount(b.flips);
    if (pa != pb) return pa < pb;
    return a.flips > b.flips;
}

}  // namespace

ArthurRGroup arthur_r_group_general(const LeviSpec& levi, const std::vector<SegmentParam>& blocks,
                                    const TauParam& tau) {
    require_family_b(levi, "arthur_r_group_general");
    const InertiaDatum sigma = derive_inertia(levi, blocks, tau);

    ArthurRGroup out;
    out.stabilizer = stabilizer(levi, sigma);
    for (const ReducedRoot& root : delta_prime(levi, sigma)) {
        switch (root.kind) {
            case ReducedRoot::Kind::alpha: {
                std::vector<int> perm(static_cast<size_t>(levi.rank()));
                for (int k = 0; k < levi.rank(); ++k) perm[static_cast<size_t>(k)] = k;
                std::swap(perm[static_cast<size_t>(root.i)], perm[static_cast<size_t>(root.j)]);
                out.reflection_gens.push_back(make_element(levi, std::move(perm), 0));
                break;
            }
            case ReducedRoot::Kind::beta: {
                std::vector<int> perm(static_cast<size_t>(levi.rank()));
                for (int k = 0; k < levi.rank(); ++k) perm[static_cast<size_t>(k)] = k;
                std::swap(perm[static_cast<size_t>(root.i)], perm[static_cast<size_t>(root.j)]);
                out.reflection_gens.push_back(make_element(
                    levi, std::move(perm), (1u << root.i) | (1u << root.j)));
                break;
            }
            case ReducedRoot::Kind::gamma:
                out.reflection_gens.push_back(sign_change(levi, 1u << root.i));
                break;
        }
    }
    out.reflection_subgroup = close_subgroup(levi, out.reflection_gens);

    // Left cosets of W0 in W_{phi,sigma}, in stabilizer order.
    std::vector<char> used(out.stabilizer.size(), 0);
    for (size_t i = 0; i < out.stabilizer.size(); ++i) {
        if (used[i]) continue;
        std::vector<WeylElement> coset;
        for (const WeylElement& v : out.reflection_subgroup) {
            WeylElement p = multiply(levi, out.stabilizer[i], v);
            auto it = std::lower_bound(out.stabilizer.begin() + static_cast<long>(i),
                                       out.stabilizer.end(), p, element_less);
            if (it == out.stabilizer.end() || !(*it == p)) {
                // W0 must sit inside the stabilizer; anything else is an
                // internal inconsistency.
                throw std::logic_error("arthur_r_group_general: W0 escapes the stabilizer");
            }
            used[static_cast<size_t>(it - out.stabilizer.begin())] = 1;
            coset.push_back(p);
        }
        std::sort(coset.begin(), coset.end(), element_less);
        out.cosets.push_back(std::move(coset));
    }
    for (const auto& coset : out.cosets) {
        const WeylElement* best = nullptr;
        for (const WeylElement& w : coset) {
            if (!w.is_pure_sign_change()) continue;
            if (!best || rep_preferred(w, *best)) best = &w;
        }
        if (best) out.reps.push_back(*best);
    }
    size_t count = out.cosets.size();
    out.rank = std::has_single_bit(count) ? std::countr_zero(count) : -1;
    return out;
}

namespace {

int coset_index(const ArthurRGroup& a, const WeylElement& w) {
    for (size_t k = 0; k < a.cosets.size(); ++k)
        if (std::binary_search(a.cosets[k].begin(), a.cosets[k].end(), w, element_less))
            return static_cast<int>(k);
    return -1;
}

}  // namespace

bool match_check(const LeviSpec& levi, const std::vector<SegmentParam>& blocks,
                 const TauParam& tau) {
    require_family_b(levi, "match_check");
    const InertiaDatum sigma = derive_inertia(levi, blocks, tau);
    const RGroup ks = r_group_closed_form(levi, sigma);
    const ArthurRGroup arthur = arthur_r_group_general(levi, blocks, tau);
    if (ks.elements.size() != arthur.cosets.size()) return false;
    std::set<int> hit;
    for (const WeylElement& w : ks.elements) {
        int k = coset_index(arthur, w);
        if (k < 0 || !hit.insert(k).second) return false;
    }
    return hit.size() == arthur.cosets.size();
}

}  // namespace gspin
