#include "gspin/sweep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "gspin/elliptic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gspin {

std::string check_name(Check c) {
    switch (c) {
        case Check::rgroup_equivalence: return "rgroup-equivalence";
        case Check::rgroup_structure: return "rgroup-structure";
        case Check::cocycle: return "cocycle";
        case Check::elliptic: return "elliptic";
        case Check::sign_characters: return "sign-characters";
        case Check::match: return "match";
        case Check::mutation: return "mutation";
        default: return "siegel";
    }
}

std::vector<Check> all_checks() {
    return {Check::rgroup_equivalence, Check::rgroup_structure, Check::cocycle,
            Check::elliptic,           Check::sign_characters, Check::match,
            Check::mutation,           Check::siegel};
}

std::optional<Check> parse_check(const std::string& name) {
    for (Check c : all_checks())
        if (check_name(c) == name) return c;
    return std::nullopt;
}

namespace {
bool param_check(Check c) { return c == Check::match || c == Check::mutation; }
}  // namespace

std::vector<Check> effective_checks(const SweepConfig& cfg) {
    if (!cfg.checks.empty()) return cfg.checks;
    std::vector<Check> out;
    for (Check c : all_checks())
        if (cfg.family == Family::B || !param_check(c)) out.push_back(c);
    return out;
}

namespace {

bool is_sigma_check(Check c) { return !param_check(c) && c != Check::siegel; }

std::string render_elements(const std::vector<WeylElement>& els) {
    std::string out = "{";
    for (size_t k = 0; k < els.size(); ++k) {
        if (k) out += ", ";
        out += render_element(els[k]);
    }
    return out + "}";
}

void fail(std::vector<Failure>& out, const Instance& inst, Check c, std::string expected,
          std::string got) {
    out.push_back({inst, check_name(c), std::move(expected), std::move(got)});
}

void check_rgroup_equivalence(const Instance& inst, std::vector<Failure>& out) {
    const RGroup bf = r_group_bruteforce(inst.levi, inst.sigma);
    const RGroup cf = r_group_closed_form(inst.levi, inst.sigma);
    if (bf.elements != cf.elements)
        fail(out, inst, Check::rgroup_equivalence, render_elements(cf.elements),
             render_elements(bf.elements));
}

void check_rgroup_structure(const Instance& inst, std::vector<Failure>& out) {
    const RGroup bf = r_group_bruteforce(inst.levi, inst.sigma);
    for (const WeylElement& w : bf.elements) {
        if (!w.is_pure_sign_change())
            fail(out, inst, Check::rgroup_structure, "pure sign changes only", render_element(w));
        WeylElement sq = multiply(inst.levi, w, w);
        if (!sq.is_identity())
            fail(out, inst, Check::rgroup_structure, "every element squares to 1",
                 render_element(w));
    }
    for (const WeylElement& a : bf.elements)
        for (const WeylElement& b : bf.elements)
            if (!(multiply(inst.levi, a, b) == multiply(inst.levi, b, a)))
                fail(out, inst, Check::rgroup_structure, "abelian",
                     render_element(a) + " vs " + render_element(b));
    if (bf.elements.size() != size_t(1) << bf.rank)
        fail(out, inst, Check::rgroup_structure, "order 2^d",
             std::to_string(bf.elements.size()) + " with d=" + std::to_string(bf.rank));
}

void check_cocycle(const Instance& inst, std::vector<Failure>& out) {
    const auto section = splitting_section(inst.levi, inst.sigma);
    auto op_of = [&](const WeylElement& w) -> const FormalOperator* {
        for (const auto& [v, op] : section)
            if (v == w) return &op;
        return nullptr;
    };
    for (const auto& [w1, op1] : section)
        for (const auto& [w2, op2] : section) {
            const WeylElement prod = multiply(inst.levi, w1, w2);
            const FormalOperator* expect = op_of(prod);
            if (!expect || !(compose(op1, op2) == *expect))
                fail(out, inst, Check::cocycle, "T_{w1 w2} = T_{w1} T_{w2}",
                     render_element(w1) + " * " + render_element(w2));
        }
}

void check_elliptic(const Instance& inst, std::vector<Failure>& out) {
    const EllipticClass ec = classify_elliptic(inst.levi, inst.sigma);
    // When the product of all the generators lies in R (it flips the union
    // of the generator supports), it must cut out a_R exactly.
    unsigned support = 0;
    for (const WeylElement& w : ec.r_group.elements) support |= w.flips;
    for (const WeylElement& w : ec.r_group.elements)
        if (w.flips == support) {
            if (!(fixed_space(inst.levi, w) == ec.a_r))
                fail(out, inst, Check::elliptic, "a_R = a_{w0} for the full-support element",
                     render_element(w));
            break;
        }
    // Closed-form version of the irreducibly-induced criterion.
    bool expect_inducing = true;
    if (inst.levi.family() == Family::D &&
        (inst.levi.m() == 0 || !inst.sigma.cn_fixes_tau)) {
        const RGroup cf = r_group_closed_form(inst.levi, inst.sigma);
        const size_t d2 = cf.omega2.size();
        expect_inducing = d2 % 2 == 0 || d2 <= 1;
    }
    if (ec.irreducibly_induced != expect_inducing)
        fail(out, inst, Check::elliptic, std::string("inducing witness: ") +
             (expect_inducing ? "yes" : "no"), ec.irreducibly_induced ? "yes" : "no");
    if (ec.has_elliptic && !ec.irreducibly_induced)
        fail(out, inst, Check::elliptic, "elliptic implies irreducibly induced", "violated");
}

void check_sign_characters(const Instance& inst, std::vector<Failure>& out) {
    const RGroup r = r_group_bruteforce(inst.levi, inst.sigma);
    const unsigned full = (1u << inst.levi.rank()) - 1u;
    bool has_c0 = false;
    for (const WeylElement& w : r.elements) has_c0 = has_c0 || w.flips == full;
    if (!has_c0) return;  // not elliptic; nothing to check
    const WeylElement c0 = c0_element(inst.levi, r);
    int odd_blocks = 0;
    for (int i = 0; i < inst.levi.rank(); ++i)
        if (inst.levi.block_odd(i)) ++odd_blocks;
    const bool expect_cn = inst.levi.family() == Family::D && inst.levi.m() > 0 &&
                           inst.sigma.cn_fixes_tau && odd_blocks % 2 != 0;
    if (c0.cn != expect_cn)
        fail(out, inst, Check::sign_characters, std::string("C_0 c_n-variant: ") +
             (expect_cn ? "yes" : "no"), c0.cn ? "yes" : "no");
    const auto chars = sign_characters(inst.levi, r);
    if (chars.size() != size_t(1) << r.rank)
        fail(out, inst, Check::sign_characters, "2^d characters", std::to_string(chars.size()));
    size_t plus = 0;
    for (const SignChar& chi : chars) plus += chi.epsilon > 0;
    if (r.rank >= 1 && plus != size_t(1) << (r.rank - 1))
        fail(out, inst, Check::sign_characters, "exactly 2^{d-1} characters with epsilon = +1",
             std::to_string(plus));
    if (chars.empty() || chars.front().epsilon != 1)
        fail(out, inst, Check::sign_characters, "epsilon(trivial) = +1", "violated");
}

void check_match(const Instance& inst, std::vector<Failure>& out) {
    if (!inst.params) return;
    if (!match_check(inst.levi, inst.params->blocks, inst.params->tau)) {
        fail(out, inst, Check::match, "R(sigma) ~ R_{phi,sigma} element-by-element", "mismatch");
        return;
    }
    if (inst.levi.rank() == 1) {
        const auto general =
            arthur_r_group_general(inst.levi, inst.params->blocks, inst.params->tau);
        const ArthurOrder maximal =
            arthur_r_group_maximal(inst.params->blocks[0], inst.params->tau);
        const int expect = maximal == ArthurOrder::z2 ? 1 : 0;
        if (general.rank != expect)
            fail(out, inst, Check::match, "maximal-case rank " + std::to_string(expect),
                 std::to_string(general.rank));
    }
}

// Side signatures for the mutation test.
std::pair<std::string, std::string> side_signature(const Instance& inst) {
    const InertiaDatum sigma = derive_inertia(inst.levi, inst.params->blocks, inst.params->tau);
    const RGroup ks = r_group_closed_form(inst.levi, sigma);
    const ArthurRGroup ar = arthur_r_group_general(inst.levi, inst.params->blocks,
                                                   inst.params->tau);
    return {render_elements(ks.elements),
            std::to_string(ar.cosets.size()) + ":" + render_elements(ar.reps)};
}

struct Mutation {
    Instance instance;
    bool must_move;  // Jordan toggles flip one class bit in place
};

std::vector<Mutation> mutations_of(const Instance& inst) {
    std::vector<Mutation> out;
    const ParamSide& ps = *inst.params;
    auto rebuild = [&](std::vector<SegmentParam> blocks, TauParam tau, bool must_move) {
        std::vector<int> sizes;
        int n = inst.levi.m();
        for (const SegmentParam& seg : blocks) {
            sizes.push_back(seg.rho.dim * seg.a);
            n += seg.rho.dim * seg.a;
        }
        LeviSpec levi({Family::B, n}, sizes, inst.levi.m());
        std::sort(tau.jordan.begin(), tau.jordan.end());
        InertiaDatum sigma = derive_inertia(levi, blocks, tau);
        out.push_back({Instance{levi, std::move(sigma),
                                ParamSide{std::move(blocks), std::move(tau)}},
                       must_move});
    };
    std::set<std::pair<std::string, int>> toggled;
    for (const SegmentParam& seg : ps.blocks) {
        if (seg.rho.selfdual == SelfDualType::none) continue;
        // Jordan toggle at the exact segment, when the parity admits it.
        const bool two_b_plus_one_even = *seg.rho.b == ReducPoint::half;
        if ((seg.a % 2 == 0) == two_b_plus_one_even &&
            toggled.insert({seg.rho.id, seg.a}).second) {
            TauParam tau = ps.tau;
            if (tau.contains(seg.rho.id, seg.a)) {
                std::erase(tau.jordan, std::pair<std::string, int>{seg.rho.id, seg.a});
            } else {
                tau.jordan.emplace_back(seg.rho.id, seg.a);
            }
            rebuild(ps.blocks, tau, true);
        }
    }
    for (size_t i = 0; i < ps.blocks.size(); ++i) {
        if (ps.blocks[i].rho.selfdual == SelfDualType::none) continue;
        // a-parity bump on one self-dual block.
        std::vector<SegmentParam> blocks = ps.blocks;
        blocks[i].a += 1;
        rebuild(std::move(blocks), ps.tau, false);
    }
    std::set<std::string> flipped;
    for (const SegmentParam& seg : ps.blocks) {
        if (seg.rho.selfdual == SelfDualType::none || seg.rho.dim % 2 != 0) continue;
        if (!flipped.insert(seg.rho.id).second) continue;
        // Self-duality type flip, with the b-point remapped and the
        // now-impossible Jordan entries dropped.
        CuspParam rho = seg.rho;
        rho.selfdual = rho.selfdual == SelfDualType::orthogonal ? SelfDualType::symplectic
                                                                : SelfDualType::orthogonal;
        rho.b = rho.selfdual == SelfDualType::orthogonal ? ReducPoint::half : ReducPoint::zero;
        std::vector<SegmentParam> blocks = ps.blocks;
        for (SegmentParam& b : blocks)
            if (b.rho.id == rho.id) b.rho = rho;
        TauParam tau = ps.tau;
        std::erase_if(tau.jordan, [&](const auto& e) { return e.first == rho.id; });
        rebuild(std::move(blocks), tau, false);
    }
    return out;
}

void check_mutation(const Instance& inst, std::vector<Failure>& out) {
    if (!inst.params) return;
    const auto base = side_signature(inst);
    for (const Mutation& m : mutations_of(inst)) {
        const Instance& mut = m.instance;
        if (!validate(mut).empty()) {
            fail(out, inst, Check::mutation, "mutated instance stays consistent",
                 validate(mut).front());
            continue;
        }
        // A Jordan toggle flips the reducibility bit of one class in place,
        // so both groups must move.  An a-bump or type flip can trade one
        // cause of irreducibility for another, or merge two classes, and
        // then the groups legitimately stay put; for those only the match
        // verdict is asserted.
        if (m.must_move && side_signature(mut) == base)
            fail(out, mut, Check::mutation, "Jordan toggle moves both sides", "no change");
        if (!match_check(mut.levi, mut.params->blocks, mut.params->tau))
            fail(out, mut, Check::mutation, "match survives the mutation", "mismatch");
    }
}

Instance siegel_instance(Family family, const CuspParam& rho, int n) {
    LeviSpec levi({family, n}, {n}, 0);
    InertiaDatum sigma;
    if (rho.selfdual == SelfDualType::none) {
        sigma.labels = {"a", "b"};
        sigma.assign = {0};
        sigma.dual = {1, 0};
        sigma.reducible = {0, 0};
        sigma.size_of = {n, n};
    } else {
        sigma.labels = {"a"};
        sigma.assign = {0};
        sigma.dual = {0};
        sigma.reducible = {siegel_reducible(family, rho) ? char(1) : char(0)};
        sigma.size_of = {n};
    }
    return Instance{levi, std::move(sigma), std::nullopt};
}

}  // namespace

void run_siegel_check(std::vector<Failure>& out) {
    for (int n = 1; n <= 4; ++n) {
        std::vector<CuspParam> variants;
        variants.push_back({"phi0", n, SelfDualType::orthogonal, ReducPoint::half, {}});
        if (n % 2 == 0)
            variants.push_back({"phi0", n, SelfDualType::symplectic, ReducPoint::zero, {}});
        variants.push_back({"phi0", n, SelfDualType::none, {}, {}});
        for (const CuspParam& rho : variants) {
            if (rho.selfdual != SelfDualType::none) {
                const PoleKind pole = siegel_pole(rho);
                const PoleKind expect_pole = rho.selfdual == SelfDualType::symplectic
                                                 ? PoleKind::exterior_square
                                                 : PoleKind::symmetric_square;
                if (pole != expect_pole)
                    fail(out, siegel_instance(Family::B, rho, n), Check::siegel,
                         "pole matches the self-duality type", "other pole");
                const bool rb = siegel_reducible(Family::B, rho);
                const bool rd = siegel_reducible(Family::D, rho);
                if (n % 2 == 0 && rb == rd)
                    fail(out, siegel_instance(Family::B, rho, n), Check::siegel,
                         "opposite Siegel verdicts for even n", rb ? "both reduce" : "neither");
                if (n % 2 != 0 && (rb || rd))
                    fail(out, siegel_instance(Family::B, rho, n), Check::siegel,
                         "odd n is irreducible on both sides", "reducible");
            }
            for (Family family : {Family::B, Family::D}) {
                const Instance inst = siegel_instance(family, rho, n);
                bool expect_z2 = false;
                if (rho.selfdual == SelfDualType::symplectic) expect_z2 = family == Family::B;
                if (rho.selfdual == SelfDualType::orthogonal)
                    expect_z2 = family == Family::D && n % 2 == 0;
                try {
                    const CentralizerType c = siegel_centralizer(rho, family, n);
                    if (c.z2 != expect_z2)
                        fail(out, inst, Check::siegel,
                             std::string("component group ") + (expect_z2 ? "Z_2" : "1"),
                             render_centralizer(c));
                    const RGroup ks = r_group_closed_form(inst.levi, inst.sigma);
                    if (ks.rank != (expect_z2 ? 1 : 0))
                        fail(out, inst, Check::siegel,
                             "R-group rank equals the component group order",
                             std::to_string(ks.rank));
                    const RGroup bf = r_group_bruteforce(inst.levi, inst.sigma);
                    if (bf.elements != ks.elements)
                        fail(out, inst, Check::siegel, "closed form equals brute force",
                             render_elements(bf.elements));
                } catch (const std::exception& e) {
                    fail(out, inst, Check::siegel, "table and mu*c cross-check agree", e.what());
                }
            }
        }
    }
}

void run_checks_on_instance(const SweepConfig& cfg, const Instance& inst,
                            std::vector<Failure>& out) {
    const auto violations = validate(inst);
    if (!violations.empty()) {
        out.push_back({inst, "validate", "consistent instance", violations.front()});
        return;
    }
    const std::vector<Check> checks = effective_checks(cfg);
    for (Check c : checks) {
        if (param_check(c) && !inst.params) continue;
        if (c == Check::siegel) continue;
        try {
            switch (c) {
                case Check::rgroup_equivalence: check_rgroup_equivalence(inst, out); break;
                case Check::rgroup_structure: check_rgroup_structure(inst, out); break;
                case Check::cocycle: check_cocycle(inst, out); break;
                case Check::elliptic: check_elliptic(inst, out); break;
                case Check::sign_characters: check_sign_characters(inst, out); break;
                case Check::match: check_match(inst, out); break;
                case Check::mutation: check_mutation(inst, out); break;
                default: break;
            }
        } catch (const std::exception& e) {
            fail(out, inst, c, "no internal error", e.what());
        }
    }
}

namespace {

std::vector<Instance> build_stream(const SweepConfig& cfg) {
    const std::vector<Check> checks = effective_checks(cfg);
    bool want_sigma = false, want_param = false;
    for (Check c : checks) {
        want_sigma = want_sigma || is_sigma_check(c);
        want_param = want_param || param_check(c);
    }
    std::vector<Instance> stream;
    EnumConfig ec{cfg.family, cfg.max_r, cfg.max_block, cfg.alphabet};
    if (cfg.count) {
        if (want_sigma && *cfg.count > 0) {
            auto sampled = random_instances(ec, cfg.seed.value_or(0), *cfg.count);
            stream.insert(stream.end(), sampled.begin(), sampled.end());
        }
        return stream;  // random mode samples the sigma side only
    }
    if (want_sigma) {
        auto sigma_stream = enumerate_instances(ec);
        stream.insert(stream.end(), sigma_stream.begin(), sigma_stream.end());
    }
    if (want_param) {
        ParamEnumConfig pc{cfg.max_r, cfg.max_dim, cfg.max_a, cfg.max_jordan};
        auto params = enumerate_param_instances(pc);
        stream.insert(stream.end(), params.begin(), params.end());
    }
    return stream;
}

bool siegel_wanted(const SweepConfig& cfg) {
    const std::vector<Check> checks = effective_checks(cfg);
    return std::find(checks.begin(), checks.end(), Check::siegel) != checks.end();
}

}  // namespace

SweepReport run_sweep_serial(const SweepConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    const std::vector<Instance> stream = build_stream(cfg);
    report.total = stream.size();
    for (const Instance& inst : stream) run_checks_on_instance(cfg, inst, report.failures);
    if (siegel_wanted(cfg)) run_siegel_check(report.failures);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

SweepReport run_sweep_parallel(const SweepConfig& cfg) {
#ifndef _OPENMP
    return run_sweep_serial(cfg);
#else
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    const std::vector<Instance> stream = build_stream(cfg);
    report.total = stream.size();
    std::vector<std::vector<Failure>> buckets(stream.size());
#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads)
    for (long i = 0; i < static_cast<long>(stream.size()); ++i)
        run_checks_on_instance(cfg, stream[static_cast<size_t>(i)],
                               buckets[static_cast<size_t>(i)]);
    for (auto& bucket : buckets)
        for (Failure& f : bucket) report.failures.push_back(std::move(f));
    if (siegel_wanted(cfg)) run_siegel_check(report.failures);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
#endif
}

SweepReport run_sweep(const SweepConfig& cfg) {
    return cfg.threads > 1 ? run_sweep_parallel(cfg) : run_sweep_serial(cfg);
}

bool same_outcome(const SweepReport& a, const SweepReport& b) {
    if (a.total != b.total || a.failures.size() != b.failures.size()) return false;
    for (size_t k = 0; k < a.failures.size(); ++k) {
        const Failure& x = a.failures[k];
        const Failure& y = b.failures[k];
        if (x.check != y.check || x.expected != y.expected || x.got != y.got ||
            instance_key(x.instance) != instance_key(y.instance))
            return false;
    }
    return true;
}

nlohmann::ordered_json report_to_json(const SweepConfig& cfg, const SweepReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = "gspin-report/1";
    nlohmann::ordered_json cj;
    cj["family"] = cfg.family == Family::B ? "B" : "D";
    cj["max_r"] = cfg.max_r;
    cj["max_block"] = cfg.max_block;
    cj["alphabet"] = cfg.alphabet;
    cj["max_dim"] = cfg.max_dim;
    cj["max_a"] = cfg.max_a;
    cj["max_jordan"] = cfg.max_jordan;
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (Check c : effective_checks(cfg)) names.push_back(check_name(c));
    cj["checks"] = names;
    if (cfg.seed) cj["seed"] = *cfg.seed;
    if (cfg.count) cj["count"] = *cfg.count;
    cj["threads"] = cfg.threads;
    j["config"] = cj;
    j["total"] = report.total;
    j["passed"] = report.passed();
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const Failure& f : report.failures) {
        nlohmann::ordered_json fj;
        fj["check"] = f.check;
        fj["expected"] = f.expected;
        fj["got"] = f.got;
        fj["instance"] = instance_to_json(f.instance);
        fails.push_back(fj);
    }
    j["failures"] = fails;
    j["elapsed_ms"] = report.elapsed.count();
    return j;
}

}  // namespace gspin
