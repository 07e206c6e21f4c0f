#include "gspin/instance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gspin {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

const json& need(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

Family parse_family(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "B") return Family::B;
    if (s == "D") return Family::D;
    bad("group.family must be \"B\" or \"D\"");
}

SelfDualType parse_selfdual(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "orth") return SelfDualType::orthogonal;
    if (s == "symp") return SelfDualType::symplectic;
    if (s == "none") return SelfDualType::none;
    bad("selfdual must be \"orth\", \"symp\" or \"none\"");
}

std::optional<ReducPoint> parse_b(const json& j) {
    if (j.is_null()) return std::nullopt;
    const std::string s = j.get<std::string>();
    if (s == "0") return ReducPoint::zero;
    if (s == "1/2") return ReducPoint::half;
    if (s == "1") return ReducPoint::one;
    bad("b must be \"0\", \"1/2\", \"1\" or null");
}

std::string render_b(ReducPoint b) {
    switch (b) {
        case ReducPoint::zero: return "0";
        case ReducPoint::half: return "1/2";
        default: return "1";
    }
}

std::string render_selfdual(SelfDualType t) {
    switch (t) {
        case SelfDualType::orthogonal: return "orth";
        case SelfDualType::symplectic: return "symp";
        default: return "none";
    }
}

}  // namespace

Instance parse_instance(const json& j) {
    const json& group = need(j, "group", "instance");
    const json& levi = need(j, "levi", "instance");
    GroupSpec gs{parse_family(need(group, "family", "group")),
                 need(group, "n", "group").get<int>()};
    std::vector<int> blocks = need(levi, "blocks", "levi").get<std::vector<int>>();
    LeviSpec ls(gs, std::move(blocks), need(levi, "m", "levi").get<int>());

    const json& sj = need(j, "sigma", "instance");
    InertiaDatum sigma;
    sigma.labels = need(sj, "labels", "sigma").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (size_t k = 0; k < sigma.labels.size(); ++k) {
        if (!index.emplace(sigma.labels[k], static_cast<int>(k)).second)
            bad("sigma.labels contains a duplicate: " + sigma.labels[k]);
    }
    auto label_of = [&](const json& v, const char* where) {
        auto it = index.find(v.get<std::string>());
        if (it == index.end()) bad(std::string(where) + ": unknown label " + v.dump());
        return it->second;
    };
    for (const json& v : need(sj, "assign", "sigma")) sigma.assign.push_back(label_of(v, "assign"));
    if (sigma.assign.size() != static_cast<size_t>(ls.rank()))
        bad("sigma.assign must give one label per block");

    sigma.dual.resize(sigma.labels.size());
    for (size_t k = 0; k < sigma.labels.size(); ++k) sigma.dual[k] = static_cast<int>(k);
    if (auto it = sj.find("dual"); it != sj.end())
        for (auto& [key, value] : it->items()) {
            auto from = index.find(key);
            if (from == index.end()) bad("dual: unknown label " + key);
            sigma.dual[static_cast<size_t>(from->second)] = label_of(value, "dual");
        }
    sigma.reducible.assign(sigma.labels.size(), 0);
    if (auto it = sj.find("reducible"); it != sj.end())
        for (auto& [key, value] : it->items()) {
            auto from = index.find(key);
            if (from == index.end()) bad("reducible: unknown label " + key);
            sigma.reducible[static_cast<size_t>(from->second)] = value.get<bool>() ? 1 : 0;
        }
    sigma.cn_fixes_tau = sj.value("cn_fixes_tau", false);

    // GL size of a label: the size of a block carrying it, else of one
    // carrying its dual; a label reachable from no block keeps size 0 and
    // validate() will flag any use of it.
    sigma.size_of.assign(sigma.labels.size(), 0);
    for (int i = 0; i < ls.rank(); ++i) {
        int l = sigma.assign[static_cast<size_t>(i)];
        if (sigma.size_of[static_cast<size_t>(l)] == 0)
            sigma.size_of[static_cast<size_t>(l)] = ls.block(i);
    }
    for (size_t k = 0; k < sigma.labels.size(); ++k) {
        int d = sigma.dual[k];
        if (sigma.size_of[k] == 0 && sigma.size_of[static_cast<size_t>(d)] != 0)
            sigma.size_of[k] = sigma.size_of[static_cast<size_t>(d)];
    }

    std::optional<ParamSide> params;
    if (auto pit = j.find("params"); pit != j.end() && !pit->is_null()) {
        ParamSide ps;
        for (const json& bj : need(*pit, "blocks", "params")) {
            SegmentParam seg;
            seg.rho.id = need(bj, "rho", "params.blocks").get<std::string>();
            seg.rho.dim = need(bj, "dim", "params.blocks").get<int>();
            seg.rho.selfdual = parse_selfdual(need(bj, "selfdual", "params.blocks"));
            seg.rho.b = parse_b(need(bj, "b", "params.blocks"));
            if (auto dit = bj.find("dual"); dit != bj.end() && !dit->is_null())
                seg.rho.dual_id = dit->get<std::string>();
            seg.a = need(bj, "a", "params.blocks").get<int>();
            if (seg.rho.dim < 1 || seg.a < 1) bad("params.blocks: dim and a must be positive");
            ps.blocks.push_back(std::move(seg));
        }
        if (auto jit = pit->find("jordan"); jit != pit->end() && !jit->is_null())
            for (const json& ej : *jit)
                ps.tau.jordan.emplace_back(need(ej, "rho", "params.jordan").get<std::string>(),
                                           need(ej, "a", "params.jordan").get<int>());
        std::sort(ps.tau.jordan.begin(), ps.tau.jordan.end());
        params = std::move(ps);
    }
    return Instance{std::move(ls), std::move(sigma), std::move(params)};
}

Instance parse_instance_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("input is not valid JSON");
    return parse_instance(j);
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
    nlohmann::ordered_json j;
    j["group"] = {{"family", inst.levi.family() == Family::B ? "B" : "D"},
                  {"n", inst.levi.n()}};
    j["levi"] = {{"blocks", inst.levi.blocks()}, {"m", inst.levi.m()}};
    nlohmann::ordered_json sj;
    sj["labels"] = inst.sigma.labels;
    std::vector<std::string> assign;
    for (int l : inst.sigma.assign) assign.push_back(inst.sigma.labels[static_cast<size_t>(l)]);
    sj["assign"] = assign;
    nlohmann::ordered_json dual = nlohmann::ordered_json::object();
    for (size_t k = 0; k < inst.sigma.labels.size(); ++k)
        dual[inst.sigma.labels[k]] = inst.sigma.labels[static_cast<size_t>(inst.sigma.dual[k])];
    sj["dual"] = dual;
    nlohmann::ordered_json reducible = nlohmann::ordered_json::object();
    for (size_t k = 0; k < inst.sigma.labels.size(); ++k)
        reducible[inst.sigma.labels[k]] = inst.sigma.reducible[k] != 0;
    sj["reducible"] = reducible;
    if (inst.sigma.cn_fixes_tau) sj["cn_fixes_tau"] = true;
    j["sigma"] = sj;
    if (inst.params) {
        nlohmann::ordered_json pj;
        pj["blocks"] = nlohmann::ordered_json::array();
        for (const SegmentParam& seg : inst.params->blocks) {
            nlohmann::ordered_json bj;
            bj["rho"] = seg.rho.id;
            bj["dim"] = seg.rho.dim;
            bj["selfdual"] = render_selfdual(seg.rho.selfdual);
            bj["b"] = seg.rho.b ? nlohmann::ordered_json(render_b(*seg.rho.b))
                                : nlohmann::ordered_json(nullptr);
            if (seg.rho.dual_id) bj["dual"] = *seg.rho.dual_id;
            bj["a"] = seg.a;
            pj["blocks"].push_back(bj);
        }
        pj["jordan"] = nlohmann::ordered_json::array();
        auto jordan = inst.params->tau.jordan;
        std::sort(jordan.begin(), jordan.end());
        for (const auto& [id, a] : jordan)
            pj["jordan"].push_back({{"rho", id}, {"a", a}});
        j["params"] = pj;
    }
    return j;
}

namespace {

// Canonical sigma for comparisons up to relabeling: compare assign pattern,
// dual structure, reducibility and sizes with canonical label order.
InertiaDatum canonical_sigma(const InertiaDatum& sigma) {
    std::vector<int> order;             // old label index, in canonical order
    std::vector<int> rank(sigma.labels.size(), -1);
    auto visit = [&](int l) {
        if (rank[static_cast<size_t>(l)] >= 0) return;
        rank[static_cast<size_t>(l)] = static_cast<int>(order.size());
        order.push_back(l);
    };
    for (int l : sigma.assign) {
        visit(l);
        visit(sigma.dual[static_cast<size_t>(l)]);
    }
    InertiaDatum out;
    out.cn_fixes_tau = sigma.cn_fixes_tau;
    for (size_t k = 0; k < order.size(); ++k) {
        out.labels.push_back(std::string(1, static_cast<char>('a' + k)));
        out.dual.push_back(rank[static_cast<size_t>(sigma.dual[static_cast<size_t>(order[k])])]);
        out.reducible.push_back(sigma.reducible[static_cast<size_t>(order[k])]);
        out.size_of.push_back(sigma.size_of[static_cast<size_t>(order[k])]);
    }
    for (int l : sigma.assign) out.assign.push_back(rank[static_cast<size_t>(l)]);
    return out;
}

}  // namespace

Instance canonical_instance(const Instance& inst) {
    Instance out{inst.levi, canonical_sigma(inst.sigma), inst.params};
    if (out.params) std::sort(out.params->tau.jordan.begin(), out.params->tau.jordan.end());
    return out;
}

std::string instance_key(const Instance& inst) {
    return instance_to_json(canonical_instance(inst)).dump();
}

std::vector<std::string> validate(const Instance& inst) {
    std::vector<std::string> out = check_inertia(inst.levi, inst.sigma);
    if (!inst.params) return out;
    const ParamSide& ps = *inst.params;
    if (static_cast<int>(ps.blocks.size()) != inst.levi.rank()) {
        out.push_back("params.blocks must give one segment per GL block");
        return out;
    }
    std::map<std::string, const CuspParam*> cusps;
    for (const SegmentParam& seg : ps.blocks) {
        auto [it, fresh] = cusps.emplace(seg.rho.id, &seg.rho);
        if (!fresh && !(*it->second == seg.rho))
            out.push_back("cuspidal id " + seg.rho.id + " declared twice with different data");
    }
    for (int i = 0; i < inst.levi.rank(); ++i) {
        const SegmentParam& seg = ps.blocks[static_cast<size_t>(i)];
        const CuspParam& rho = seg.rho;
        if (rho.dim * seg.a != inst.levi.block(i))
            out.push_back("block " + std::to_string(i + 1) + ": segment dimension " +
                          std::to_string(rho.dim * seg.a) + " does not match block size " +
                          std::to_string(inst.levi.block(i)));
        if (rho.selfdual == SelfDualType::none) {
            if (rho.b) out.push_back("cuspidal " + rho.id + " has a b-point but no self-duality");
        } else {
            if (!rho.b) {
                out.push_back("self-dual cuspidal " + rho.id + " needs a b-point");
            } else {
                const bool orth = rho.selfdual == SelfDualType::orthogonal;
                if (orth != (*rho.b == ReducPoint::half))
                    out.push_back("cuspidal " + rho.id +
                                  ": b = 1/2 goes with the orthogonal type, b in {0,1} with the "
                                  "symplectic type");
            }
            if (rho.dim % 2 != 0 && rho.selfdual == SelfDualType::symplectic)
                out.push_back("cuspidal " + rho.id +
                              ": odd dimension admits no symplectic self-duality");
            if (rho.dual_id)
                out.push_back("cuspidal " + rho.id + ": self-dual blocks take no dual partner");
        }
        if (rho.selfdual == SelfDualType::none && rho.dual_id) {
            auto it = cusps.find(*rho.dual_id);
            if (it == cusps.end()) {
                out.push_back("cuspidal " + rho.id + ": dual partner " + *rho.dual_id +
                              " is not declared");
            } else {
                const CuspParam& mate = *it->second;
                if (mate.selfdual != SelfDualType::none || mate.dim != rho.dim ||
                    !mate.dual_id || *mate.dual_id != rho.id)
                    out.push_back("cuspidal " + rho.id + ": dual pairing with " + mate.id +
                                  " is not reciprocal");
            }
        }
    }
    std::set<std::pair<std::string, int>> seen_jordan;
    for (const auto& [id, a] : ps.tau.jordan) {
        if (!seen_jordan.insert({id, a}).second)
            out.push_back("jordan entry (" + id + "," + std::to_string(a) + ") repeated");
        auto it = cusps.find(id);
        if (it == cusps.end()) {
            out.push_back("jordan entry refers to unknown cuspidal " + id);
            continue;
        }
        const CuspParam& rho = *it->second;
        if (rho.selfdual == SelfDualType::none) {
            out.push_back("jordan entry (" + id + "," + std::to_string(a) +
                          "): class is not self-dual");
            continue;
        }
        if (a < 1) {
            out.push_back("jordan entry (" + id + "," + std::to_string(a) + "): a must be >= 1");
            continue;
        }
        if (rho.b) {
            const bool two_b_plus_one_even = *rho.b == ReducPoint::half;
            if ((a % 2 == 0) != two_b_plus_one_even)
                out.push_back("jordan entry (" + id + "," + std::to_string(a) +
                              "): a has the wrong parity for the reducibility point");
        }
    }
    if (out.empty()) {
        std::optional<InertiaDatum> derived;
        if (inst.levi.family() == Family::B) {
            derived = derive_inertia(inst.levi, ps.blocks, ps.tau);
        } else if (inst.levi.rank() == 1 && inst.levi.m() == 0 && ps.blocks[0].a == 1) {
            // family D Siegel: the reducibility bit comes from the Siegel
            // dictionary rather than a b-point against tau.
            const CuspParam& rho = ps.blocks[0].rho;
            InertiaDatum sigma;
            if (rho.selfdual == SelfDualType::none) {
                sigma.labels = {rho.id, rho.id + "~"};
                sigma.assign = {0};
                sigma.dual = {1, 0};
                sigma.reducible = {0, 0};
                sigma.size_of = {rho.dim, rho.dim};
            } else {
                sigma.labels = {rho.id};
                sigma.assign = {0};
                sigma.dual = {0};
                sigma.reducible = {siegel_reducible(Family::D, rho) ? char(1) : char(0)};
                sigma.size_of = {rho.dim};
            }
            derived = std::move(sigma);
        }
        if (derived) {
            Instance view{inst.levi, *derived, std::nullopt};
            Instance given{inst.levi, inst.sigma, std::nullopt};
            if (instance_key(view) != instance_key(given))
                out.push_back("sigma does not agree with the datum induced by params");
        }
    }
    return out;
}

namespace {

struct SigmaRegime {
    int m;
    bool cn_fixes_tau;
};

std::vector<SigmaRegime> regimes_for(Family family) {
    if (family == Family::B) return {{1, false}};
    return {{0, false}, {1, false}, {1, true}};
}

// Direct enumeration of canonical sigma structures for one Levi: block
// assignments in restricted-growth form (a label reappears only on blocks
// of its size), then a dual structure per used label (self-dual, paired
// with a later used label of the same size, or an external partner eating
// one alphabet slot), then reducibility bits over the self-dual labels.
void enumerate_sigmas(const LeviSpec& levi, bool cn, int alphabet,
                      const std::function<void(const InertiaDatum&)>& emit) {
    const int r = levi.rank();
    std::vector<int> assign(static_cast<size_t>(r), 0);
    std::vector<int> size_of;

    auto emit_with_duals = [&](int used) {
        // dual[k]: -2 undecided, -1 external partner, else partner index
        std::vector<int> dual(static_cast<size_t>(used), -2);
        auto rec = [&](auto&& self, int k, int externals) -> void {
            if (k == used) {
                std::vector<int> selfdual;
                for (int l = 0; l < used; ++l)
                    if (dual[static_cast<size_t>(l)] == l) selfdual.push_back(l);
                for (unsigned red = 0; red < (1u << selfdual.size()); ++red) {
                    InertiaDatum sigma;
                    sigma.cn_fixes_tau = cn;
                    sigma.assign = assign;
                    for (int l = 0; l < used; ++l) {
                        sigma.labels.push_back(std::string(1, static_cast<char>('a' + l)));
                        sigma.dual.push_back(l);
                        sigma.reducible.push_back(0);
                        sigma.size_of.push_back(size_of[static_cast<size_t>(l)]);
                    }
                    for (int l = 0; l < used; ++l) {
                        if (dual[static_cast<size_t>(l)] >= 0) {
                            sigma.dual[static_cast<size_t>(l)] = dual[static_cast<size_t>(l)];
                        } else {
                            const int ext = sigma.label_count();
                            sigma.labels.push_back(std::string(1, static_cast<char>('a' + ext)));
                            sigma.dual.push_back(l);
                            sigma.reducible.push_back(0);
                            sigma.size_of.push_back(size_of[static_cast<size_t>(l)]);
                            sigma.dual[static_cast<size_t>(l)] = ext;
                        }
                    }
                    for (size_t k2 = 0; k2 < selfdual.size(); ++k2)
                        if (red >> k2 & 1u)
                            sigma.reducible[static_cast<size_t>(selfdual[k2])] = 1;
                    emit(sigma);
                }
                return;
            }
            if (dual[static_cast<size_t>(k)] != -2) {
                self(self, k + 1, externals);
                return;
            }
            dual[static_cast<size_t>(k)] = k;
            self(self, k + 1, externals);
            dual[static_cast<size_t>(k)] = -2;
            if (used + externals < alphabet) {
                dual[static_cast<size_t>(k)] = -1;
                self(self, k + 1, externals + 1);
                dual[static_cast<size_t>(k)] = -2;
            }
            for (int j = k + 1; j < used; ++j) {
                if (dual[static_cast<size_t>(j)] != -2 ||
                    size_of[static_cast<size_t>(j)] != size_of[static_cast<size_t>(k)])
                    continue;
                dual[static_cast<size_t>(k)] = j;
                dual[static_cast<size_t>(j)] = k;
                self(self, k + 1, externals);
                dual[static_cast<size_t>(k)] = -2;
                dual[static_cast<size_t>(j)] = -2;
            }
        };
        rec(rec, 0, 0);
    };

    auto assign_rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            emit_with_duals(static_cast<int>(size_of.size()));
            return;
        }
        for (int l = 0; l < static_cast<int>(size_of.size()); ++l) {
            if (size_of[static_cast<size_t>(l)] != levi.block(i)) continue;
            assign[static_cast<size_t>(i)] = l;
            self(self, i + 1);
        }
        if (static_cast<int>(size_of.size()) < alphabet) {
            assign[static_cast<size_t>(i)] = static_cast<int>(size_of.size());
            size_of.push_back(levi.block(i));
            self(self, i + 1);
            size_of.pop_back();
        }
    };
    assign_rec(assign_rec, 0);
}

}  // namespace

std::vector<Instance> enumerate_instances(const EnumConfig& cfg) {
    if (cfg.max_r > 5) throw std::invalid_argument("enumerate_instances: max_r must be <= 5");
    if (cfg.alphabet < 1 || cfg.alphabet > 8)
        throw std::invalid_argument("enumerate_instances: alphabet must be in 1..8");
    std::vector<Instance> out;
    std::set<std::string> seen;
    for (int r = 1; r <= cfg.max_r; ++r) {
        std::vector<int> sizes(static_cast<size_t>(r), 1);
        for (;;) {
            for (const SigmaRegime& regime : regimes_for(cfg.family)) {
                int n = regime.m;
                for (int s : sizes) n += s;
                LeviSpec levi({cfg.family, n}, sizes, regime.m);
                enumerate_sigmas(levi, regime.cn_fixes_tau, cfg.alphabet,
                                 [&](const InertiaDatum& sigma) {
                                     Instance inst{levi, sigma, std::nullopt};
                                     if (!validate(inst).empty()) return;
                                     Instance canon = canonical_instance(inst);
                                     if (seen.insert(instance_key(canon)).second)
                                         out.push_back(std::move(canon));
                                 });
            }
            // next size tuple
            int i = 0;
            while (i < r && ++sizes[static_cast<size_t>(i)] > cfg.max_block)
                sizes[static_cast<size_t>(i++)] = 1;
            if (i == r) break;
        }
    }
    return out;
}

namespace {

struct PoolEntry {
    CuspParam rho;
};

std::vector<CuspParam> cusp_pool(int max_dim) {
    std::vector<CuspParam> pool;
    for (int d = 1; d <= max_dim; ++d) {
        const std::string suffix = std::to_string(d);
        pool.push_back({"o" + suffix + "a", d, SelfDualType::orthogonal, ReducPoint::half, {}});
        pool.push_back({"o" + suffix + "b", d, SelfDualType::orthogonal, ReducPoint::half, {}});
        if (d % 2 == 0) {
            pool.push_back({"s" + suffix + "a", d, SelfDualType::symplectic, ReducPoint::zero, {}});
            pool.push_back({"s" + suffix + "b", d, SelfDualType::symplectic, ReducPoint::one, {}});
        }
        pool.push_back({"n" + suffix + "a", d, SelfDualType::none, {}, "n" + suffix + "b"});
        pool.push_back({"n" + suffix + "b", d, SelfDualType::none, {}, "n" + suffix + "a"});
        pool.push_back({"n" + suffix + "u", d, SelfDualType::none, {}, {}});
    }
    return pool;
}

// Jordan candidates: the self-dual block segments whose a-parity matches
// their reducibility point.
std::vector<std::pair<std::string, int>> jordan_candidates(const std::vector<SegmentParam>& blocks) {
    std::set<std::pair<std::string, int>> cands;
    for (const SegmentParam& seg : blocks) {
        if (seg.rho.selfdual == SelfDualType::none) continue;
        const bool two_b_plus_one_even = *seg.rho.b == ReducPoint::half;
        if ((seg.a % 2 == 0) == two_b_plus_one_even) cands.insert({seg.rho.id, seg.a});
    }
    return {cands.begin(), cands.end()};
}

}  // namespace

std::vector<Instance> enumerate_param_instances(const ParamEnumConfig& cfg) {
    if (cfg.max_r > 4) throw std::invalid_argument("enumerate_param_instances: max_r must be <= 4");
    const std::vector<CuspParam> pool = cusp_pool(cfg.max_dim);
    std::vector<Instance> out;
    std::set<std::string> seen;

    // All per-block (rho, a) choices.
    std::vector<SegmentParam> choices;
    for (const CuspParam& rho : pool)
        for (int a = 1; a <= cfg.max_a; ++a) choices.push_back({rho, a});

    for (int r = 1; r <= cfg.max_r; ++r) {
        std::vector<size_t> pick(static_cast<size_t>(r), 0);
        for (;;) {
            std::vector<SegmentParam> blocks;
            for (size_t p : pick) blocks.push_back(choices[p]);
            // A dual-paired class must bring its partner declaration along;
            // the pool pairs n*a with n*b, so require both or neither.
            bool ok = true;
            for (const SegmentParam& seg : blocks) {
                if (!seg.rho.dual_id) continue;
                bool found = false;
                for (const SegmentParam& other : blocks)
                    if (other.rho.id == *seg.rho.dual_id) found = true;
                if (!found) ok = false;
            }
            if (ok) {
                std::vector<int> sizes;
                int n = 1;
                for (const SegmentParam& seg : blocks) {
                    sizes.push_back(seg.rho.dim * seg.a);
                    n += seg.rho.dim * seg.a;
                }
                LeviSpec levi({Family::B, n}, sizes, 1);
                const auto cands = jordan_candidates(blocks);
                const size_t limit = size_t(1) << cands.size();
                for (size_t jmask = 0; jmask < limit; ++jmask) {
                    if (std::popcount(jmask) > cfg.max_jordan) continue;
                    ParamSide ps;
                    ps.blocks = blocks;
                    for (size_t k = 0; k < cands.size(); ++k)
                        if (jmask >> k & 1) ps.tau.jordan.push_back(cands[k]);
                    InertiaDatum sigma = derive_inertia(levi, ps.blocks, ps.tau);
                    Instance inst{levi, std::move(sigma), std::move(ps)};
                    if (!validate(inst).empty()) continue;
                    if (seen.insert(instance_key(inst)).second) out.push_back(std::move(inst));
                }
            }
            size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices.size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
    return out;
}

std::vector<Instance> random_instances(const EnumConfig& cfg, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard < count * 1000 + 1000) {
        ++guard;
        const int r = pick(1, cfg.max_r);
        std::vector<int> sizes;
        for (int i = 0; i < r; ++i) sizes.push_back(pick(1, cfg.max_block));
        const auto regs = regimes_for(cfg.family);
        const SigmaRegime regime = regs[static_cast<size_t>(pick(0, static_cast<int>(regs.size()) - 1))];
        int n = regime.m;
        for (int s : sizes) n += s;
        LeviSpec levi({cfg.family, n}, sizes, regime.m);
        std::vector<int> assign;
        for (int i = 0; i < r; ++i) assign.push_back(pick(0, cfg.alphabet - 1));
        std::vector<int> dual(static_cast<size_t>(cfg.alphabet));
        for (int k = 0; k < cfg.alphabet; ++k) dual[static_cast<size_t>(k)] = k;
        for (int k = 0; k < cfg.alphabet; ++k) {
            if (dual[static_cast<size_t>(k)] != k) continue;
            int partner = pick(k, cfg.alphabet - 1);
            if (dual[static_cast<size_t>(partner)] == partner) {
                dual[static_cast<size_t>(k)] = partner;
                dual[static_cast<size_t>(partner)] = k;
            }
        }
        unsigned red = static_cast<unsigned>(rng()) & ((1u << cfg.alphabet) - 1u);
        for (int k = 0; k < cfg.alphabet; ++k)
            if (dual[static_cast<size_t>(k)] != k) red &= ~(1u << k);
        InertiaDatum sigma;
        sigma.cn_fixes_tau = regime.cn_fixes_tau;
        sigma.assign = assign;
        for (int k = 0; k < cfg.alphabet; ++k) {
            sigma.labels.push_back(std::string(1, static_cast<char>('a' + k)));
            sigma.dual.push_back(dual[static_cast<size_t>(k)]);
            sigma.reducible.push_back(red >> k & 1u ? 1 : 0);
            sigma.size_of.push_back(0);
        }
        bool sized = true;
        for (int i = 0; i < r && sized; ++i) {
            int& size = sigma.size_of[static_cast<size_t>(assign[static_cast<size_t>(i)])];
            if (size == 0) size = levi.block(i);
            sized = size == levi.block(i);
        }
        if (!sized) continue;
        for (int k = 0; k < cfg.alphabet; ++k) {
            int d = sigma.dual[static_cast<size_t>(k)];
            if (sigma.size_of[static_cast<size_t>(k)] == 0)
                sigma.size_of[static_cast<size_t>(k)] = sigma.size_of[static_cast<size_t>(d)];
        }
        Instance inst{levi, std::move(sigma), std::nullopt};
        if (!validate(inst).empty()) continue;
        out.push_back(canonical_instance(inst));
    }
    return out;
}

}  // namespace gspin
