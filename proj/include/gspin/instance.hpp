#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gspin/lparam.hpp"

namespace gspin {

// Parameter-side data attached to an instance: one segment per GL block
// plus the Jordan data of tau.
struct ParamSide {
    std::vector<SegmentParam> blocks;
    TauParam tau;

    bool operator==(const ParamSide&) const = default;
};

struct Instance {
    LeviSpec levi;
    InertiaDatum sigma;
    std::optional<ParamSide> params;

    bool operator==(const Instance&) const = default;
};

// Structured-text form.  Field names are part of the file contract:
//   {"group": {"family": "B"|"D", "n": int},
//    "levi": {"blocks": [int,...], "m": int},
//    "sigma": {"labels": [...], "assign": [...], "dual": {...},
//              "reducible": {...}, "cn_fixes_tau": bool?},
//    "params": {"blocks": [{"rho","dim","selfdual","b","a","dual"?}],
//               "jordan": [{"rho","a"}]}?}
// Shape errors throw std::invalid_argument; semantic problems are reported
// by validate() as data.
Instance parse_instance(const nlohmann::json& j);
Instance parse_instance_text(const std::string& text);
nlohmann::ordered_json instance_to_json(const Instance& inst);

std::vector<std::string> validate(const Instance& inst);

// Relabels sigma (and drops unreachable labels) so that instances differing
// by a label bijection commuting with dual get one canonical form: labels
// are named a, b, c, ... in order of first occurrence along the blocks,
// each immediately followed by its dual partner.
Instance canonical_instance(const Instance& inst);
std::string instance_key(const Instance& inst);

// Exhaustive enumeration of consistent sigma-side instances up to label
// renaming, in a deterministic order.  Family B runs with m = 1 (the m = 0
// theory is identical); family D runs both m = 0 and m = 1, the latter with
// both values of cn_fixes_tau.
struct EnumConfig {
    Family family = Family::B;
    int max_r = 2;
    int max_block = 2;
    int alphabet = 3;
};
std::vector<Instance> enumerate_instances(const EnumConfig& cfg);

// Exhaustive family-B parameter instances: per-block segments drawn from a
// small pool of tagged cuspidal classes, Jordan sets over the self-dual
// block segments of consistent parity.
struct ParamEnumConfig {
    int max_r = 2;
    int max_dim = 2;
    int max_a = 3;
    int max_jordan = 2;
};
std::vector<Instance> enumerate_param_instances(const ParamEnumConfig& cfg);

// Seeded random instances; equal seeds give identical streams.
std::vector<Instance> random_instances(const EnumConfig& cfg, std::uint64_t seed, int count);

}  // namespace gspin
