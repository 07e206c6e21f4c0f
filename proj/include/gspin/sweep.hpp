#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gspin/instance.hpp"

namespace gspin {

// Registered property checks.  Sigma-side checks run on every instance;
// match and mutation need parameter data; siegel is a global table check
// run once per sweep.
enum class Check {
    rgroup_equivalence,
    rgroup_structure,
    cocycle,
    elliptic,
    sign_characters,
    match,
    mutation,
    siegel,
};

std::string check_name(Check c);
std::optional<Check> parse_check(const std::string& name);
std::vector<Check> all_checks();

struct SweepConfig;

// Explicit checks if given; otherwise everything applicable to the family
// (the parameter-side checks are family-B territory).
std::vector<Check> effective_checks(const SweepConfig& cfg);

struct SweepConfig {
    Family family = Family::B;
    int max_r = 3;
    int max_block = 2;
    int alphabet = 3;
    int max_dim = 2;
    int max_a = 3;
    int max_jordan = 2;
    std::vector<Check> checks;            // empty = all applicable
    std::optional<std::uint64_t> seed;    // random mode (with count)
    std::optional<int> count;             // number of random instances
    int threads = 1;
};

struct Failure {
    Instance instance;
    std::string check;
    std::string expected;
    std::string got;
};

struct SweepReport {
    std::size_t total = 0;
    std::vector<Failure> failures;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return failures.empty(); }
};

// Same report content regardless of thread count (modulo elapsed).
bool same_outcome(const SweepReport& a, const SweepReport& b);

// Run the configured checks on one instance, appending failures.
void run_checks_on_instance(const SweepConfig& cfg, const Instance& inst,
                            std::vector<Failure>& out);

// The global Siegel-table check (independent of the instance stream).
void run_siegel_check(std::vector<Failure>& out);

SweepReport run_sweep_serial(const SweepConfig& cfg);    // reference implementation
SweepReport run_sweep_parallel(const SweepConfig& cfg);  // OpenMP over index ranges
SweepReport run_sweep(const SweepConfig& cfg);           // dispatch on cfg.threads

nlohmann::ordered_json report_to_json(const SweepConfig& cfg, const SweepReport& report);

}  // namespace gspin
