#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rostering/instance.hpp"

namespace rostering {

/// A contract: the nurse works either `days` day shifts or `nights` night
/// shifts; its feasible set is the union of both enumerations.
struct ContractOption {
    int days = 0;
    int nights = 0;
    long long weight = 1;  // relative frequency in the mix
};

struct GenSpec {
    int num_nurses_min = 20;
    int num_nurses_max = 30;
    int num_grades = 3;
    std::vector<ContractOption> contracts = {
        {5, 4, 7},  // full time
        {4, 3, 1},  // part time options
        {3, 3, 1},
        {3, 2, 1},
    };
    double cost_mean = 25.0;       // truncated-geometric preference costs, biased low
    double tightness = 0.9;        // demand as a fraction of expected coverage; > 1 forces shortage
    bool shortage = false;         // raise one demand cell above achievable supply
    int max_patterns_per_nurse = 0;  // 0 = full contract enumeration, else seeded subsample
    std::uint64_t seed = 0;

    void validate() const;
};

/// Deterministic in the seed; output is canonical (load(save(x)) == x).
Instance generate(const GenSpec& spec);

/// Desk-scale presets small enough for the exhaustive oracle:
///   tiny-4x3      4 nurses, 3 patterns each, 2 grades
///   tiny-6x3      6 nurses, 3 patterns each, 3 grades
///   tiny-shortage tiny-4x3 structure with one unsatisfiable demand cell
Instance generate_tiny(const std::string& preset, std::uint64_t seed);

std::vector<std::string> tiny_preset_names();

}  // namespace rostering
