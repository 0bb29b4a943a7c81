#pragma once

#include <cstdint>
#include <vector>

#include "rostering/rng.hpp"
#include "rostering/roster.hpp"

namespace rostering {

/// The six building rules, in their fixed order.
enum class RuleId : std::uint8_t {
    Random = 1,
    KCheapest = 2,
    HighestUndercover = 3,
    OverallCover = 4,
    ContributionA = 5,
    ContributionB = 6,
};

inline constexpr int kNumRules = 6;

inline int rule_index(RuleId r) { return static_cast<int>(r) - 1; }
inline RuleId rule_from_index(int j) { return static_cast<RuleId>(j + 1); }
const char* rule_name(RuleId r);

/// One rule choice per nurse, in fixed scheduling order.
using RuleSequence = std::vector<RuleId>;

struct RuleWeights {
    std::vector<long long> grade_weights = {1, 1, 8};  // w1..w3; grades beyond the vector weigh 1
    long long preference_weight = 2;                   // w4
    int cheapest_list_length = 5;                      // k

    long long grade_weight(int grade) const {
        const auto idx = static_cast<std::size_t>(grade - 1);
        return idx < grade_weights.size() ? grade_weights[idx] : 1;
    }
    void validate() const;
};

/// Prefix of a schedule: nurses 0..assigned-1 placed, with running coverage
/// kept identical to compute_coverage of that prefix.
class PartialSchedule {
public:
    explicit PartialSchedule(const Instance& instance);

    const Instance& instance() const { return *instance_; }
    int next_nurse() const { return static_cast<int>(assignment_.size()); }
    bool complete() const { return next_nurse() == instance_->num_nurses(); }

    void assign(int pattern_index);  // places the next nurse

    const GradeTable& cover() const { return cover_; }
    const GradeTable& undercover() const { return undercover_; }
    const std::vector<int>& assignment() const { return assignment_; }

    RosterSolution to_solution() const;  // requires complete()

private:
    const Instance* instance_;
    std::vector<int> assignment_;
    GradeTable cover_;
    GradeTable undercover_;
};

enum class ContributionVariant { A, B };

/// Eq.-style pattern score: weighted sum of covered needy cells over the
/// nurse's qualified grades, plus preference_weight * (100 - cost).
/// Variant A counts a needy cell as 1, variant B as its residual demand.
long long score_pattern(int nurse, int pattern_index, const PartialSchedule& partial,
                        const RuleWeights& weights, ContributionVariant variant);

/// Largest single undercover value the pattern covers, counted at the highest
/// of the nurse's qualified grades that still has any uncovered cell (the
/// grade cascade); 0 when no qualified grade is short anywhere.
long long highest_undercover_score(int nurse, int pattern_index, const PartialSchedule& partial);

/// Sum of undercover over every covered cell at all qualified grades.
long long overall_cover_score(int nurse, int pattern_index, const PartialSchedule& partial);

/// Picks a pattern for the next unscheduled nurse. Only Random and KCheapest
/// draw from the stream; the other four rules are deterministic given the
/// partial schedule. Argmax ties break to the lowest pattern index.
int apply_rule(RuleId rule, const PartialSchedule& partial, const RuleWeights& weights,
               RandomStream& rng);

/// Decodes a rule sequence into a complete roster, scheduling nurses in fixed
/// order. Total: every sequence yields a valid solution, feasible or not.
RosterSolution build_schedule(const RuleSequence& path, const Instance& instance,
                              const RuleWeights& weights, RandomStream& rng);

/// A rule path together with its decoded roster and fitness at decode time.
struct DecodedPath {
    RuleSequence rules;
    RosterSolution solution;
    long long cost = 0;
};

DecodedPath decode_path(const RuleSequence& path, const Instance& instance,
                        const RuleWeights& weights, const FitnessWeights& fitness_weights,
                        RandomStream& rng);

}  // namespace rostering
