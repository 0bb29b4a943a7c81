#include "rostering/rules.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rostering {

const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::Random: return "Random";
        case RuleId::KCheapest: return "KCheapest";
        case RuleId::HighestUndercover: return "HighestUndercover";
        case RuleId::OverallCover: return "OverallCover";
        case RuleId::ContributionA: return "ContributionA";
        case RuleId::ContributionB: return "ContributionB";
    }
    return "?";
}

void RuleWeights::validate() const {
    for (long long w : grade_weights)
        if (w <= 0) throw std::invalid_argument("grade_weights: must be positive");
    if (preference_weight <= 0) throw std::invalid_argument("preference_weight: must be positive");
    if (cheapest_list_length <= 0)
        throw std::invalid_argument("cheapest_list_length: must be positive");
}

PartialSchedule::PartialSchedule(const Instance& instance)
    : instance_(&instance),
      cover_(instance.num_grades),
      undercover_(instance.num_grades) {
    instance.validate();
    assignment_.reserve(instance.nurses.size());
    for (int k = 1; k <= kSlotsPerWeek; ++k)
        for (int s = 1; s <= instance.num_grades; ++s)
            undercover_.at(k, s) = instance.demand.at(k, s);
}

void PartialSchedule::assign(int pattern_index) {
    const int nurse = next_nurse();
    if (nurse >= instance_->num_nurses())
        throw std::invalid_argument("partial schedule: all nurses already assigned");
    const NurseSpec& spec = instance_->nurses[nurse];
    if (pattern_index < 0 || pattern_index >= static_cast<int>(spec.patterns.size()))
        throw std::invalid_argument("partial schedule: pattern index out of range");
    const ShiftPattern& pattern = spec.patterns[pattern_index].pattern;
    for (int k = 1; k <= kSlotsPerWeek; ++k) {
        if (!pattern.covers(k)) continue;
        for (int s = spec.grade; s <= instance_->num_grades; ++s) {
            cover_.at(k, s) += 1;
            undercover_.at(k, s) =
                std::max(instance_->demand.at(k, s) - cover_.at(k, s), 0);
        }
    }
    assignment_.push_back(pattern_index);
}

RosterSolution PartialSchedule::to_solution() const {
    if (!complete())
        throw std::logic_error("partial schedule: not all nurses assigned yet");
    return RosterSolution{assignment_};
}

long long score_pattern(int nurse, int pattern_index, const PartialSchedule& partial,
                        const RuleWeights& weights, ContributionVariant variant) {
    const Instance& instance = partial.instance();
    const NurseSpec& spec = instance.nurses[nurse];
    const PatternOption& option = spec.patterns[pattern_index];
    long long cover_term = 0;
    for (int s = spec.grade; s <= instance.num_grades; ++s) {
        long long covered_need = 0;
        for (int k = 1; k <= kSlotsPerWeek; ++k) {
            if (!option.pattern.covers(k)) continue;
            const int need = partial.undercover().at(k, s);
            if (need <= 0) continue;
            covered_need += variant == ContributionVariant::A ? 1 : need;
        }
        cover_term += weights.grade_weight(s) * covered_need;
    }
    return cover_term + weights.preference_weight * (100 - option.cost);
}

long long highest_undercover_score(int nurse, int pattern_index, const PartialSchedule& partial) {
    const Instance& instance = partial.instance();
    const NurseSpec& spec = instance.nurses[nurse];
    // Cascade: take the highest qualified grade that still has any uncovered
    // cell; only that grade's cells are scored, so high-grade nurses are not
    // wasted on lower-band gaps while their own band is short.
    int scoring_grade = 0;
    for (int s = spec.grade; s <= instance.num_grades && scoring_grade == 0; ++s)
        for (int k = 1; k <= kSlotsPerWeek; ++k)
            if (partial.undercover().at(k, s) > 0) {
                scoring_grade = s;
                break;
            }
    if (scoring_grade == 0) return 0;
    const ShiftPattern& pattern = spec.patterns[pattern_index].pattern;
    long long best = 0;
    for (int k = 1; k <= kSlotsPerWeek; ++k)
        if (pattern.covers(k))
            best = std::max<long long>(best, partial.undercover().at(k, scoring_grade));
    return best;
}

long long overall_cover_score(int nurse, int pattern_index, const PartialSchedule& partial) {
    const Instance& instance = partial.instance();
    const NurseSpec& spec = instance.nurses[nurse];
    const ShiftPattern& pattern = spec.patterns[pattern_index].pattern;
    long long total = 0;
    for (int s = spec.grade; s <= instance.num_grades; ++s)
        for (int k = 1; k <= kSlotsPerWeek; ++k)
            if (pattern.covers(k)) total += partial.undercover().at(k, s);
    return total;
}

namespace {

/// First index maximizing score(index); ties go to the lowest index.
template <typename Score>
int argmax_pattern(std::size_t count, Score&& score) {
    int best_index = 0;
    long long best_score = score(0);
    for (std::size_t j = 1; j < count; ++j) {
        const long long s = score(static_cast<int>(j));
        if (s > best_score) {
            best_score = s;
            best_index = static_cast<int>(j);
        }
    }
    return best_index;
}

int pick_k_cheapest(const NurseSpec& spec, int k, RandomStream& rng) {
    std::vector<int> order(spec.patterns.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&spec](int a, int b) {
        return spec.patterns[a].cost < spec.patterns[b].cost;
    });
    const std::size_t list_len = std::min<std::size_t>(k, order.size());
    return order[rng.uniform_index(list_len)];
}

}  // namespace

int apply_rule(RuleId rule, const PartialSchedule& partial, const RuleWeights& weights,
               RandomStream& rng) {
    const Instance& instance = partial.instance();
    const int nurse = partial.next_nurse();
    if (nurse >= instance.num_nurses())
        throw std::invalid_argument("apply_rule: no unscheduled nurse left");
    const NurseSpec& spec = instance.nurses[nurse];
    const std::size_t count = spec.patterns.size();

    switch (rule) {
        case RuleId::Random:
            return static_cast<int>(rng.uniform_index(count));
        case RuleId::KCheapest:
            return pick_k_cheapest(spec, weights.cheapest_list_length, rng);
        case RuleId::HighestUndercover:
            return argmax_pattern(count, [&](int j) {
                return highest_undercover_score(nurse, j, partial);
            });
        case RuleId::OverallCover:
            return argmax_pattern(count, [&](int j) {
                return overall_cover_score(nurse, j, partial);
            });
        case RuleId::ContributionA:
            return argmax_pattern(count, [&](int j) {
                return score_pattern(nurse, j, partial, weights, ContributionVariant::A);
            });
        case RuleId::ContributionB:
            return argmax_pattern(count, [&](int j) {
                return score_pattern(nurse, j, partial, weights, ContributionVariant::B);
            });
    }
    throw std::invalid_argument("apply_rule: unknown rule id " +
                                std::to_string(static_cast<int>(rule)));
}

RosterSolution build_schedule(const RuleSequence& path, const Instance& instance,
                              const RuleWeights& weights, RandomStream& rng) {
    if (static_cast<int>(path.size()) != instance.num_nurses())
        throw std::invalid_argument("build_schedule: path length " +
                                    std::to_string(path.size()) + " != nurse count " +
                                    std::to_string(instance.num_nurses()));
    weights.validate();
    PartialSchedule partial(instance);
    for (RuleId rule : path) partial.assign(apply_rule(rule, partial, weights, rng));
    return partial.to_solution();
}

DecodedPath decode_path(const RuleSequence& path, const Instance& instance,
                        const RuleWeights& weights, const FitnessWeights& fitness_weights,
                        RandomStream& rng) {
    DecodedPath decoded;
    decoded.rules = path;
    decoded.solution = build_schedule(path, instance, weights, rng);
    decoded.cost = fitness(instance, decoded.solution, fitness_weights);
    return decoded;
}

}  // namespace rostering
