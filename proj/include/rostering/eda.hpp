#pragma once

#include <cstdint>
#include <vector>

#include "rostering/ant_miner.hpp"
#include "rostering/rng.hpp"
#include "rostering/rules.hpp"

namespace rostering {

/// Fixed-topology Bayesian model over nurse-rule nodes: a marginal for the
/// first nurse and one r x r conditional table per layer transition. Counts
/// are kept as integers so probabilities stay exact rationals; rows that were
/// never observed fall back to the uniform distribution when queried or
/// sampled.
class RuleModel {
public:
    RuleModel() = default;

    static RuleModel from_paths(const std::vector<RuleSequence>& paths, int num_rules = kNumRules);

    /// Builds the model from per-layer edge counts, edge_counts[i][j][j'] =
    /// number of times rule j at nurse i is followed by rule j' at nurse i+1.
    /// First-layer marginal counts are the layer-0 row sums; num_paths is the
    /// marginal total.
    static RuleModel from_edge_counts(std::vector<std::vector<std::vector<long long>>> edge_counts,
                                      long long num_paths);

    int num_positions() const { return num_positions_; }
    int num_rules() const { return num_rules_; }

    long long root_count(int j) const { return root_counts_[j]; }
    long long root_total() const { return root_total_; }
    long long edge_count(int layer, int j, int j_next) const {
        return edge_counts_[layer][j][j_next];
    }
    long long row_total(int layer, int j) const { return row_totals_[layer][j]; }

    double root_prob(int j) const;
    double cond_prob(int layer, int j, int j_next) const;

    /// Optional Laplace smoothing applied at query/sampling time; 0 keeps the
    /// observed zeros exactly.
    void set_laplace(double epsilon) { laplace_ = epsilon; }
    double laplace() const { return laplace_; }

private:
    int num_positions_ = 0;
    int num_rules_ = 0;
    long long root_total_ = 0;
    std::vector<long long> root_counts_;
    std::vector<std::vector<std::vector<long long>>> edge_counts_;  // (n-1) x r x r
    std::vector<std::vector<long long>> row_totals_;
    double laplace_ = 0.0;

    friend RuleSequence sample_path(const RuleModel&, RandomStream&);
};

/// Ancestral sampling: first rule from the root marginal, each next rule from
/// the conditional row of its predecessor. Zero-count transitions are never
/// produced while smoothing is off.
RuleSequence sample_path(const RuleModel& model, RandomStream& rng);

struct EdaParams {
    int generations = 200;
    int samples_per_generation = 100;  // roulette-selected parents and sampled offspring
    int elite_count = 40;              // best of the previous population carried over
    long long roulette_delta = 1;      // selection weight = worst - fitness + delta
    double laplace_epsilon = 0.0;

    int population_size() const { return samples_per_generation + elite_count; }
    void validate() const;
};

/// Fitness-proportional selection for minimization: member weight is
/// (worst fitness - fitness + delta). count draws with replacement.
std::vector<RuleSequence> select_parents(const std::vector<DecodedPath>& population, int count,
                                         long long delta, RandomStream& rng);

struct EvolveResult {
    DecodedPath best;
    std::vector<long long> trace;  // best-so-far per generation, index 0 = initial population
};

/// The memetic loop: uniform-random initial population; each generation
/// selects parents, fits the model, samples offspring, refines each with the
/// ant-miner, and keeps the elite carryover. ant.generations == 0 disables
/// refinement (the plain EDA).
EvolveResult evolve(const Instance& instance, const EdaParams& params, const RuleWeights& weights,
                    const FitnessWeights& fitness_weights, const AntParams& ant,
                    std::uint64_t seed);

}  // namespace rostering
