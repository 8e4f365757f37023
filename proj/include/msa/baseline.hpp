#pragma once

#include "msa/planner.hpp"

namespace msa {

/// Comparison method's assignment: repeatedly hand the unassigned target
/// with the greatest fused trace to the nearest unassigned camera. Ties
/// break toward the lowest target index, then the lowest camera index.
Assignment assign_baseline(std::span<const double> fused_traces,
                           std::span<const CameraPose> cameras,
                           std::span<const Vec2> target_means);

/// Centralized sequential greedy: cameras plan in index order, each picking
/// the exact cost-minimizing action given the already-planned cameras'
/// positions. Cost ties break toward the action closing most on the
/// assigned target's nominal mean, then the lower action index.
std::vector<std::vector<Action>> plan_baseline(PlannerState state, const GameConfig& cfg);

}  // namespace msa
