#pragma once

#include <vector>

#include "hooktab/tableau.hpp"
#include "hooktab/uncrowding.hpp"

namespace hooktab {

// Processing order for the cells of a column-flagged recording tableau:
// destination column d(r,c) = c - F(r,c) ascending, then column index
// descending. alphas are the recorded entries in that order.
struct CrowdingPlan {
    std::vector<Cell> order;
    std::vector<int> alphas;
    std::vector<int> destinations;
};

CrowdingPlan crowding_plan(const FlaggedTableau& f);

// One crowding bumping step on a working tableau at the given cell, which
// must have at most one arm element and, when the arm is empty, be a
// corner. Returns the updated tableau and the target cell one column to
// the left. Throws PreconditionError outside that domain.
std::pair<HookValuedTableau, Cell> crowd_bump(const HookValuedTableau& h, Cell cell);

struct CrowdResult {
    HookValuedTableau T;
    CrowdingPlan plan;
    std::vector<HookValuedTableau> stages;  // T_0^(0) = S, ..., T_e^(0) = T
    std::vector<InsertionPath> paths;
    // trace[j][s] = T_j^(s): the snapshot after s bumps of stage j;
    // trace[j][0] is the stage start.
    std::vector<std::vector<HookValuedTableau>> trace;
};

// The crowding map K_lambda -> HVT(lambda). Executes the planned bumps
// with weight monitoring and throws NotInKLambdaError at the first letter
// loss. With validate_intermediates every snapshot is re-validated.
CrowdResult crowd(const HookValuedTableau& svt, const FlaggedTableau& f,
                  bool validate_intermediates = false);

// Membership in K_lambda, decided operationally by running the crowding
// map and watching the weight.
bool k_lambda_member(const HookValuedTableau& svt, const FlaggedTableau& f);

}  // namespace hooktab
