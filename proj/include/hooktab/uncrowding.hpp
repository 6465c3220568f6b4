#pragma once

#include <vector>

#include "hooktab/rsk.hpp"
#include "hooktab/tableau.hpp"

namespace hooktab {

// Cells visited by one uncrowding insertion: the bump origin followed by
// the target of each bump; columns increase by one along the arm variant,
// rows increase by one along the leg variant. Empty at a fixed point.
using InsertionPath = std::vector<Cell>;

// Result of the uncrowding maps. P is set-valued for the arm variant and
// multiset-valued for the leg variant; Q is column-flagged (arm) or
// row-flagged (leg). The per-insertion stages and paths are kept for
// diagnostics and golden tests.
struct UncrowdResult {
    HookValuedTableau P;
    FlaggedTableau Q;
    std::vector<InsertionPath> paths;
    std::vector<HookValuedTableau> p_stages;  // P_0 = input, ..., P_alpha = P
    std::vector<FlaggedTableau> q_stages;
};

// One arm-uncrowding bumping step; the identity when arm excess is zero.
HookValuedTableau uncrowd_bump(const HookValuedTableau& t);

// Arm-uncrowding insertion: iterates the bumping until the shape grows by
// one box or a fixed point is reached; returns the result and the path.
std::pair<HookValuedTableau, InsertionPath> uncrowd_insert(const HookValuedTableau& t);

// The uncrowding map HVT(lambda) -> SVT(mu) x column-flagged(mu/lambda):
// one insertion per unit of arm excess, recording column displacements.
UncrowdResult uncrowd(const HookValuedTableau& t);

// One leg-uncrowding (multiset) bumping step.
HookValuedTableau multiset_uncrowd_bump(const HookValuedTableau& t);

std::pair<HookValuedTableau, InsertionPath> multiset_uncrowd_insert(const HookValuedTableau& t);

// The leg variant HVT(lambda) -> MVT(mu) x row-flagged(mu/lambda).
UncrowdResult multiset_uncrowd(const HookValuedTableau& t);

// Classical uncrowding of a set-valued tableau into a semistandard Young
// tableau plus a row-flagged recording tableau, via RSK row bumping of the
// largest multicell letters.
struct SvtUncrowdResult {
    HookValuedTableau P;  // zero excess
    FlaggedTableau Q;     // row-flagged, inner = shape of the input
};

SvtUncrowdResult uncrowd_svt(const HookValuedTableau& svt);

// Inverse of uncrowd_svt: reverse RSK bumps ordered by the recording
// tableau; total on pairs in the bijection's range.
HookValuedTableau inverse_uncrowd_svt(const HookValuedTableau& ssyt, const FlaggedTableau& q);

// The column-suffix uncrowding map on multiset-valued tableaux (the
// Hawkes-Scrimshaw construction); agrees with uncrowd() on every
// multiset-valued tableau.
UncrowdResult uncrowd_mvt(const HookValuedTableau& mvt);

}  // namespace hooktab
