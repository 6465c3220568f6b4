#pragma once

#include <vector>

#include "hooktab/tableau.hpp"

namespace hooktab {

// Complete, duplicate-free list of hook-valued tableaux of the given shape
// with entries <= max_entry and exactly the stated arm and leg excesses,
// in canonical (lexicographic) order. Empty when no tableau exists.
std::vector<HookValuedTableau> enumerate_hvt(const Partition& shape, int max_entry,
                                             int arm_excess, int leg_excess);

std::vector<ReversePlanePartition> enumerate_rpp(const Partition& shape, int max_entry);

// All flagged increasing fillings of outer/inner with the given
// orientation. Returns the empty list when the structural equal-first-part
// (row) or equal-length (column) requirement fails; throws
// ShapeNotNestedError when inner is not contained in outer.
std::vector<FlaggedTableau> enumerate_flagged(const Partition& inner, const Partition& outer,
                                              Orientation orientation);

// Flagged increasing tableaux with the given outer shape over all inner
// shapes (the index set of the dual stable Grothendieck Schur expansion).
std::vector<FlaggedTableau> enumerate_flagged_with_outer(const Partition& outer,
                                                         Orientation orientation);

}  // namespace hooktab
