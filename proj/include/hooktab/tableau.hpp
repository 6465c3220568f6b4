#pragma once

#include <compare>
#include <map>
#include <vector>

#include "hooktab/hook_entry.hpp"
#include "hooktab/partition.hpp"

namespace hooktab {

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

using CellMap = std::map<Cell, HookEntry>;

// Semistandard hook-valued tableau of straight shape, French convention.
// Set-valued tableaux (arm excess 0) and multiset-valued tableaux (leg
// excess 0) are the constrained special cases. Instances are immutable;
// the algorithms work on CellMap copies and re-validate.
class HookValuedTableau {
public:
    HookValuedTableau() = default;

    // Validates cell coverage, every cell filling and the row/column
    // semistandardness conditions. Throws ShapeMismatchError,
    // CellNotHookError, RowViolationError or ColumnViolationError.
    static HookValuedTableau validate(const Partition& shape, CellMap cells);
    // Shape recovered from the support of `cells` (must be a partition).
    static HookValuedTableau validate(CellMap cells);

    const Partition& shape() const { return shape_; }
    const CellMap& cells() const { return cells_; }
    bool has_cell(int r, int c) const { return shape_.has_cell(r, c); }
    const HookEntry& entry(int r, int c) const;

    int arm_excess() const;
    int leg_excess() const;
    int total_letters() const;           // |T|
    int max_letter() const;              // 0 for the empty tableau
    std::vector<int> weight() const;     // weight[i-1] = multiplicity of letter i

    bool is_set_valued() const { return arm_excess() == 0; }
    bool is_multiset_valued() const { return leg_excess() == 0; }
    bool is_ssyt() const { return arm_excess() == 0 && leg_excess() == 0; }

    bool empty() const { return cells_.empty(); }

    auto operator<=>(const HookValuedTableau&) const = default;

private:
    Partition shape_;
    CellMap cells_;
};

// Checks that the support of `cells` is exactly the given shape and that
// all semistandardness conditions hold; used by validate() and available
// for asserting intermediate states.
void check_hvt(const Partition& shape, const CellMap& cells);

Partition shape_of_support(const CellMap& cells);  // throws ShapeMismatchError

std::vector<int> weight_of(const CellMap& cells);

// Filling of a straight shape with weakly increasing rows and columns
// (equal entries allowed in both directions).
class ReversePlanePartition {
public:
    ReversePlanePartition() = default;
    static ReversePlanePartition validate(const Partition& shape, std::map<Cell, int> entries);

    const Partition& shape() const { return shape_; }
    const std::map<Cell, int>& entries() const { return entries_; }
    int entry(int r, int c) const { return entries_.at(Cell{r, c}); }

    auto operator<=>(const ReversePlanePartition&) const = default;

private:
    Partition shape_;
    std::map<Cell, int> entries_;
};

enum class Orientation { RowFlagged, ColumnFlagged };

// Skew filling recording (un)crowding steps. Row-flagged: strictly
// increasing rows and columns, entries in row r at most r-1, equal first
// parts of inner and outer shape. Column-flagged is the transpose
// condition: entries in column c at most c-1, equal lengths.
class FlaggedTableau {
public:
    FlaggedTableau() = default;
    static FlaggedTableau validate(const Partition& inner, const Partition& outer,
                                   Orientation orientation, std::map<Cell, int> entries);
    // Convenience: flagged tableau of shape lambda/lambda.
    static FlaggedTableau empty(const Partition& shape, Orientation orientation);

    const Partition& inner() const { return inner_; }
    const Partition& outer() const { return outer_; }
    Orientation orientation() const { return orientation_; }
    const std::map<Cell, int>& entries() const { return entries_; }
    bool has_entry(int r, int c) const { return entries_.count(Cell{r, c}) > 0; }
    int entry(int r, int c) const { return entries_.at(Cell{r, c}); }
    int entry_count() const { return static_cast<int>(entries_.size()); }

    FlaggedTableau transposed() const;
    // Returns the tableau extended by one new cell; used by the recording
    // steps of the uncrowding maps.
    FlaggedTableau with_added_cell(Cell cell, int value) const;

    auto operator<=>(const FlaggedTableau&) const = default;

private:
    Partition inner_;
    Partition outer_;
    Orientation orientation_ = Orientation::RowFlagged;
    std::map<Cell, int> entries_;
};

}  // namespace hooktab
