#include "hooktab/crowding.hpp"

#include <algorithm>
#include <sstream>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

bool is_corner(const CellMap& cells, Cell cell) {
    return cells.count(cell) && !cells.count(Cell{cell.row + 1, cell.col}) &&
           !cells.count(Cell{cell.row, cell.col + 1});
}

// Crowding bumping on a raw grid; returns the target cell.
Cell bump_crowd(CellMap& cells, Cell cell) {
    auto it = cells.find(cell);
    if (it == cells.end()) throw PreconditionError("crowding bump at a missing cell");
    if (cell.col <= 1) throw PreconditionError("crowding bump requires column index above 1");
    HookEntry& source = it->second;
    if (source.arm_excess() > 1) throw PreconditionError("crowding bump requires at most one arm element");
    if (source.arm().empty() && !is_corner(cells, cell)) {
        throw PreconditionError("crowding bump with empty arm requires a corner cell");
    }

    // Step 1: the moving letter m and the pivot b.
    int m, b;
    if (!source.arm().empty()) {
        m = source.arm().front();
        b = source.hook();
        for (int v : source.leg()) {
            if (v <= m) b = v;
        }
    } else {
        m = source.hook();
        b = source.leg().empty() ? source.hook() : source.leg().back();
    }

    // Step 2: the landing row r' in column c-1 and the inserted letter q.
    int target_row = 0;
    for (const auto& [other, entry] : cells) {
        if (other.col == cell.col - 1 && entry.hook() <= b) target_row = std::max(target_row, other.row);
    }
    if (target_row == 0) throw PreconditionError("crowding bump found no landing row");
    int q = (target_row == cell.row) ? source.hook() : b;
    cells.at(Cell{target_row, cell.col - 1}).arm_insert(q);

    // Step 3: rearrange or delete the source cell.
    if (target_row == cell.row) {
        HookEntry& dest = cells.at(Cell{target_row, cell.col - 1});
        if (!source.arm().empty()) {
            std::vector<int> transfer;
            for (int v : source.leg()) {
                if (v > q && v <= m) transfer.push_back(v);
            }
            for (int v : transfer) {
                source.leg_erase_one(v);
                dest.leg_insert(v);
            }
            source.arm_erase_one(m);
            source.set_hook(m);
        } else {
            for (int v : source.leg()) dest.leg_insert(v);
            cells.erase(it);
        }
    } else {
        if (!source.arm().empty()) {
            source.extended_leg_replace(q, m);
            source.arm_erase_one(m);
        } else {
            cells.erase(it);
        }
    }
    return Cell{target_row, cell.col - 1};
}

std::string weight_drop_message(Cell cell, int stage, int step) {
    std::ostringstream os;
    os << "letter lost at cell (" << cell.row << ',' << cell.col << ") during stage " << stage
       << ", bump " << step;
    return os.str();
}

}  // namespace

CrowdingPlan crowding_plan(const FlaggedTableau& f) {
    if (f.orientation() != Orientation::ColumnFlagged) {
        throw PreconditionError("crowding plan requires a column-flagged tableau");
    }
    CrowdingPlan plan;
    for (const auto& [cell, v] : f.entries()) plan.order.push_back(cell);
    std::stable_sort(plan.order.begin(), plan.order.end(), [&](Cell a, Cell b) {
        int da = a.col - f.entry(a.row, a.col);
        int db = b.col - f.entry(b.row, b.col);
        if (da != db) return da < db;
        return a.col > b.col;
    });
    for (Cell cell : plan.order) {
        plan.alphas.push_back(f.entry(cell.row, cell.col));
        plan.destinations.push_back(cell.col - f.entry(cell.row, cell.col));
    }
    return plan;
}

std::pair<HookValuedTableau, Cell> crowd_bump(const HookValuedTableau& h, Cell cell) {
    CellMap cells = h.cells();
    Cell target = bump_crowd(cells, cell);
    return {HookValuedTableau::validate(std::move(cells)), target};
}

CrowdResult crowd(const HookValuedTableau& svt, const FlaggedTableau& f,
                  bool validate_intermediates) {
    if (svt.arm_excess() != 0) throw PreconditionError("crowding requires a set-valued tableau");
    if (f.orientation() != Orientation::ColumnFlagged) {
        throw PreconditionError("crowding requires a column-flagged recording tableau");
    }
    if (f.outer() != svt.shape()) {
        throw ShapeMismatchError("outer shape of the recording tableau must match the tableau shape");
    }

    CrowdResult result;
    result.plan = crowding_plan(f);
    result.stages.push_back(svt);

    std::vector<int> target_weight = svt.weight();
    CellMap cells = svt.cells();
    for (std::size_t j = 0; j < result.plan.order.size(); ++j) {
        Cell cursor = result.plan.order[j];
        InsertionPath path{cursor};
        std::vector<HookValuedTableau> snapshots;
        if (validate_intermediates) snapshots.push_back(result.stages.back());
        for (int s = 1; s <= result.plan.alphas[j]; ++s) {
            cursor = bump_crowd(cells, cursor);
            path.push_back(cursor);
            if (weight_of(cells) != target_weight) {
                throw NotInKLambdaError(static_cast<int>(j) + 1, s,
                                        weight_drop_message(cursor, static_cast<int>(j) + 1, s));
            }
            // Every snapshot of the recursion is semistandard; re-checking
            // each one is reserved for trace mode.
            if (validate_intermediates) {
                check_hvt(shape_of_support(cells), cells);
                snapshots.push_back(HookValuedTableau::validate(cells));
            }
        }
        result.paths.push_back(std::move(path));
        if (validate_intermediates) result.trace.push_back(std::move(snapshots));
        result.stages.push_back(HookValuedTableau::validate(cells));
    }
    result.T = result.stages.back();
    if (result.T.shape() != f.inner()) {
        throw TableauError("crowding did not land on the inner shape");
    }
    return result;
}

bool k_lambda_member(const HookValuedTableau& svt, const FlaggedTableau& f) {
    try {
        crowd(svt, f);
        return true;
    } catch (const NotInKLambdaError&) {
        return false;
    }
}

}  // namespace hooktab
