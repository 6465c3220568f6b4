#include "hooktab/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

// Cells in row-major order from the bottom row up; each cell is
// constrained by its left and lower neighbors, which precede it.
std::vector<Cell> cell_order(const Partition& shape) {
    std::vector<Cell> order;
    for (int r = 1; r <= shape.length(); ++r) {
        for (int c = 1; c <= shape.row_length(r); ++c) order.push_back(Cell{r, c});
    }
    return order;
}

void arm_choices(int len, int lo, int hi, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == len) {
        emit(cur);
        return;
    }
    int from = cur.empty() ? lo : cur.back();
    for (int v = from; v <= hi; ++v) {
        cur.push_back(v);
        arm_choices(len, lo, hi, cur, emit);
        cur.pop_back();
    }
}

void leg_choices(int len, int lo, int hi, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == len) {
        emit(cur);
        return;
    }
    int from = cur.empty() ? lo : cur.back() + 1;
    for (int v = from; v + (len - 1 - static_cast<int>(cur.size())) <= hi; ++v) {
        cur.push_back(v);
        leg_choices(len, lo, hi, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<HookValuedTableau> enumerate_hvt(const Partition& shape, int max_entry,
                                             int arm_excess, int leg_excess) {
    std::vector<HookValuedTableau> out;
    if (shape.empty()) {
        if (arm_excess == 0 && leg_excess == 0) out.push_back(HookValuedTableau());
        return out;
    }
    auto order = cell_order(shape);
    CellMap cells;

    auto rec = [&](auto&& self, std::size_t idx, int arm_left, int leg_left) -> void {
        if (idx == order.size()) {
            if (arm_left == 0 && leg_left == 0) {
                out.push_back(HookValuedTableau::validate(shape, cells));
            }
            return;
        }
        Cell cell = order[idx];
        int lo = 1;
        auto left = cells.find(Cell{cell.row, cell.col - 1});
        if (left != cells.end()) lo = std::max(lo, left->second.max());
        auto below = cells.find(Cell{cell.row - 1, cell.col});
        if (below != cells.end()) lo = std::max(lo, below->second.max() + 1);
        for (int hook = lo; hook <= max_entry; ++hook) {
            for (int na = 0; na <= arm_left; ++na) {
                std::vector<int> arm_cur;
                arm_choices(na, hook, max_entry, arm_cur, [&](const std::vector<int>& arm) {
                    for (int nl = 0; nl <= leg_left; ++nl) {
                        std::vector<int> leg_cur;
                        leg_choices(nl, hook + 1, max_entry, leg_cur, [&](const std::vector<int>& leg) {
                            cells[cell] = HookEntry(hook, arm, leg);
                            self(self, idx + 1, arm_left - na, leg_left - nl);
                        });
                    }
                });
            }
        }
        cells.erase(cell);
    };
    rec(rec, 0, arm_excess, leg_excess);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ReversePlanePartition> enumerate_rpp(const Partition& shape, int max_entry) {
    std::vector<ReversePlanePartition> out;
    if (shape.empty()) {
        out.push_back(ReversePlanePartition::validate(shape, {}));
        return out;
    }
    auto order = cell_order(shape);
    std::map<Cell, int> entries;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            out.push_back(ReversePlanePartition::validate(shape, entries));
            return;
        }
        Cell cell = order[idx];
        int lo = 1;
        auto left = entries.find(Cell{cell.row, cell.col - 1});
        if (left != entries.end()) lo = std::max(lo, left->second);
        auto below = entries.find(Cell{cell.row - 1, cell.col});
        if (below != entries.end()) lo = std::max(lo, below->second);
        for (int v = lo; v <= max_entry; ++v) {
            entries[cell] = v;
            self(self, idx + 1);
        }
        entries.erase(cell);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FlaggedTableau> enumerate_flagged(const Partition& inner, const Partition& outer,
                                              Orientation orientation) {
    if (!outer.contains(inner)) throw ShapeNotNestedError("inner shape not contained in outer shape");
    std::vector<FlaggedTableau> out;
    if (orientation == Orientation::RowFlagged && inner.row_length(1) != outer.row_length(1)) return out;
    if (orientation == Orientation::ColumnFlagged && inner.length() != outer.length()) return out;

    std::vector<Cell> skew;
    for (int r = 1; r <= outer.length(); ++r) {
        for (int c = inner.row_length(r) + 1; c <= outer.row_length(r); ++c) skew.push_back(Cell{r, c});
    }
    std::map<Cell, int> entries;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == skew.size()) {
            out.push_back(FlaggedTableau::validate(inner, outer, orientation, entries));
            return;
        }
        Cell cell = skew[idx];
        int lo = 1;
        auto left = entries.find(Cell{cell.row, cell.col - 1});
        if (left != entries.end()) lo = std::max(lo, left->second + 1);
        auto below = entries.find(Cell{cell.row - 1, cell.col});
        if (below != entries.end()) lo = std::max(lo, below->second + 1);
        int hi = (orientation == Orientation::RowFlagged) ? cell.row - 1 : cell.col - 1;
        for (int v = lo; v <= hi; ++v) {
            entries[cell] = v;
            self(self, idx + 1);
        }
        entries.erase(cell);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FlaggedTableau> enumerate_flagged_with_outer(const Partition& outer,
                                                         Orientation orientation) {
    std::vector<FlaggedTableau> out;
    for (auto& inner : Partition::all_up_to_size(outer.size())) {
        if (!outer.contains(inner)) continue;
        auto block = enumerate_flagged(inner, outer, orientation);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace hooktab
