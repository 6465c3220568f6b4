#include "hooktab/uncrowding.hpp"

#include <algorithm>
#include <optional>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

// Rightmost column holding a cell with nonzero arm excess, 0 when none.
int rightmost_arm_column(const CellMap& cells) {
    int col = 0;
    for (const auto& [cell, entry] : cells) {
        if (entry.arm_excess() > 0) col = std::max(col, cell.col);
    }
    return col;
}

int topmost_leg_row(const CellMap& cells) {
    int row = 0;
    for (const auto& [cell, entry] : cells) {
        if (entry.leg_excess() > 0) row = std::max(row, cell.row);
    }
    return row;
}

int column_height_of(const CellMap& cells, int c) {
    int h = 0;
    while (cells.count(Cell{h + 1, c})) ++h;
    return h;
}

int row_length_of(const CellMap& cells, int r) {
    int len = 0;
    while (cells.count(Cell{r, len + 1})) ++len;
    return len;
}

struct BumpStep {
    Cell from;
    Cell to;
    bool new_box = false;
};

// One application of the arm-uncrowding bumping to a working grid; the
// caller guarantees nonzero arm excess.
BumpStep bump_arm(CellMap& cells) {
    int c = rightmost_arm_column(cells);
    // Topmost cell with nonzero arm excess in that column; it carries the
    // largest arm value of the column.
    int r = 0;
    for (const auto& [cell, entry] : cells) {
        if (cell.col == c && entry.arm_excess() > 0) r = std::max(r, cell.row);
    }
    HookEntry& source = cells.at(Cell{r, c});
    int a = source.arm().back();
    std::optional<int> ell;
    if (!source.leg().empty()) ell = source.leg().back();

    // Smallest letter >= a in column c+1. Cells there have zero arm
    // excess, so every letter lives in an extended leg.
    std::optional<int> k;
    int target_row = 0;
    for (const auto& [cell, entry] : cells) {
        if (cell.col != c + 1) continue;
        for (int v : entry.extended_leg()) {
            if (v >= a && (!k || v < *k)) {
                k = v;
                target_row = cell.row;
            }
        }
    }

    bool new_box = false;
    if (!k) {
        target_row = column_height_of(cells, c + 1) + 1;
        new_box = true;
    }
    Cell target{target_row, c + 1};

    if (target_row != r) {
        // Case (a): move a into position k, append k to that cell's arm.
        source.arm_erase_one(a);
        if (new_box) {
            cells[target] = HookEntry(a);
        } else {
            HookEntry& dest = cells.at(target);
            dest.extended_leg_replace(*k, a);
            dest.arm_insert(*k);
        }
    } else {
        // Case (b): transfer (a, ell] of the leg, hook becomes a, the old
        // hook k joins the arm.
        std::vector<int> transfer;
        if (ell) {
            for (int v : source.leg()) {
                if (v > a && v <= *ell) transfer.push_back(v);
            }
        }
        for (int v : transfer) source.leg_erase_one(v);
        source.arm_erase_one(a);
        if (new_box) {
            cells[target] = HookEntry(a, {}, transfer);
        } else {
            HookEntry& dest = cells.at(target);
            if (dest.hook() != *k) {
                throw TableauError("arm bump: located letter is not the hook of the target cell");
            }
            dest.set_hook(a);
            for (int v : transfer) dest.leg_insert(v);
            dest.arm_insert(*k);
        }
    }
    return BumpStep{Cell{r, c}, target, new_box};
}

// One application of the leg-uncrowding bumping; mirror image of bump_arm.
BumpStep bump_leg(CellMap& cells) {
    int r = topmost_leg_row(cells);
    // Rightmost cell with nonzero leg excess in that row; it carries the
    // largest leg value of the row.
    int c = 0;
    for (const auto& [cell, entry] : cells) {
        if (cell.row == r && entry.leg_excess() > 0) c = std::max(c, cell.col);
    }
    HookEntry& source = cells.at(Cell{r, c});
    int ell = source.leg().back();
    std::optional<int> a;
    if (!source.arm().empty()) a = source.arm().back();

    // Leftmost cell of row r+1 containing a letter strictly above ell; the
    // smallest such letter within it. Row r+1 has zero leg excess, so the
    // letters live in hook+arm.
    std::optional<int> k;
    int target_col = 0;
    for (const auto& [cell, entry] : cells) {
        if (cell.row != r + 1) continue;
        if (target_col && cell.col > target_col) continue;
        for (int v : entry.all_letters()) {
            if (v > ell && (!k || cell.col < target_col || v < *k)) {
                k = v;
                target_col = cell.col;
            }
        }
    }

    bool new_box = false;
    if (!k) {
        target_col = row_length_of(cells, r + 1) + 1;
        new_box = true;
    }
    Cell target{r + 1, target_col};

    if (target_col != c) {
        // Case (a): ell takes k's place, k drops onto the (empty) leg.
        source.leg_erase_one(ell);
        if (new_box) {
            cells[target] = HookEntry(ell);
        } else {
            HookEntry& dest = cells.at(target);
            dest.extended_arm_replace_first(*k, ell);
            dest.leg_insert(*k);
        }
    } else {
        // Case (b): transfer [ell, a] of the arm, hook becomes ell, the
        // old hook k joins the leg.
        std::vector<int> transfer;
        if (a) {
            for (int v : source.arm()) {
                if (v >= ell && v <= *a) transfer.push_back(v);
            }
        }
        for (int v : transfer) source.arm_erase_one(v);
        source.leg_erase_one(ell);
        if (new_box) {
            cells[target] = HookEntry(ell, transfer, {});
        } else {
            HookEntry& dest = cells.at(target);
            if (dest.hook() != *k) {
                throw TableauError("leg bump: located letter is not the hook of the target cell");
            }
            dest.set_hook(ell);
            for (int v : transfer) dest.arm_insert(v);
            dest.leg_insert(*k);
        }
    }
    return BumpStep{Cell{r, c}, target, new_box};
}

using BumpFn = BumpStep (*)(CellMap&);

std::pair<HookValuedTableau, InsertionPath> insert_with(const HookValuedTableau& t, BumpFn bump,
                                                        int excess) {
    if (excess == 0) return {t, {}};
    CellMap cells = t.cells();
    InsertionPath path;
    for (;;) {
        BumpStep step = bump(cells);
        if (path.empty()) path.push_back(step.from);
        path.push_back(step.to);
        if (step.new_box) break;
    }
    return {HookValuedTableau::validate(std::move(cells)), std::move(path)};
}

UncrowdResult uncrowd_with(const HookValuedTableau& t, BumpFn bump, Orientation orientation,
                           int excess) {
    UncrowdResult result;
    result.p_stages.push_back(t);
    result.q_stages.push_back(FlaggedTableau::empty(t.shape(), orientation));
    for (int step = 0; step < excess; ++step) {
        const HookValuedTableau& current = result.p_stages.back();
        int origin = (orientation == Orientation::ColumnFlagged)
                         ? rightmost_arm_column(current.cells())
                         : topmost_leg_row(current.cells());
        auto [next, path] = insert_with(current, bump, 1);
        if (path.empty() || next.shape() == current.shape()) {
            throw TableauError("uncrowding insertion did not grow the shape despite excess");
        }
        Cell box = path.back();
        int displacement =
            (orientation == Orientation::ColumnFlagged) ? box.col - origin : box.row - origin;
        result.q_stages.push_back(result.q_stages.back().with_added_cell(box, displacement));
        result.p_stages.push_back(next);
        result.paths.push_back(std::move(path));
    }
    result.P = result.p_stages.back();
    result.Q = result.q_stages.back();
    return result;
}

}  // namespace

HookValuedTableau uncrowd_bump(const HookValuedTableau& t) {
    if (t.arm_excess() == 0) return t;
    CellMap cells = t.cells();
    bump_arm(cells);
    return HookValuedTableau::validate(std::move(cells));
}

std::pair<HookValuedTableau, InsertionPath> uncrowd_insert(const HookValuedTableau& t) {
    return insert_with(t, &bump_arm, t.arm_excess());
}

UncrowdResult uncrowd(const HookValuedTableau& t) {
    return uncrowd_with(t, &bump_arm, Orientation::ColumnFlagged, t.arm_excess());
}

HookValuedTableau multiset_uncrowd_bump(const HookValuedTableau& t) {
    if (t.leg_excess() == 0) return t;
    CellMap cells = t.cells();
    bump_leg(cells);
    return HookValuedTableau::validate(std::move(cells));
}

std::pair<HookValuedTableau, InsertionPath> multiset_uncrowd_insert(const HookValuedTableau& t) {
    return insert_with(t, &bump_leg, t.leg_excess());
}

UncrowdResult multiset_uncrowd(const HookValuedTableau& t) {
    return uncrowd_with(t, &bump_leg, Orientation::RowFlagged, t.leg_excess());
}

SvtUncrowdResult uncrowd_svt(const HookValuedTableau& svt) {
    if (svt.arm_excess() != 0) throw PreconditionError("uncrowd_svt requires a set-valued tableau");
    CellMap cells = svt.cells();
    FlaggedTableau q = FlaggedTableau::empty(svt.shape(), Orientation::RowFlagged);
    for (;;) {
        // Topmost row holding a multicell.
        int r = 0;
        for (const auto& [cell, entry] : cells) {
            if (entry.leg_excess() > 0) r = std::max(r, cell.row);
        }
        if (r == 0) break;
        // Largest letter of the row lying in a multicell; its cell is unique.
        int x = 0;
        Cell source{};
        for (const auto& [cell, entry] : cells) {
            if (cell.row == r && entry.leg_excess() > 0 && entry.leg().back() > x) {
                x = entry.leg().back();
                source = cell;
            }
        }
        cells.at(source).leg_erase_one(x);
        // RSK row bumping of x through the singleton rows above.
        int y = x;
        int row = r + 1;
        Cell box{};
        for (;;) {
            int len = row_length_of(cells, row);
            if (len == 0) {
                cells[Cell{row, 1}] = HookEntry(y);
                box = Cell{row, 1};
                break;
            }
            bool bumped = false;
            for (int col = 1; col <= len; ++col) {
                HookEntry& e = cells.at(Cell{row, col});
                if (e.leg_excess() > 0 || e.arm_excess() > 0) {
                    throw TableauError("uncrowd_svt: row above a multicell row is not plain");
                }
                if (e.hook() > y) {
                    int bumped_value = e.hook();
                    e.set_hook(y);
                    y = bumped_value;
                    bumped = true;
                    break;
                }
            }
            if (!bumped) {
                cells[Cell{row, len + 1}] = HookEntry(y);
                box = Cell{row, len + 1};
                break;
            }
            ++row;
        }
        q = q.with_added_cell(box, box.row - r);
    }
    SvtUncrowdResult result;
    result.P = HookValuedTableau::validate(std::move(cells));
    result.Q = q;
    return result;
}

HookValuedTableau inverse_uncrowd_svt(const HookValuedTableau& ssyt, const FlaggedTableau& q) {
    if (!ssyt.is_ssyt()) throw PreconditionError("inverse_uncrowd_svt requires a plain tableau");
    if (q.orientation() != Orientation::RowFlagged) {
        throw PreconditionError("inverse_uncrowd_svt requires a row-flagged recording tableau");
    }
    if (q.outer() != ssyt.shape()) throw ShapeMismatchError("recording tableau outer shape mismatch");

    struct Op {
        int source_row;
        Cell box;
    };
    std::vector<Op> ops;
    for (const auto& [cell, v] : q.entries()) ops.push_back(Op{cell.row - v, cell});
    // Reverse of the forward order (source rows descending, box rows
    // ascending within a source row).
    std::sort(ops.begin(), ops.end(), [](const Op& a, const Op& b) {
        if (a.source_row != b.source_row) return a.source_row < b.source_row;
        return a.box.row > b.box.row;
    });

    CellMap cells = ssyt.cells();
    for (const auto& op : ops) {
        auto it = cells.find(op.box);
        if (it == cells.end() || cells.count(Cell{op.box.row, op.box.col + 1}) ||
            cells.count(Cell{op.box.row + 1, op.box.col})) {
            throw PreconditionError("recording tableau does not describe removable corners");
        }
        int y = it->second.hook();
        cells.erase(it);
        for (int row = op.box.row - 1; row > op.source_row; --row) {
            // Rightmost entry below y reverse-bumps.
            int len = row_length_of(cells, row);
            int col = 0;
            for (int cc = len; cc >= 1; --cc) {
                if (cells.at(Cell{row, cc}).hook() < y) {
                    col = cc;
                    break;
                }
            }
            if (col == 0) throw PreconditionError("reverse RSK bump found no smaller entry");
            HookEntry& e = cells.at(Cell{row, col});
            int next = e.hook();
            e.set_hook(y);
            y = next;
        }
        // The ejected letter rejoins the rightmost cell it dominates.
        int len = row_length_of(cells, op.source_row);
        int col = 0;
        for (int cc = len; cc >= 1; --cc) {
            if (cells.at(Cell{op.source_row, cc}).max() < y) {
                col = cc;
                break;
            }
        }
        if (col == 0) throw PreconditionError("no cell can absorb the ejected letter");
        cells.at(Cell{op.source_row, col}).leg_insert(y);
    }
    return HookValuedTableau::validate(std::move(cells));
}

UncrowdResult uncrowd_mvt(const HookValuedTableau& mvt) {
    if (mvt.leg_excess() != 0) throw PreconditionError("uncrowd_mvt requires a multiset-valued tableau");
    const Partition& lambda = mvt.shape();
    int ncols = lambda.row_length(1);

    // Column reading word of a single column of the input.
    auto column_word = [&](int c) {
        Word w;
        for (int r = lambda.column_height(c); r >= 1; --r) w.push_back(mvt.entry(r, c).hook());
        std::vector<int> arms;
        for (int r = 1; r <= lambda.column_height(c); ++r) {
            const auto& arm = mvt.entry(r, c).arm();
            arms.insert(arms.end(), arm.begin(), arm.end());
        }
        std::sort(arms.begin(), arms.end());
        w.insert(w.end(), arms.begin(), arms.end());
        return w;
    };

    // Shape of the suffix tableau formed by columns k..ncols.
    auto suffix_shape = [&](int k) {
        std::vector<int> parts;
        for (int r = 1; r <= lambda.length(); ++r) {
            int len = lambda.row_length(r) - (k - 1);
            if (len > 0) parts.push_back(len);
        }
        return Partition(std::move(parts));
    };

    Ssyt prev_u;
    std::map<Cell, int> prev_f;
    for (int k = ncols; k >= 1; --k) {
        Word w;
        for (int c = k; c <= ncols; ++c) {
            Word cw = column_word(c);
            w.insert(w.end(), cw.begin(), cw.end());
        }
        Ssyt u = rsk_insert(w);
        std::map<Cell, int> f;
        for (const auto& [cell, v] : prev_f) f[Cell{cell.row, cell.col + 1}] = v;
        Partition u_shape = ssyt_shape(u);
        Partition prev_shape = ssyt_shape(prev_u);
        Partition inner = suffix_shape(k);
        for (int r = 1; r <= u_shape.length(); ++r) {
            for (int c = 1; c <= u_shape.row_length(r); ++c) {
                if (prev_shape.has_cell(r, c) || inner.has_cell(r, c)) continue;
                if (!f.count(Cell{r, c})) f[Cell{r, c}] = c - 1;
            }
        }
        if (static_cast<int>(f.size()) != u_shape.size() - inner.size()) {
            throw TableauError("column-suffix uncrowding produced an incomplete recording tableau");
        }
        prev_u = std::move(u);
        prev_f = std::move(f);
    }

    UncrowdResult result;
    result.P = prev_u.empty() ? HookValuedTableau() : ssyt_to_hvt(prev_u);
    result.Q = FlaggedTableau::validate(lambda, ssyt_shape(prev_u), Orientation::ColumnFlagged,
                                        std::move(prev_f));
    result.p_stages.push_back(mvt);
    result.p_stages.push_back(result.P);
    result.q_stages.push_back(FlaggedTableau::empty(lambda, Orientation::ColumnFlagged));
    result.q_stages.push_back(result.Q);
    return result;
}

}  // namespace hooktab
