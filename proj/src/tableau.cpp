#include "hooktab/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

std::string cell_name(const Cell& c) {
    std::ostringstream os;
    os << '(' << c.row << ',' << c.col << ')';
    return os.str();
}

}  // namespace

Partition shape_of_support(const CellMap& cells) {
    std::vector<int> row_len;
    for (const auto& [cell, entry] : cells) {
        if (cell.row < 1 || cell.col < 1) throw ShapeMismatchError("cell outside the positive quadrant");
        if (static_cast<int>(row_len.size()) < cell.row) row_len.resize(cell.row, 0);
        row_len[cell.row - 1] = std::max(row_len[cell.row - 1], cell.col);
    }
    int expected = 0;
    for (int len : row_len) expected += len;
    if (expected != static_cast<int>(cells.size())) {
        throw ShapeMismatchError("cells do not fill a straight shape");
    }
    for (std::size_t r = 0; r + 1 < row_len.size(); ++r) {
        if (row_len[r] < row_len[r + 1]) throw ShapeMismatchError("row lengths not weakly decreasing");
    }
    for (std::size_t r = 0; r < row_len.size(); ++r) {
        if (row_len[r] == 0) throw ShapeMismatchError("empty row inside the shape");
        for (int c = 1; c <= row_len[r]; ++c) {
            if (!cells.count(Cell{static_cast<int>(r) + 1, c})) {
                throw ShapeMismatchError("missing cell " + cell_name(Cell{static_cast<int>(r) + 1, c}));
            }
        }
    }
    return Partition(std::move(row_len));
}

void check_hvt(const Partition& shape, const CellMap& cells) {
    for (const auto& [cell, entry] : cells) {
        if (!shape.has_cell(cell.row, cell.col)) {
            throw ShapeMismatchError("cell " + cell_name(cell) + " outside shape " + to_string(shape));
        }
    }
    if (static_cast<int>(cells.size()) != shape.size()) {
        throw ShapeMismatchError("cell count does not match shape size");
    }
    for (const auto& [cell, entry] : cells) {
        entry.check();
        auto right = cells.find(Cell{cell.row, cell.col + 1});
        if (right != cells.end() && entry.max() > right->second.min()) {
            throw RowViolationError("row condition fails between " + cell_name(cell) + " and its right neighbor");
        }
        auto above = cells.find(Cell{cell.row + 1, cell.col});
        if (above != cells.end() && entry.max() >= above->second.min()) {
            throw ColumnViolationError("column condition fails between " + cell_name(cell) + " and the cell above");
        }
    }
}

HookValuedTableau HookValuedTableau::validate(const Partition& shape, CellMap cells) {
    check_hvt(shape, cells);
    HookValuedTableau t;
    t.shape_ = shape;
    t.cells_ = std::move(cells);
    return t;
}

HookValuedTableau HookValuedTableau::validate(CellMap cells) {
    Partition shape = shape_of_support(cells);
    return validate(shape, std::move(cells));
}

const HookEntry& HookValuedTableau::entry(int r, int c) const {
    auto it = cells_.find(Cell{r, c});
    if (it == cells_.end()) throw ShapeMismatchError("no cell at " + cell_name(Cell{r, c}));
    return it->second;
}

int HookValuedTableau::arm_excess() const {
    int total = 0;
    for (const auto& [cell, entry] : cells_) total += entry.arm_excess();
    return total;
}

int HookValuedTableau::leg_excess() const {
    int total = 0;
    for (const auto& [cell, entry] : cells_) total += entry.leg_excess();
    return total;
}

int HookValuedTableau::total_letters() const {
    return shape_.size() + arm_excess() + leg_excess();
}

int HookValuedTableau::max_letter() const {
    int m = 0;
    for (const auto& [cell, entry] : cells_) m = std::max(m, entry.max());
    return m;
}

std::vector<int> weight_of(const CellMap& cells) {
    std::vector<int> w;
    for (const auto& [cell, entry] : cells) {
        for (int v : entry.all_letters()) {
            if (static_cast<int>(w.size()) < v) w.resize(v, 0);
            ++w[v - 1];
        }
    }
    return w;
}

std::vector<int> HookValuedTableau::weight() const { return weight_of(cells_); }

ReversePlanePartition ReversePlanePartition::validate(const Partition& shape,
                                                      std::map<Cell, int> entries) {
    for (const auto& [cell, v] : entries) {
        if (!shape.has_cell(cell.row, cell.col)) {
            throw ShapeMismatchError("RPP entry outside shape");
        }
        if (v < 1) throw TableauError("RPP entries must be positive");
    }
    if (static_cast<int>(entries.size()) != shape.size()) {
        throw ShapeMismatchError("RPP entry count does not match shape size");
    }
    for (const auto& [cell, v] : entries) {
        auto right = entries.find(Cell{cell.row, cell.col + 1});
        if (right != entries.end() && v > right->second) {
            throw RowViolationError("RPP row not weakly increasing");
        }
        auto above = entries.find(Cell{cell.row + 1, cell.col});
        if (above != entries.end() && v > above->second) {
            throw ColumnViolationError("RPP column not weakly increasing");
        }
    }
    ReversePlanePartition r;
    r.shape_ = shape;
    r.entries_ = std::move(entries);
    return r;
}

FlaggedTableau FlaggedTableau::validate(const Partition& inner, const Partition& outer,
                                        Orientation orientation, std::map<Cell, int> entries) {
    if (!outer.contains(inner)) throw ShapeNotNestedError("inner shape not contained in outer shape");
    if (orientation == Orientation::RowFlagged) {
        if (inner.row_length(1) != outer.row_length(1)) {
            throw ShapeMismatchError("row-flagged tableau requires equal first parts");
        }
    } else {
        if (inner.length() != outer.length()) {
            throw ShapeMismatchError("column-flagged tableau requires equal lengths");
        }
    }
    auto in_skew = [&](int r, int c) {
        return outer.has_cell(r, c) && !inner.has_cell(r, c);
    };
    for (const auto& [cell, v] : entries) {
        if (!in_skew(cell.row, cell.col)) throw ShapeMismatchError("flagged entry outside the skew shape");
        if (v < 1) throw TableauError("flagged entries must be positive");
        int bound = (orientation == Orientation::RowFlagged) ? cell.row - 1 : cell.col - 1;
        if (v > bound) throw TableauError("flag condition violated");
    }
    if (static_cast<int>(entries.size()) != outer.size() - inner.size()) {
        throw ShapeMismatchError("flagged entry count does not match skew size");
    }
    for (const auto& [cell, v] : entries) {
        auto right = entries.find(Cell{cell.row, cell.col + 1});
        if (right != entries.end() && v >= right->second) {
            throw RowViolationError("flagged row not strictly increasing");
        }
        auto above = entries.find(Cell{cell.row + 1, cell.col});
        if (above != entries.end() && v >= above->second) {
            throw ColumnViolationError("flagged column not strictly increasing");
        }
    }
    FlaggedTableau f;
    f.inner_ = inner;
    f.outer_ = outer;
    f.orientation_ = orientation;
    f.entries_ = std::move(entries);
    return f;
}

FlaggedTableau FlaggedTableau::empty(const Partition& shape, Orientation orientation) {
    return validate(shape, shape, orientation, {});
}

FlaggedTableau FlaggedTableau::transposed() const {
    std::map<Cell, int> flipped;
    for (const auto& [cell, v] : entries_) flipped[Cell{cell.col, cell.row}] = v;
    Orientation flipped_orientation = (orientation_ == Orientation::RowFlagged)
                                          ? Orientation::ColumnFlagged
                                          : Orientation::RowFlagged;
    return validate(inner_.conjugate(), outer_.conjugate(), flipped_orientation, std::move(flipped));
}

FlaggedTableau FlaggedTableau::with_added_cell(Cell cell, int value) const {
    std::vector<int> parts;
    for (int r = 1; r <= std::max(outer_.length(), cell.row); ++r) {
        int len = outer_.row_length(r);
        if (r == cell.row) {
            if (cell.col != len + 1) throw ShapeMismatchError("added cell is not a corner of the outer shape");
            len = cell.col;
        }
        if (len > 0) parts.push_back(len);
    }
    auto extended = entries_;
    extended[cell] = value;
    return validate(inner_, Partition(std::move(parts)), orientation_, std::move(extended));
}

}  // namespace hooktab
