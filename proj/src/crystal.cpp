#include "hooktab/crystal.hpp"

#include <algorithm>
#include <map>

#include "hooktab/enumerate.hpp"
#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

PairingResult pair_refs(const std::vector<LetterRef>& refs, int i) {
    PairingResult result;
    result.i = i;
    std::vector<int> open_plus;
    for (int pos = 0; pos < static_cast<int>(refs.size()); ++pos) {
        int v = refs[pos].value;
        if (v == i + 1) {
            open_plus.push_back(pos);
        } else if (v == i) {
            if (!open_plus.empty()) {
                result.paired.emplace_back(open_plus.back(), pos);
                open_plus.pop_back();
            } else {
                result.unpaired_minus.push_back(pos);
            }
        }
    }
    result.unpaired_plus = std::move(open_plus);
    return result;
}

// In-place letter change at the exact slot the reading word points at.
void change_letter(HookEntry& e, const LetterRef& ref, int to) {
    switch (ref.part) {
        case LetterRef::Part::Hook:
            e.set_hook(to);
            break;
        case LetterRef::Part::Leg: {
            auto leg = e.leg();
            e.leg_erase_one(leg[ref.index]);
            e.leg_insert(to);
            break;
        }
        case LetterRef::Part::Arm:
            e.arm_erase_one(ref.value);
            e.arm_insert(to);
            break;
    }
}

}  // namespace

PairingResult pair_letters(const HookValuedTableau& t, int i) {
    if (i < 1) throw PreconditionError("crystal index must be at least 1");
    return pair_refs(column_reading_refs(t), i);
}

int phi(const HookValuedTableau& t, int i) { return pair_letters(t, i).phi(); }
int eps(const HookValuedTableau& t, int i) { return pair_letters(t, i).eps(); }

std::optional<HookValuedTableau> apply_crystal(const HookValuedTableau& t, int i, Direction dir) {
    if (i < 1) throw PreconditionError("crystal index must be at least 1");
    auto refs = column_reading_refs(t);
    PairingResult pr = pair_refs(refs, i);

    CellMap cells = t.cells();
    if (dir == Direction::Lower) {
        if (pr.unpaired_minus.empty()) return std::nullopt;
        const LetterRef& ref = refs[pr.unpaired_minus.back()];
        Cell c{ref.row, ref.col};
        HookEntry& b = cells.at(c);
        auto above = cells.find(Cell{ref.row + 1, ref.col});
        auto right = cells.find(Cell{ref.row, ref.col + 1});
        if (above != cells.end() && above->second.contains(i + 1)) {
            // (M): the acted letter sits in the arm of B.
            b.arm_erase_one(i);
            above->second.arm_insert(i + 1);
        } else if (right != cells.end() && right->second.extended_leg_contains(i)) {
            // (S)
            right->second.extended_leg_remove(i);
            b.leg_insert(i + 1);
        } else {
            // (N)
            change_letter(b, ref, i + 1);
        }
    } else {
        if (pr.unpaired_plus.empty()) return std::nullopt;
        const LetterRef& ref = refs[pr.unpaired_plus.front()];
        Cell c{ref.row, ref.col};
        HookEntry& b = cells.at(c);
        auto below = cells.find(Cell{ref.row - 1, ref.col});
        auto left = cells.find(Cell{ref.row, ref.col - 1});
        if (below != cells.end() && below->second.contains(i)) {
            // (M)
            b.arm_erase_one(i + 1);
            below->second.arm_insert(i);
        } else if (left != cells.end() && left->second.leg_contains(i + 1)) {
            // (S)
            left->second.leg_erase_one(i + 1);
            b.extended_leg_insert(i);
        } else {
            // (N)
            change_letter(b, ref, i);
        }
    }
    return HookValuedTableau::validate(t.shape(), std::move(cells));
}

bool is_highest_weight(const HookValuedTableau& t, int max_i) {
    for (int i = 1; i <= max_i; ++i) {
        if (eps(t, i) > 0) return false;
    }
    return true;
}

std::vector<std::vector<int>> CrystalGraph::components() const {
    int n = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> adjacency(n);
    for (const auto& e : edges) {
        adjacency[e.source].push_back(e.target);
        adjacency[e.target].push_back(e.source);
    }
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v) {
        if (label[v] >= 0) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{v};
        label[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comps[id].push_back(u);
            for (int w : adjacency[u]) {
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }
    return comps;
}

CrystalGraph build_crystal_graph(const Partition& shape, int max_entry, int arm_excess,
                                 int leg_excess) {
    CrystalGraph g;
    g.vertices = enumerate_hvt(shape, max_entry, arm_excess, leg_excess);
    std::map<HookValuedTableau, int> index;
    for (int k = 0; k < static_cast<int>(g.vertices.size()); ++k) index[g.vertices[k]] = k;
    for (int k = 0; k < static_cast<int>(g.vertices.size()); ++k) {
        for (int i = 1; i < max_entry; ++i) {
            if (auto image = lower(g.vertices[k], i)) {
                auto it = index.find(*image);
                if (it == index.end()) {
                    throw TableauError("crystal operator left the enumerated vertex set");
                }
                g.edges.push_back(CrystalEdge{k, it->second, i});
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace hooktab
