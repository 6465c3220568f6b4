#include "hooktab/rsk.hpp"

#include <algorithm>

#include "hooktab/errors.hpp"

namespace hooktab {

Cell rsk_insert_letter(Ssyt& p, int x) {
    int row = 0;
    for (;;) {
        if (row == static_cast<int>(p.size())) {
            p.push_back({x});
            return Cell{row + 1, 1};
        }
        auto& r = p[row];
        auto it = std::upper_bound(r.begin(), r.end(), x);
        if (it == r.end()) {
            r.push_back(x);
            return Cell{row + 1, static_cast<int>(r.size())};
        }
        std::swap(x, *it);
        ++row;
    }
}

Ssyt rsk_insert(const Word& w) {
    Ssyt p;
    for (int x : w) rsk_insert_letter(p, x);
    return p;
}

Partition ssyt_shape(const Ssyt& p) {
    std::vector<int> parts;
    for (const auto& r : p) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

std::vector<int> ssyt_weight(const Ssyt& p) {
    std::vector<int> w;
    for (const auto& r : p) {
        for (int v : r) {
            if (static_cast<int>(w.size()) < v) w.resize(v, 0);
            ++w[v - 1];
        }
    }
    return w;
}

bool ssyt_is_highest_weight(const Ssyt& p) {
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (int v : p[r]) {
            if (v != static_cast<int>(r) + 1) return false;
        }
    }
    return true;
}

bool knuth_equivalent(const Word& a, const Word& b) { return rsk_insert(a) == rsk_insert(b); }

HookValuedTableau ssyt_to_hvt(const Ssyt& p) {
    CellMap cells;
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (std::size_t c = 0; c < p[r].size(); ++c) {
            cells[Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1}] = HookEntry(p[r][c]);
        }
    }
    return HookValuedTableau::validate(std::move(cells));
}

Ssyt hvt_to_ssyt(const HookValuedTableau& t) {
    if (!t.is_ssyt()) throw PreconditionError("tableau has nonzero excess");
    Ssyt p;
    for (int r = 1; r <= t.shape().length(); ++r) {
        std::vector<int> row;
        for (int c = 1; c <= t.shape().row_length(r); ++c) row.push_back(t.entry(r, c).hook());
        p.push_back(std::move(row));
    }
    return p;
}

}  // namespace hooktab
