#include "hooktab/reading_word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hooktab/errors.hpp"

namespace hooktab {

std::vector<LetterRef> column_reading_refs(const HookValuedTableau& t) {
    std::vector<LetterRef> out;
    const Partition& shape = t.shape();
    int ncols = shape.row_length(1);
    for (int c = 1; c <= ncols; ++c) {
        int height = shape.column_height(c);
        for (int r = height; r >= 1; --r) {
            const HookEntry& e = t.entry(r, c);
            const auto& leg = e.leg();
            for (int k = static_cast<int>(leg.size()) - 1; k >= 0; --k) {
                out.push_back(LetterRef{r, c, LetterRef::Part::Leg, k, leg[k]});
            }
            out.push_back(LetterRef{r, c, LetterRef::Part::Hook, 0, e.hook()});
        }
        std::vector<LetterRef> arms;
        for (int r = 1; r <= height; ++r) {
            const auto& arm = t.entry(r, c).arm();
            for (int k = 0; k < static_cast<int>(arm.size()); ++k) {
                arms.push_back(LetterRef{r, c, LetterRef::Part::Arm, k, arm[k]});
            }
        }
        std::stable_sort(arms.begin(), arms.end(), [](const LetterRef& a, const LetterRef& b) {
            return std::tie(a.value, a.row, a.index) < std::tie(b.value, b.row, b.index);
        });
        out.insert(out.end(), arms.begin(), arms.end());
    }
    return out;
}

Word column_reading_word(const HookValuedTableau& t) {
    Word w;
    for (const auto& ref : column_reading_refs(t)) w.push_back(ref.value);
    return w;
}

Word svt_reading_word(const HookValuedTableau& svt) {
    if (svt.arm_excess() != 0) throw PreconditionError("row reading word requires a set-valued tableau");
    Word w;
    for (int r = svt.shape().length(); r >= 1; --r) {
        std::vector<int> rest;
        std::vector<int> minima;
        for (int c = 1; c <= svt.shape().row_length(r); ++c) {
            const HookEntry& e = svt.entry(r, c);
            minima.push_back(e.hook());
            for (int v : e.leg()) rest.push_back(v);
        }
        std::sort(rest.rbegin(), rest.rend());
        w.insert(w.end(), rest.begin(), rest.end());
        w.insert(w.end(), minima.begin(), minima.end());
    }
    return w;
}

std::pair<std::vector<int>, Word> rpp_eval_and_word(const ReversePlanePartition& r) {
    const Partition& shape = r.shape();
    std::vector<int> ev;
    std::set<Cell> circled;
    for (int c = 1; c <= shape.row_length(1); ++c) {
        int height = shape.column_height(c);
        // Bottommost occurrence of each letter within the column.
        std::map<int, int> lowest_row;
        for (int row = height; row >= 1; --row) lowest_row[r.entry(row, c)] = row;
        for (const auto& [letter, row] : lowest_row) {
            circled.insert(Cell{row, c});
            if (static_cast<int>(ev.size()) < letter) ev.resize(letter, 0);
            ++ev[letter - 1];
        }
    }
    Word w;
    for (int row = shape.length(); row >= 1; --row) {
        for (int c = 1; c <= shape.row_length(row); ++c) {
            if (circled.count(Cell{row, c})) w.push_back(r.entry(row, c));
        }
    }
    return {ev, w};
}

std::string word_to_string(const Word& w) {
    bool compact = std::all_of(w.begin(), w.end(), [](int v) { return v < 10; });
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!compact && k) os << ' ';
        os << w[k];
    }
    return os.str();
}

}  // namespace hooktab
