#pragma once

#include <vector>

#include "hooktab/tableau.hpp"

namespace hooktab {

using Word = std::vector<int>;

// One reading-word position together with the cell and structural slot the
// letter came from; the crystal operators need to locate the cell holding
// the letter at an unpaired position.
struct LetterRef {
    enum class Part { Hook, Leg, Arm };
    int row = 0;
    int col = 0;
    Part part = Part::Hook;
    int index = 0;  // position inside the arm/leg, 0 for the hook
    int value = 0;
};

// Column reading word R(T): columns left to right; within a column the
// extended leg of each cell read from top to bottom (cells visited top to
// bottom), then the column's remaining (arm) letters in weakly increasing
// order.
std::vector<LetterRef> column_reading_refs(const HookValuedTableau& t);
Word column_reading_word(const HookValuedTableau& t);

// Row reading word of a set-valued tableau: rows top to bottom; per row
// the non-minimal letters of each cell in descending order, then the
// per-cell minima in ascending order.
Word svt_reading_word(const HookValuedTableau& svt);

// Evaluation and reading word of a reverse plane partition. ev counts, for
// each letter, the columns containing it; the word reads the bottommost
// occurrence of each letter in each column, rows top to bottom.
std::pair<std::vector<int>, Word> rpp_eval_and_word(const ReversePlanePartition& r);

std::string word_to_string(const Word& w);  // digits concatenated when all letters are < 10

}  // namespace hooktab
