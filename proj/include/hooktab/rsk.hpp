#pragma once

#include <vector>

#include "hooktab/reading_word.hpp"
#include "hooktab/tableau.hpp"

namespace hooktab {

// Semistandard Young tableau as plain rows, bottom row first (French).
using Ssyt = std::vector<std::vector<int>>;

// Classical RSK row insertion of a single letter; returns the new box.
Cell rsk_insert_letter(Ssyt& p, int x);

// RSK row insertion tableau P(w).
Ssyt rsk_insert(const Word& w);

Partition ssyt_shape(const Ssyt& p);
std::vector<int> ssyt_weight(const Ssyt& p);

// Highest weight for the type-A crystal: row r holds only the letter r.
bool ssyt_is_highest_weight(const Ssyt& p);

// Two words are Knuth equivalent iff they have the same insertion tableau.
bool knuth_equivalent(const Word& a, const Word& b);

HookValuedTableau ssyt_to_hvt(const Ssyt& p);
Ssyt hvt_to_ssyt(const HookValuedTableau& t);  // requires zero arm and leg excess

}  // namespace hooktab
