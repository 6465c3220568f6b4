#pragma once

#include <optional>
#include <vector>

#include "hooktab/reading_word.hpp"
#include "hooktab/tableau.hpp"

namespace hooktab {

// Outcome of the i-pairing rule on R(T): every i is a minus, every i+1 a
// plus, and adjacent +- pairs cancel until stable. All positions refer to
// R(T). After cancellation every unpaired minus lies to the left of every
// unpaired plus; phi_i and eps_i are the unpaired counts.
struct PairingResult {
    int i = 0;
    std::vector<std::pair<int, int>> paired;  // (plus position, minus position)
    std::vector<int> unpaired_minus;
    std::vector<int> unpaired_plus;

    int phi() const { return static_cast<int>(unpaired_minus.size()); }
    int eps() const { return static_cast<int>(unpaired_plus.size()); }
};

PairingResult pair_letters(const HookValuedTableau& t, int i);

enum class Direction { Lower, Raise };

// Crystal operators of Hawkes-Scrimshaw: Lower applies f_i, Raise applies
// e_i, each acting on the cell of the rightmost unpaired minus (resp.
// leftmost unpaired plus) through the first applicable rule (M), (S), (N).
// Annihilation is reported as std::nullopt.
std::optional<HookValuedTableau> apply_crystal(const HookValuedTableau& t, int i, Direction dir);

inline std::optional<HookValuedTableau> lower(const HookValuedTableau& t, int i) {
    return apply_crystal(t, i, Direction::Lower);
}
inline std::optional<HookValuedTableau> raise(const HookValuedTableau& t, int i) {
    return apply_crystal(t, i, Direction::Raise);
}

int phi(const HookValuedTableau& t, int i);
int eps(const HookValuedTableau& t, int i);

// True iff e_i annihilates t for all 1 <= i <= max_i.
bool is_highest_weight(const HookValuedTableau& t, int max_i);
inline bool is_highest_weight(const HookValuedTableau& t) {
    return is_highest_weight(t, t.max_letter());
}

struct CrystalEdge {
    int source = 0;
    int target = 0;
    int color = 0;
    auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
    std::vector<HookValuedTableau> vertices;
    std::vector<CrystalEdge> edges;

    std::vector<std::vector<int>> components() const;  // vertex indices per component
};

// Graph on the full enumerated vertex set with all f_i edges, i < max_entry.
CrystalGraph build_crystal_graph(const Partition& shape, int max_entry, int arm_excess,
                                 int leg_excess);

}  // namespace hooktab
