#pragma once

// The worked examples used across the test suites, frozen as builders.

#include <vector>

#include "hooktab/tableau.hpp"

namespace hooktab::fixtures {

struct CellSpec {
    int row;
    int col;
    int hook;
    std::vector<int> arm;
    std::vector<int> leg;
};

inline HookValuedTableau make_hvt(const std::vector<CellSpec>& specs) {
    CellMap cells;
    for (const auto& s : specs) {
        cells[Cell{s.row, s.col}] = HookEntry(s.hook, s.arm, s.leg);
    }
    return HookValuedTableau::validate(std::move(cells));
}

// Two-row tableau with reading word 432113543344445.
inline HookValuedTableau column_reading_example() {
    return make_hvt({
        {1, 1, 1, {1}, {2}},
        {1, 2, 3, {3, 4}, {4}},
        {1, 3, 4, {4, 4, 5}, {}},
        {2, 1, 3, {3}, {4}},
        {2, 2, 5, {}, {}},
    });
}

// 2x2 tableau with the displayed e_1, f_1, f_3 images; e_3 annihilates it.
inline HookValuedTableau crystal_example() {
    return make_hvt({
        {1, 1, 1, {1}, {2}},
        {1, 2, 2, {3, 3}, {3}},
        {2, 1, 3, {4}, {4}},
        {2, 2, 4, {}, {5}},
    });
}

inline HookValuedTableau crystal_example_f1() {
    return make_hvt({
        {1, 1, 1, {2}, {2}},
        {1, 2, 2, {3, 3}, {3}},
        {2, 1, 3, {4}, {4}},
        {2, 2, 4, {}, {5}},
    });
}

inline HookValuedTableau crystal_example_e1() {
    return make_hvt({
        {1, 1, 1, {1}, {}},
        {1, 2, 1, {3, 3}, {2, 3}},
        {2, 1, 3, {4}, {4}},
        {2, 2, 4, {}, {5}},
    });
}

inline HookValuedTableau crystal_example_f3() {
    return make_hvt({
        {1, 1, 1, {1}, {2}},
        {1, 2, 2, {3}, {3}},
        {2, 1, 3, {4}, {4}},
        {2, 2, 4, {4}, {5}},
    });
}

// Shape (3,2,1) tableau with arm and leg excess five; drives the
// uncrowding golden sequence.
inline HookValuedTableau uncrowding_example() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 1, {1}, {2}},
        {1, 3, 5, {}, {7}},
        {2, 1, 2, {3, 3}, {4, 5}},
        {2, 2, 6, {6}, {}},
        {3, 1, 6, {7}, {8}},
    });
}

// The displayed intermediate V_b(T) of the first uncrowding insertion.
inline HookValuedTableau uncrowding_example_bump1() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 1, {1}, {2}},
        {1, 3, 5, {7}, {6}},
        {2, 1, 2, {3, 3}, {4, 5}},
        {2, 2, 6, {}, {}},
        {3, 1, 6, {7}, {8}},
    });
}

// The uncrowding stages P_1..P_5 (P_5 = P(T)).
inline std::vector<HookValuedTableau> uncrowding_example_stages() {
    return {
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {1}, {2}},
            {1, 3, 5, {}, {6}},
            {1, 4, 7, {}, {}},
            {2, 1, 2, {3, 3}, {4, 5}},
            {2, 2, 6, {}, {}},
            {3, 1, 6, {7}, {8}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {1, 4, 5, {}, {6}},
            {1, 5, 7, {}, {}},
            {2, 1, 2, {3, 3}, {4, 5}},
            {2, 2, 6, {}, {}},
            {3, 1, 6, {7}, {8}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {1, 4, 5, {}, {6}},
            {1, 5, 7, {}, {}},
            {2, 1, 2, {3, 3}, {4, 5}},
            {2, 2, 6, {}, {}},
            {3, 1, 6, {}, {}},
            {3, 2, 7, {}, {8}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {1, 4, 5, {}, {6}},
            {1, 5, 7, {}, {}},
            {2, 1, 2, {3}, {}},
            {2, 2, 3, {}, {4, 5}},
            {2, 3, 6, {}, {}},
            {3, 1, 6, {}, {}},
            {3, 2, 7, {}, {8}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {1, 4, 5, {}, {6}},
            {1, 5, 6, {}, {}},
            {1, 6, 7, {}, {}},
            {2, 1, 2, {}, {}},
            {2, 2, 3, {}, {}},
            {2, 3, 3, {}, {4, 5}},
            {3, 1, 6, {}, {}},
            {3, 2, 7, {}, {8}},
        }),
    };
}

// Multiset-valued tableau driving the column-suffix uncrowding example.
inline HookValuedTableau mvt_example() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 1, {1}, {}},
        {1, 3, 4, {}, {}},
        {2, 1, 2, {3, 3}, {}},
        {2, 2, 3, {4, 5}, {}},
        {3, 1, 4, {5}, {}},
    });
}

inline HookValuedTableau mvt_example_u1() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 1, {}, {}},
        {1, 3, 1, {}, {}},
        {1, 4, 3, {}, {}},
        {1, 5, 4, {}, {}},
        {1, 6, 4, {}, {}},
        {2, 1, 2, {}, {}},
        {2, 2, 3, {}, {}},
        {2, 3, 3, {}, {}},
        {2, 4, 5, {}, {}},
        {3, 1, 4, {}, {}},
        {3, 2, 5, {}, {}},
    });
}

// The leg-uncrowding example of the alternative map.
inline HookValuedTableau leg_uncrowding_example() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 2, {2, 3}, {3}},
        {1, 3, 4, {}, {7}},
        {2, 1, 2, {3, 3}, {}},
        {2, 2, 7, {8}, {8}},
        {3, 1, 7, {9}, {}},
    });
}

inline HookValuedTableau leg_uncrowding_example_ptilde() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 2, {2}, {}},
        {1, 3, 4, {}, {}},
        {2, 1, 2, {3, 3}, {}},
        {2, 2, 3, {3, 7}, {}},
        {3, 1, 7, {7}, {}},
        {3, 2, 8, {}, {}},
        {4, 1, 8, {}, {}},
        {5, 1, 9, {}, {}},
    });
}

inline HookValuedTableau leg_uncrowding_example_bump1() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 2, {2, 3}, {3}},
        {1, 3, 4, {}, {7}},
        {2, 1, 2, {3, 3}, {}},
        {2, 2, 7, {8}, {}},
        {3, 1, 7, {8}, {9}},
    });
}

// The leg-uncrowding stages Ptilde_1..Ptilde_3 (Ptilde_3 = Ptilde(T)).
inline std::vector<HookValuedTableau> leg_uncrowding_example_stages() {
    return {
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 2, {2, 3}, {3}},
            {1, 3, 4, {}, {7}},
            {2, 1, 2, {3, 3}, {}},
            {2, 2, 7, {8}, {}},
            {3, 1, 7, {8}, {}},
            {4, 1, 9, {}, {}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 2, {2, 3}, {3}},
            {1, 3, 4, {}, {}},
            {2, 1, 2, {3, 3}, {}},
            {2, 2, 7, {7}, {}},
            {3, 1, 7, {8}, {}},
            {3, 2, 8, {}, {}},
            {4, 1, 9, {}, {}},
        }),
        leg_uncrowding_example_ptilde(),
    };
}

// Crowding example input pair on shapes (5,3,2)/(3,2,1).
inline HookValuedTableau crowding_example_svt() {
    return make_hvt({
        {1, 1, 1, {}, {}},
        {1, 2, 1, {}, {}},
        {1, 3, 1, {}, {2}},
        {1, 4, 4, {}, {}},
        {1, 5, 4, {}, {}},
        {2, 1, 2, {}, {}},
        {2, 2, 3, {}, {}},
        {2, 3, 3, {}, {4}},
        {3, 1, 4, {}, {5}},
        {3, 2, 5, {}, {}},
    });
}

inline FlaggedTableau crowding_example_flagged() {
    return FlaggedTableau::validate(
        Partition({3, 2, 1}), Partition({5, 3, 2}), Orientation::ColumnFlagged,
        {{Cell{1, 4}, 3}, {Cell{1, 5}, 4}, {Cell{2, 3}, 1}, {Cell{3, 2}, 1}});
}

// The four stage results T_1..T_4 of the crowding example.
inline std::vector<HookValuedTableau> crowding_example_stages() {
    return {
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {1, 4, 4, {}, {}},
            {2, 1, 2, {3}, {}},
            {2, 2, 3, {}, {4}},
            {2, 3, 4, {}, {}},
            {3, 1, 4, {}, {5}},
            {3, 2, 5, {}, {}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {2, 1, 2, {3}, {}},
            {2, 2, 3, {}, {4}},
            {2, 3, 4, {}, {}},
            {3, 1, 4, {4}, {5}},
            {3, 2, 5, {}, {}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {2, 1, 2, {3}, {}},
            {2, 2, 3, {}, {4}},
            {2, 3, 4, {}, {}},
            {3, 1, 4, {4, 5}, {5}},
        }),
        make_hvt({
            {1, 1, 1, {}, {}},
            {1, 2, 1, {}, {}},
            {1, 3, 1, {}, {2}},
            {2, 1, 2, {3}, {}},
            {2, 2, 3, {4}, {4}},
            {3, 1, 4, {4, 5}, {5}},
        }),
    };
}

// Crowding bumping examples: T' keeps the weight, S' loses a letter.
inline HookValuedTableau social_distancing_T() {
    return make_hvt({
        {1, 1, 1, {1}, {}},
        {1, 2, 2, {4}, {3, 4, 5}},
        {2, 1, 5, {}, {}},
    });
}

inline HookValuedTableau social_distancing_T_result() {
    return make_hvt({
        {1, 1, 1, {1, 2}, {3, 4}},
        {1, 2, 4, {}, {5}},
        {2, 1, 5, {}, {}},
    });
}

inline HookValuedTableau social_distancing_S() {
    return make_hvt({
        {1, 1, 1, {}, {2}},
        {1, 2, 2, {}, {3}},
        {2, 1, 3, {}, {}},
    });
}

inline HookValuedTableau social_distancing_S_result() {
    return make_hvt({
        {1, 1, 1, {}, {2}},
        {2, 1, 3, {3}, {}},
    });
}

inline FlaggedTableau social_distancing_flagged() {
    return FlaggedTableau::validate(Partition({1, 1}), Partition({2, 1}),
                                    Orientation::ColumnFlagged, {{Cell{1, 2}, 1}});
}

}  // namespace hooktab::fixtures
