#pragma once

#include <string>
#include <vector>

#include "hooktab/partition.hpp"

namespace hooktab {

// Outcome of one exhaustive sweep. `checked` counts instances (tableaux,
// pairs, edges) and `notes` carries one line per failure, capped.
struct VerifyStats {
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> notes;

    void merge(const VerifyStats& o);
    void record_failure(const std::string& note);
};

// All sweeps run over enumerate_hvt(shape, max_entry, arm, leg) with the
// exact excess pair; drivers combine the (arm, leg) buckets they need.

// crowd(uncrowd(T)) == T, plus uncrowd(crowd(S,F)) == (S,F) over all pairs
// with |mu| - |shape| == arm and leg excess == leg that pass membership.
VerifyStats verify_roundtrip(const Partition& shape, int max_entry, int arm, int leg, int jobs = 1);

// f_i P = P f_i, Q invariant, annihilation transfer, both directions and
// both uncrowding variants.
VerifyStats verify_intertwine(const Partition& shape, int max_entry, int arm, int leg,
                              int jobs = 1);

// Restricted reading words keep their insertion tableau under one bumping.
VerifyStats verify_knuth(const Partition& shape, int max_entry, int arm, int leg, int jobs = 1);

// uncrowd agrees with the column-suffix map on multiset-valued tableaux
// (leg is ignored; the sweep runs over leg excess zero).
VerifyStats verify_mvt_agreement(const Partition& shape, int max_entry, int arm, int jobs = 1);

// Every connected crystal component is isomorphic, as an edge-colored
// graph, to the crystal on plain tableaux of its highest weight.
VerifyStats verify_stembridge(const Partition& shape, int max_entry, int arm, int leg);

// Recording tableaux validate with the right orientation and all maps
// preserve the weight.
VerifyStats verify_recording_and_weights(const Partition& shape, int max_entry, int arm, int leg,
                                         int jobs = 1);

}  // namespace hooktab
