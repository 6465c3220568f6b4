#include "hooktab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "hooktab/crowding.hpp"
#include "hooktab/crystal.hpp"
#include "hooktab/enumerate.hpp"
#include "hooktab/errors.hpp"
#include "hooktab/serialize.hpp"
#include "hooktab/uncrowding.hpp"

namespace hooktab {

namespace {

constexpr std::size_t kMaxNotes = 20;

// Chunked parallel sweep over a vector of instances; each worker fills its
// own stats, merged in index order for determinism.
template <typename T, typename Fn>
VerifyStats sweep(const std::vector<T>& items, int jobs, Fn&& check) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || items.size() < 64) {
        VerifyStats stats;
        for (const auto& item : items) check(item, stats);
        return stats;
    }
    std::vector<VerifyStats> partial(jobs);
    std::vector<std::thread> workers;
    std::size_t chunk = (items.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(items.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi, w]() {
            for (std::size_t k = lo; k < hi; ++k) check(items[k], partial[w]);
        });
    }
    for (auto& t : workers) t.join();
    VerifyStats stats;
    for (const auto& p : partial) stats.merge(p);
    return stats;
}

Word restrict_word(const Word& w, int i) {
    Word out;
    for (int v : w) {
        if (v == i || v == i + 1) out.push_back(v);
    }
    return out;
}

}  // namespace

void VerifyStats::merge(const VerifyStats& o) {
    checked += o.checked;
    failures += o.failures;
    for (const auto& n : o.notes) {
        if (notes.size() < kMaxNotes) notes.push_back(n);
    }
}

void VerifyStats::record_failure(const std::string& note) {
    ++failures;
    if (notes.size() < kMaxNotes) notes.push_back(note);
}

VerifyStats verify_roundtrip(const Partition& shape, int max_entry, int arm, int leg, int jobs) {
    auto tableaux = enumerate_hvt(shape, max_entry, arm, leg);
    VerifyStats stats = sweep(tableaux, jobs, [&](const HookValuedTableau& t, VerifyStats& s) {
        ++s.checked;
        auto u = uncrowd(t);
        try {
            if (crowd(u.P, u.Q).T != t) {
                s.record_failure("crowd(uncrowd(T)) != T for " + canonical_string(t));
            }
        } catch (const TableauError& e) {
            s.record_failure(std::string("crowding failed: ") + e.what());
        }
    });

    // Inverse direction over the admitted pairs with matching excesses.
    for (const auto& mu : Partition::all_containing(shape, shape.size() + arm)) {
        if (mu.size() != shape.size() + arm) continue;
        if (mu.length() != shape.length()) continue;
        auto flagged = enumerate_flagged(shape, mu, Orientation::ColumnFlagged);
        if (flagged.empty()) continue;
        auto svts = enumerate_hvt(mu, max_entry, 0, leg);
        VerifyStats inverse =
            sweep(svts, jobs, [&](const HookValuedTableau& svt, VerifyStats& s) {
                for (const auto& f : flagged) {
                    if (!k_lambda_member(svt, f)) continue;
                    ++s.checked;
                    auto t = crowd(svt, f);
                    auto u = uncrowd(t.T);
                    if (u.P != svt || u.Q != f) {
                        s.record_failure("uncrowd(crowd(S,F)) != (S,F) for " +
                                         canonical_string(svt));
                    }
                }
            });
        stats.merge(inverse);
    }
    return stats;
}

VerifyStats verify_intertwine(const Partition& shape, int max_entry, int arm, int leg, int jobs) {
    auto tableaux = enumerate_hvt(shape, max_entry, arm, leg);
    return sweep(tableaux, jobs, [&](const HookValuedTableau& t, VerifyStats& s) {
        auto u = uncrowd(t);
        auto ul = multiset_uncrowd(t);
        for (int i = 1; i < max_entry; ++i) {
            ++s.checked;
            auto ft = lower(t, i);
            auto fp = lower(u.P, i);
            auto fpl = lower(ul.P, i);
            if (ft.has_value() != fp.has_value() || ft.has_value() != fpl.has_value()) {
                s.record_failure("annihilation transfer failed for " + canonical_string(t));
                continue;
            }
            if (ft) {
                auto uf = uncrowd(*ft);
                auto ufl = multiset_uncrowd(*ft);
                if (uf.P != *fp || uf.Q != u.Q || ufl.P != *fpl || ufl.Q != ul.Q) {
                    s.record_failure("lowering does not intertwine for " + canonical_string(t));
                }
            }
            auto et = raise(t, i);
            auto ep = raise(u.P, i);
            auto epl = raise(ul.P, i);
            if (et.has_value() != ep.has_value() || et.has_value() != epl.has_value()) {
                s.record_failure("raising annihilation transfer failed for " +
                                 canonical_string(t));
                continue;
            }
            if (et) {
                auto ue = uncrowd(*et);
                auto uel = multiset_uncrowd(*et);
                if (ue.P != *ep || ue.Q != u.Q || uel.P != *epl || uel.Q != ul.Q) {
                    s.record_failure("raising does not intertwine for " + canonical_string(t));
                }
            }
        }
    });
}

VerifyStats verify_knuth(const Partition& shape, int max_entry, int arm, int leg, int jobs) {
    auto tableaux = enumerate_hvt(shape, max_entry, arm, leg);
    return sweep(tableaux, jobs, [&](const HookValuedTableau& t, VerifyStats& s) {
        auto bumped = uncrowd_bump(t);
        Word w = column_reading_word(t);
        Word wb = column_reading_word(bumped);
        for (int i = 1; i < max_entry; ++i) {
            ++s.checked;
            if (rsk_insert(restrict_word(w, i)) != rsk_insert(restrict_word(wb, i))) {
                s.record_failure("restricted word not Knuth stable for " + canonical_string(t));
            }
        }
    });
}

VerifyStats verify_mvt_agreement(const Partition& shape, int max_entry, int arm, int jobs) {
    auto tableaux = enumerate_hvt(shape, max_entry, arm, 0);
    return sweep(tableaux, jobs, [&](const HookValuedTableau& t, VerifyStats& s) {
        ++s.checked;
        auto via_bumps = uncrowd(t);
        auto via_suffixes = uncrowd_mvt(t);
        if (via_bumps.P != via_suffixes.P || via_bumps.Q != via_suffixes.Q) {
            s.record_failure("column-suffix uncrowding disagrees for " + canonical_string(t));
        }
    });
}

VerifyStats verify_stembridge(const Partition& shape, int max_entry, int arm, int leg) {
    VerifyStats stats;
    auto g = build_crystal_graph(shape, max_entry, arm, leg);
    std::map<std::pair<int, int>, int> down;
    for (const auto& e : g.edges) down[{e.source, e.color}] = e.target;

    for (const auto& comp : g.components()) {
        ++stats.checked;
        std::vector<int> highs;
        for (int v : comp) {
            if (is_highest_weight(g.vertices[v], max_entry - 1)) highs.push_back(v);
        }
        if (highs.size() != 1) {
            stats.record_failure("component without a unique highest weight");
            continue;
        }
        auto wt = g.vertices[highs[0]].weight();
        while (!wt.empty() && wt.back() == 0) wt.pop_back();
        if (!std::is_sorted(wt.rbegin(), wt.rend())) {
            stats.record_failure("highest weight is not a partition");
            continue;
        }
        Partition hw(wt);
        auto reference = build_crystal_graph(hw, max_entry, 0, 0);
        std::map<std::pair<int, int>, int> ref_down;
        for (const auto& e : reference.edges) ref_down[{e.source, e.color}] = e.target;
        int ref_high = -1;
        for (int v = 0; v < static_cast<int>(reference.vertices.size()); ++v) {
            if (is_highest_weight(reference.vertices[v], max_entry - 1)) ref_high = v;
        }
        if (ref_high < 0) {
            stats.record_failure("reference crystal has no highest weight");
            continue;
        }

        // Both graphs are deterministic color-walks from the highest
        // vertex, so the isomorphism is forced; walk in lockstep.
        bool ok = true;
        std::map<int, int> iso{{highs[0], ref_high}};
        std::vector<int> queue{highs[0]};
        while (!queue.empty() && ok) {
            int v = queue.back();
            queue.pop_back();
            for (int color = 1; color < max_entry; ++color) {
                auto it = down.find({v, color});
                auto ref_it = ref_down.find({iso[v], color});
                if ((it != down.end()) != (ref_it != ref_down.end())) {
                    ok = false;
                    break;
                }
                if (it == down.end()) continue;
                auto known = iso.find(it->second);
                if (known == iso.end()) {
                    iso[it->second] = ref_it->second;
                    queue.push_back(it->second);
                } else if (known->second != ref_it->second) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || iso.size() != comp.size() || iso.size() != reference.vertices.size()) {
            stats.record_failure("component not isomorphic to the plain crystal of " +
                                 to_string(hw));
            continue;
        }
        // Character identity as an extra guard.
        std::multiset<std::vector<int>> component_weights, reference_weights;
        for (int v : comp) component_weights.insert(g.vertices[v].weight());
        for (const auto& v : reference.vertices) reference_weights.insert(v.weight());
        if (component_weights != reference_weights) {
            stats.record_failure("character mismatch against " + to_string(hw));
        }
    }
    return stats;
}

VerifyStats verify_recording_and_weights(const Partition& shape, int max_entry, int arm, int leg,
                                         int jobs) {
    auto tableaux = enumerate_hvt(shape, max_entry, arm, leg);
    return sweep(tableaux, jobs, [&](const HookValuedTableau& t, VerifyStats& s) {
        ++s.checked;
        try {
            auto u = uncrowd(t);
            FlaggedTableau::validate(u.Q.inner(), u.Q.outer(), Orientation::ColumnFlagged,
                                     u.Q.entries());
            auto ul = multiset_uncrowd(t);
            FlaggedTableau::validate(ul.Q.inner(), ul.Q.outer(), Orientation::RowFlagged,
                                     ul.Q.entries());
            bool ok = u.P.weight() == t.weight() && ul.P.weight() == t.weight() &&
                      u.P.is_set_valued() && ul.P.is_multiset_valued();
            if (t.is_set_valued()) {
                auto us = uncrowd_svt(t);
                FlaggedTableau::validate(us.Q.inner(), us.Q.outer(), Orientation::RowFlagged,
                                         us.Q.entries());
                ok = ok && us.P.weight() == t.weight() && us.P.is_ssyt();
            }
            if (!ok) s.record_failure("weight or family violated for " + canonical_string(t));
        } catch (const TableauError& e) {
            s.record_failure(std::string("recording tableau invalid: ") + e.what());
        }
    });
}

}  // namespace hooktab
