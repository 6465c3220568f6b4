#pragma once

#include <compare>
#include <vector>

namespace hooktab {

// One cell of a hook-valued tableau: a semistandard Young tableau of hook
// shape, stored as hook entry + arm (weakly increasing, to the right) +
// leg (strictly increasing, above). The extended leg is hook followed by
// the leg.
class HookEntry {
public:
    HookEntry() : hook_(1) {}
    explicit HookEntry(int hook, std::vector<int> arm = {}, std::vector<int> leg = {});

    int hook() const { return hook_; }
    const std::vector<int>& arm() const { return arm_; }
    const std::vector<int>& leg() const { return leg_; }

    int min() const { return hook_; }
    int max() const;

    std::vector<int> extended_leg() const;  // {hook, leg...}
    std::vector<int> all_letters() const;   // hook, arm, leg combined (unordered multiset)

    int arm_excess() const { return static_cast<int>(arm_.size()); }
    int leg_excess() const { return static_cast<int>(leg_.size()); }

    bool contains(int v) const;
    bool leg_contains(int v) const;
    bool extended_leg_contains(int v) const;
    bool arm_contains(int v) const;

    // Mutators used by the crystal and (un)crowding algorithms. Each keeps
    // the cell-local sortedness invariants and throws CellNotHookError when
    // the request cannot produce a hook-shaped cell.
    void set_hook(int v) { hook_ = v; }
    void arm_insert(int v);
    void arm_erase_one(int v);
    void leg_insert(int v);         // strict; throws on duplicate
    void leg_erase_one(int v);
    // Insert into / remove from the extended leg; the hook entry is
    // promoted or demoted as needed (inserting v < hook makes v the new
    // hook and pushes the old hook onto the leg).
    void extended_leg_insert(int v);
    void extended_leg_remove(int v);

    // Replace one occurrence of value v anywhere in the extended leg.
    void extended_leg_replace(int v, int replacement);
    // Replace the first occurrence of v in hook+arm read left to right.
    void extended_arm_replace_first(int v, int replacement);

    void check() const;  // full cell-local validation; throws CellNotHookError

    auto operator<=>(const HookEntry&) const = default;

private:
    int hook_;
    std::vector<int> arm_;
    std::vector<int> leg_;
};

}  // namespace hooktab
