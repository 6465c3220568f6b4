#include "hooktab/hook_entry.hpp"

#include <algorithm>

#include "hooktab/errors.hpp"

namespace hooktab {

HookEntry::HookEntry(int hook, std::vector<int> arm, std::vector<int> leg)
    : hook_(hook), arm_(std::move(arm)), leg_(std::move(leg)) {
    check();
}

void HookEntry::check() const {
    if (hook_ < 1) throw CellNotHookError("hook entry must be positive");
    for (std::size_t k = 0; k < arm_.size(); ++k) {
        if (arm_[k] < hook_) throw CellNotHookError("arm letter below hook entry");
        if (k && arm_[k] < arm_[k - 1]) throw CellNotHookError("arm not weakly increasing");
    }
    for (std::size_t k = 0; k < leg_.size(); ++k) {
        if (leg_[k] <= hook_) throw CellNotHookError("leg letter not above hook entry");
        if (k && leg_[k] <= leg_[k - 1]) throw CellNotHookError("leg not strictly increasing");
    }
}

int HookEntry::max() const {
    int m = hook_;
    if (!arm_.empty()) m = std::max(m, arm_.back());
    if (!leg_.empty()) m = std::max(m, leg_.back());
    return m;
}

std::vector<int> HookEntry::extended_leg() const {
    std::vector<int> out;
    out.reserve(leg_.size() + 1);
    out.push_back(hook_);
    out.insert(out.end(), leg_.begin(), leg_.end());
    return out;
}

std::vector<int> HookEntry::all_letters() const {
    std::vector<int> out;
    out.reserve(1 + arm_.size() + leg_.size());
    out.push_back(hook_);
    out.insert(out.end(), arm_.begin(), arm_.end());
    out.insert(out.end(), leg_.begin(), leg_.end());
    return out;
}

bool HookEntry::contains(int v) const {
    return v == hook_ || arm_contains(v) || leg_contains(v);
}

bool HookEntry::arm_contains(int v) const {
    return std::binary_search(arm_.begin(), arm_.end(), v);
}

bool HookEntry::leg_contains(int v) const {
    return std::binary_search(leg_.begin(), leg_.end(), v);
}

bool HookEntry::extended_leg_contains(int v) const {
    return v == hook_ || leg_contains(v);
}

void HookEntry::arm_insert(int v) {
    arm_.insert(std::upper_bound(arm_.begin(), arm_.end(), v), v);
}

void HookEntry::arm_erase_one(int v) {
    auto it = std::lower_bound(arm_.begin(), arm_.end(), v);
    if (it == arm_.end() || *it != v) throw CellNotHookError("arm letter to remove not present");
    arm_.erase(it);
}

void HookEntry::leg_insert(int v) {
    auto it = std::lower_bound(leg_.begin(), leg_.end(), v);
    if (it != leg_.end() && *it == v) throw CellNotHookError("duplicate leg letter");
    leg_.insert(it, v);
}

void HookEntry::leg_erase_one(int v) {
    auto it = std::lower_bound(leg_.begin(), leg_.end(), v);
    if (it == leg_.end() || *it != v) throw CellNotHookError("leg letter to remove not present");
    leg_.erase(it);
}

void HookEntry::extended_leg_insert(int v) {
    if (v < hook_) {
        leg_.insert(leg_.begin(), hook_);
        hook_ = v;
    } else if (v == hook_) {
        throw CellNotHookError("duplicate extended-leg letter");
    } else {
        leg_insert(v);
    }
}

void HookEntry::extended_leg_remove(int v) {
    if (v == hook_) {
        if (leg_.empty()) throw CellNotHookError("cannot remove the only extended-leg letter");
        hook_ = leg_.front();
        leg_.erase(leg_.begin());
    } else {
        leg_erase_one(v);
    }
}

void HookEntry::extended_leg_replace(int v, int replacement) {
    if (v == hook_) {
        hook_ = replacement;
        return;
    }
    auto it = std::lower_bound(leg_.begin(), leg_.end(), v);
    if (it == leg_.end() || *it != v) throw CellNotHookError("extended-leg letter to replace not present");
    *it = replacement;
}

void HookEntry::extended_arm_replace_first(int v, int replacement) {
    if (hook_ == v) {
        hook_ = replacement;
        return;
    }
    auto it = std::lower_bound(arm_.begin(), arm_.end(), v);
    if (it == arm_.end() || *it != v) throw CellNotHookError("extended-arm letter to replace not present");
    *it = replacement;
}

}  // namespace hooktab
