#include "hooktab/partition.hpp"

#include <numeric>
#include <sstream>

#include "hooktab/errors.hpp"

namespace hooktab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) {
            throw TableauError("partition parts must be positive");
        }
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
            throw TableauError("partition parts must be weakly decreasing");
        }
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int r) const {
    if (r < 1 || r > length()) return 0;
    return parts_[r - 1];
}

int Partition::column_height(int c) const {
    int h = 0;
    while (h < length() && parts_[h] >= c) ++h;
    return h;
}

bool Partition::has_cell(int r, int c) const {
    return r >= 1 && c >= 1 && c <= row_length(r);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int r = 1; r <= inner.length(); ++r) {
        if (inner.row_length(r) > row_length(r)) return false;
    }
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    for (int c = 1; c <= row_length(1); ++c) cols.push_back(column_height(c));
    return Partition(std::move(cols));
}

std::vector<Partition> Partition::all_of_size(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> Partition::all_up_to_size(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto block = all_of_size(k);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<Partition> Partition::all_containing(const Partition& inner, int max_size) {
    std::vector<Partition> out;
    for (int k = inner.size(); k <= max_size; ++k) {
        for (auto& mu : all_of_size(k)) {
            if (mu.contains(inner)) out.push_back(mu);
        }
    }
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (int k = 0; k < p.length(); ++k) {
        if (k) os << ',';
        os << p.parts()[k];
    }
    os << ')';
    return os.str();
}

}  // namespace hooktab
