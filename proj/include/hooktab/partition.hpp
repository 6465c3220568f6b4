#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hooktab {

// Integer partition: a weakly decreasing list of positive parts. The empty
// partition is allowed. Rows and columns are 1-based everywhere; diagrams
// are drawn in French convention (row 1 is the bottom row).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws TableauError if not a partition

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;

    // Length of row r (0 when the row does not exist), 1-based.
    int row_length(int r) const;
    // Height of column c, 1-based.
    int column_height(int c) const;
    bool has_cell(int r, int c) const;

    bool contains(const Partition& inner) const;
    Partition conjugate() const;

    bool empty() const { return parts_.empty(); }

    auto operator<=>(const Partition&) const = default;

    // All partitions of n, then helpers for bounded sweeps.
    static std::vector<Partition> all_of_size(int n);
    static std::vector<Partition> all_up_to_size(int n);
    // Partitions mu with inner <= mu and |mu| <= max_size; optionally
    // requiring equal length or equal first part with inner.
    static std::vector<Partition> all_containing(const Partition& inner, int max_size);

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

}  // namespace hooktab
