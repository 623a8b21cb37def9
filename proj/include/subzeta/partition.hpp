#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace subzeta {

/// An integer partition stored as a non-increasing sequence of positive
/// parts. Construction sorts the input, so {1,3} and {3,1} are the same
/// partition; zero or negative parts are rejected.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_.at(i); }

  /// Number of parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Sum of the parts.
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Largest part; 0 for the empty partition.
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  /// Smallest part; 0 for the empty partition.
  int last() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  /// Column lengths of the Young diagram.
  Partition dual() const;

  /// Sum of the first i parts, 0 <= i <= length().
  int sigma(int i) const;

  /// The row holding the j-th cell when the diagram is filled row by row:
  /// the least i with j <= sigma(i). Requires 1 <= j <= size().
  int ind(int j) const;

  /// The partition with its first part removed.
  Partition tail() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Calls `fn` on every partition of n, in reverse lexicographic order
/// starting from (n). For n = 0 the empty partition is visited once.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

/// All partitions of n.
std::vector<Partition> partitions_of(int n);

}  // namespace subzeta
