#include "subzeta/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace subzeta {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::dual() const {
  std::vector<int> cols(static_cast<std::size_t>(first()), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

int Partition::sigma(int i) const {
  if (i < 0 || i > length()) throw std::out_of_range("sigma index outside [0, length]");
  return std::accumulate(parts_.begin(), parts_.begin() + i, 0);
}

int Partition::ind(int j) const {
  if (j < 1 || j > size_) throw std::out_of_range("ind argument outside [1, |lambda|]");
  int acc = 0;
  for (int i = 0; i < length(); ++i) {
    acc += parts_[static_cast<std::size_t>(i)];
    if (j <= acc) return i + 1;
  }
  return length();  // unreachable
}

Partition Partition::tail() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur,
              const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<int> cur;
  generate(n, n, cur, fn);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace subzeta
