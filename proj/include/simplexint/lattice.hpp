#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace simplexint {

// The integer box 0 <= m <= upper, flattened in mixed radix with the first
// coordinate varying slowest. Linear order is lexicographic, so m - 1_j
// always precedes m.
class Box {
 public:
  explicit Box(std::vector<std::size_t> upper);

  std::size_t dims() const { return upper_.size(); }
  std::size_t size() const { return size_; }
  std::span<const std::size_t> upper() const { return upper_; }

  std::size_t index(std::span<const std::size_t> m) const;
  // Linear offset of moving one step along coordinate j.
  std::size_t stride(std::size_t j) const { return stride_[j]; }
  bool contains(std::span<const std::size_t> m) const;

  // Advances m to its lexicographic successor; false once past the end.
  bool next(std::vector<std::size_t>& m) const;

 private:
  std::vector<std::size_t> upper_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

// Advances `parts` through every composition of sum(parts) into parts.size()
// nonnegative parts, in reverse-lexicographic order starting from
// (total, 0, ..., 0). Returns false after the last one (0, ..., 0, total).
bool next_composition(std::vector<std::size_t>& parts);

}  // namespace simplexint
