#include "simplexint/lattice.hpp"

#include "simplexint/error.hpp"

namespace simplexint {

Box::Box(std::vector<std::size_t> upper) : upper_(std::move(upper)), stride_(upper_.size()) {
  for (std::size_t j = upper_.size(); j-- > 0;) {
    stride_[j] = size_;
    size_ *= upper_[j] + 1;
  }
}

std::size_t Box::index(std::span<const std::size_t> m) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < upper_.size(); ++j) idx += m[j] * stride_[j];
  return idx;
}

bool Box::contains(std::span<const std::size_t> m) const {
  if (m.size() != upper_.size()) return false;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] > upper_[j]) return false;
  }
  return true;
}

bool Box::next(std::vector<std::size_t>& m) const {
  for (std::size_t j = m.size(); j-- > 0;) {
    if (m[j] < upper_[j]) {
      ++m[j];
      return true;
    }
    m[j] = 0;
  }
  return false;
}

bool next_composition(std::vector<std::size_t>& parts) {
  const std::size_t k = parts.size();
  if (k < 2) return false;
  // Find the rightmost nonzero part before the last one, move one unit
  // right and gather everything after it.
  std::size_t i = k - 1;
  while (i-- > 0) {
    if (parts[i] != 0) break;
  }
  if (i == static_cast<std::size_t>(-1)) return false;
  const std::size_t tail = parts[k - 1];
  parts[k - 1] = 0;
  --parts[i];
  parts[i + 1] = tail + 1;
  return true;
}

}  // namespace simplexint
