#include "eulerops/multi_index.hpp"

#include <cassert>
#include <numeric>

namespace eulerops {

std::uint32_t MultiIndex::total() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

std::uint32_t MultiIndex::total(std::size_t first, std::size_t count) const {
  std::uint32_t sum = 0;
  for (std::size_t i = first; i < first + count; ++i) sum += exps_[i];
  return sum;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& rhs) const {
  assert(size() == rhs.size());
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& rhs) const {
  assert(rhs.divides(*this));
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= rhs.exps_[i];
  return out;
}

MultiIndex MultiIndex::concat(const MultiIndex& rhs) const {
  MultiIndex out(*this);
  out.exps_.insert(out.exps_.end(), rhs.exps_.begin(), rhs.exps_.end());
  return out;
}

MultiIndex MultiIndex::slice(std::size_t first, std::size_t count) const {
  return MultiIndex(std::vector<std::uint32_t>(exps_.begin() + first,
                                               exps_.begin() + first + count));
}

}  // namespace eulerops
