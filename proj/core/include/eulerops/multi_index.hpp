#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace eulerops {

// Exponent vector. Used both for monomials (exponents of variables) and for
// derivative multi-indices.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t size) : exps_(size, 0) {}
  MultiIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static MultiIndex unit(std::size_t size, std::size_t position) {
    MultiIndex m(size);
    m.exps_.at(position) = 1;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  // |alpha|
  std::uint32_t total() const;
  // Sum of exponents in positions [first, first + count).
  std::uint32_t total(std::size_t first, std::size_t count) const;

  bool is_zero() const { return total() == 0; }

  // Componentwise alpha' <= alpha.
  bool divides(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& rhs) const;
  // Componentwise difference; requires rhs.divides(*this).
  MultiIndex operator-(const MultiIndex& rhs) const;

  MultiIndex concat(const MultiIndex& rhs) const;
  MultiIndex slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

// Canonical term order: higher total degree first, ties broken
// lexicographically with larger exponents on earlier variables first.
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const auto ta = a.total();
    const auto tb = b.total();
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

// Calls f(sub) for every sub with sub <= bound componentwise.
template <typename F>
void for_each_sub_index(const MultiIndex& bound, F&& f) {
  MultiIndex sub(bound.size());
  for (;;) {
    f(static_cast<const MultiIndex&>(sub));
    std::size_t i = 0;
    for (; i < bound.size(); ++i) {
      if (sub[i] < bound[i]) {
        ++sub[i];
        break;
      }
      sub[i] = 0;
    }
    if (i == bound.size()) return;
  }
}

// Calls f(idx) for every multi-index of the given size with total <= max_total.
template <typename F>
void for_each_index_up_to(std::size_t size, std::uint32_t max_total, F&& f) {
  MultiIndex idx(size);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t budget) -> void {
    if (pos == size) {
      f(static_cast<const MultiIndex&>(idx));
      return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
      idx[pos] = e;
      self(self, pos + 1, budget - e);
    }
    idx[pos] = 0;
  };
  rec(rec, 0, max_total);
}

}  // namespace eulerops
