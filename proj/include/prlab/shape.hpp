#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prlab/element_set.hpp"

namespace prlab {

/// Coordinates of a finite abelian group Z/d_0 + ... + Z/d_{k-1}.
///
/// Elements are encoded as mixed-radix integers with coordinate 0 least
/// significant; the code order is the canonical element order everywhere.
class Shape {
 public:
  Shape() : size_(1) {}
  explicit Shape(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t size() const { return size_; }

  Elem encode(std::span<const std::int64_t> coords) const;
  std::vector<std::int64_t> decode(Elem x) const;
  std::int64_t coord(Elem x, std::size_t i) const {
    return static_cast<std::int64_t>((x / strides_[i]) % static_cast<Elem>(factors_[i]));
  }
  Elem basis(std::size_t i) const { return strides_[i]; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem scale(std::int64_t k, Elem a) const;

  /// Additive order of x.
  std::int64_t order(Elem x) const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<Elem> strides_;
  std::size_t size_ = 1;
};

}  // namespace prlab
