#include "prlab/shape.hpp"

#include <numeric>

#include "prlab/errors.hpp"
#include "prlab/int_matrix.hpp"

namespace prlab {

namespace {
constexpr std::size_t kMaxCodeSpace = std::size_t{1} << 24;
}

Shape::Shape(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  strides_.resize(factors_.size());
  std::size_t s = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvalidParameter("invariant factor must be >= 2");
    strides_[i] = static_cast<Elem>(s);
    s *= static_cast<std::size_t>(factors_[i]);
    if (s > kMaxCodeSpace) throw BudgetExceeded("abelian group too large to encode");
  }
  size_ = s;
}

Elem Shape::encode(std::span<const std::int64_t> coords) const {
  Elem x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    x += static_cast<Elem>(mod_floor(coords[i], factors_[i])) * strides_[i];
  return x;
}

std::vector<std::int64_t> Shape::decode(Elem x) const {
  std::vector<std::int64_t> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = coord(x, i);
  return c;
}

Elem Shape::add(Elem a, Elem b) const {
  Elem x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<Elem>(factors_[i]);
    Elem v = (a / strides_[i]) % d + (b / strides_[i]) % d;
    if (v >= d) v -= d;
    x += v * strides_[i];
  }
  return x;
}

Elem Shape::neg(Elem a) const {
  Elem x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<Elem>(factors_[i]);
    const Elem v = (a / strides_[i]) % d;
    x += (v == 0 ? 0 : d - v) * strides_[i];
  }
  return x;
}

Elem Shape::scale(std::int64_t k, Elem a) const {
  Elem x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto v = coord(a, i);
    x += static_cast<Elem>(mod_floor(k % factors_[i] * v, factors_[i])) * strides_[i];
  }
  return x;
}

std::int64_t Shape::order(Elem x) const {
  std::int64_t o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto v = coord(x, i);
    if (v == 0) continue;
    o = std::lcm(o, factors_[i] / std::gcd(v, factors_[i]));
  }
  return o;
}

}  // namespace prlab
