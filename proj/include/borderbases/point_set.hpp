#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "borderbases/errors.hpp"
#include "borderbases/field.hpp"
#include "borderbases/term.hpp"

namespace borderbases {

// An ordered list of s distinct points in K^n. Order matters: the engines'
// pivot choices and the Farr-Gao incremental pass follow it.
template <typename K>
class PointSet {
public:
  using value_type = K;

  PointSet(FieldSpec spec, std::size_t arity, std::vector<std::vector<K>> points)
      : spec_(spec), arity_(arity), points_(std::move(points)) {
    if (arity_ == 0) throw InputError("point set needs at least one variable");
    if (points_.empty()) throw InputError("point set needs at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].size() != arity_)
        throw ArityError("point " + std::to_string(i + 1) + " has arity " +
                         std::to_string(points_[i].size()) + ", expected " + std::to_string(arity_));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        if (points_[i] == points_[j])
          throw InputError("duplicate points at indices " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1));
      }
    }
  }

  const FieldSpec& spec() const { return spec_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return points_.size(); }

  std::span<const K> point(std::size_t i) const { return points_[i]; }
  const std::vector<std::vector<K>>& points() const { return points_; }

  K zero() const { return points_[0][0].zero(); }
  K one() const { return points_[0][0].one(); }

private:
  FieldSpec spec_;
  std::size_t arity_;
  std::vector<std::vector<K>> points_;
};

// (t(P_1), ..., t(P_s)), exact.
template <typename K>
std::vector<K> evaluation_vector(const PointSet<K>& x, const Term& t) {
  if (t.arity() != x.arity()) throw ArityError("term arity does not match point arity");
  std::vector<K> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    K v = x.one();
    auto p = x.point(i);
    for (std::size_t var = 0; var < x.arity(); ++var)
      for (std::uint32_t e = 0; e < t.exponent(var); ++e) v *= p[var];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace borderbases
