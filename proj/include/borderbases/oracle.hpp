#pragma once

#include <cstddef>
#include <vector>

#include "borderbases/order_ideal.hpp"
#include "borderbases/point_set.hpp"
#include "borderbases/verify.hpp"

namespace borderbases {

// Size limits for the brute-force reference; it is exponential by design.
struct OracleBounds {
  std::size_t max_points = 7;
  std::size_t max_arity = 4;
};

namespace detail {

// Every candidate set is generated exactly once, by inserting its elements in
// canonical order: each canonical prefix of an order ideal (or of a set
// connected to 1) is itself one, because divisors have smaller degree and the
// canonical order is degree-compatible. A set of cardinality s stays within
// total degree s-1, so the search region is finite.
template <typename K>
void oracle_extend(const OrderIdealSet& current, const Term* last, std::size_t target, bool quasi,
                   std::vector<OrderIdealSet>& out) {
  if (current.size() == target) {
    out.push_back(current);
    return;
  }
  std::vector<Term> extensions = quasi ? border(current) : expand_candidates(current);
  for (const Term& t : extensions) {
    if (last != nullptr && canonical_compare(t, *last) <= 0) continue;
    oracle_extend<K>(current.with(t), &t, target, quasi, out);
  }
}

template <typename K>
std::vector<OrderIdealSet> oracle_run(const PointSet<K>& x, bool quasi, const OracleBounds& bounds) {
  if (x.size() > bounds.max_points || x.arity() > bounds.max_arity)
    throw OracleTooLarge("oracle limited to s <= " + std::to_string(bounds.max_points) +
                         ", n <= " + std::to_string(bounds.max_arity));
  std::vector<OrderIdealSet> candidates;
  oracle_extend<K>(OrderIdealSet(x.arity()), nullptr, x.size(), quasi, candidates);

  std::vector<OrderIdealSet> out;
  for (const auto& candidate : candidates) {
    std::vector<std::vector<K>> m;
    m.reserve(candidate.size());
    for (const Term& t : candidate) m.push_back(evaluation_vector(x, t));
    if (dense_rank(std::move(m)) == x.size()) out.push_back(candidate);
  }
  return out;  // generation order is already canonical
}

}  // namespace detail

// All order ideals of cardinality s with invertible evaluation matrix,
// found without any shared machinery with the engines.
template <typename K>
std::vector<OrderIdealSet> brute_force_all_order_ideals(const PointSet<K>& x,
                                                        const OracleBounds& bounds = {}) {
  return detail::oracle_run(x, /*quasi=*/false, bounds);
}

// Same for quasi order ideals (sets connected to 1).
template <typename K>
std::vector<OrderIdealSet> brute_force_all_quasi_order_ideals(const PointSet<K>& x,
                                                              const OracleBounds& bounds = {}) {
  return detail::oracle_run(x, /*quasi=*/true, bounds);
}

}  // namespace borderbases
