#pragma once

#include <cstddef>
#include <future>
#include <map>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "borderbases/enumeration.hpp"
#include "borderbases/order_ideal.hpp"
#include "borderbases/ordering.hpp"
#include "borderbases/point_set.hpp"
#include "borderbases/polynomial.hpp"
#include "borderbases/reduction_state.hpp"

namespace borderbases {

template <typename K>
struct GroebnerResult {
  std::vector<Polynomial<K>> groebner;  // reduced basis, leading terms ascending
  OrderIdealSet order_ideal;
};

namespace detail {

inline bool all_zero(const auto& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// Candidate selection for the border variant: minimal degree first, then
// fewer distinct variables, then the given ordering. The middle key makes the
// run visit pure powers of one variable before mixed products of the same
// degree; resolving degree ties through a term ordering alone would always
// wedge a mixed product between the pure powers and can miss order ideals
// (such as {1, x, y, x^2, y^2}) that no term ordering produces.
struct SelectionLess {
  const TermOrdering* ord;
  bool operator()(const Term& a, const Term& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.variable_count() != b.variable_count()) return a.variable_count() < b.variable_count();
    return ord->less(a, b);
  }
};

}  // namespace detail

// Classical Buchberger-Moller: the reduced Groebner basis of the vanishing
// ideal of x with respect to ord, plus the complement order ideal.
template <typename K>
GroebnerResult<K> buchberger_moller(const PointSet<K>& x, const TermOrdering& ord) {
  if (ord.arity() != x.arity()) throw ArityError("ordering arity does not match point arity");
  const std::size_t n = x.arity();

  auto ord_less = [&ord](const Term& a, const Term& b) { return ord.less(a, b); };
  std::set<Term, decltype(ord_less)> pending(ord_less);
  pending.insert(Term::one(n));

  ReductionState<K> state(x.size(), x.one());
  OrderIdealSet oi(n);
  std::vector<std::pair<Term, Polynomial<K>>> basis;  // (leading term, polynomial)

  while (!pending.empty()) {
    Term t = *pending.begin();
    pending.erase(pending.begin());

    auto [residual, combination] = state.reduce_and_track(evaluation_vector(x, t));
    if (detail::all_zero(residual)) {
      basis.emplace_back(t, state.separator_combination_polynomial(t, combination));
      for (auto it = pending.begin(); it != pending.end();) {
        if (t.divides(*it)) it = pending.erase(it);
        else ++it;
      }
    } else {
      state = state.append_row(t, std::move(residual), combination);
      oi = oi.with(t);
      for (std::size_t v = 0; v < n; ++v) {
        Term u = t.times_variable(v);
        bool excluded = false;
        for (const auto& [lt, g] : basis) {
          if (lt.divides(u)) { excluded = true; break; }
        }
        for (auto it = pending.begin(); it != pending.end() && !excluded; ++it) {
          if (it->divides(u)) excluded = true;
        }
        if (!excluded) pending.insert(u);
      }
    }
  }

  std::sort(basis.begin(), basis.end(),
            [&ord](const auto& a, const auto& b) { return ord.less(a.first, b.first); });
  GroebnerResult<K> result{{}, std::move(oi)};
  result.groebner.reserve(basis.size());
  for (auto& [t, g] : basis) result.groebner.push_back(std::move(g));
  return result;
}

// Border variant: no pruning, candidates selected by minimal degree. Emits a
// marked polynomial for every term whose evaluation vector reduces to zero;
// those terms are exactly the border of the resulting order ideal.
template <typename K>
BorderPair<K> bm_border(const PointSet<K>& x, const TermOrdering& ord) {
  if (ord.arity() != x.arity()) throw ArityError("ordering arity does not match point arity");
  const std::size_t n = x.arity();

  std::set<Term, detail::SelectionLess> pending(detail::SelectionLess{&ord});
  std::set<Term, CanonicalLess> seen;
  pending.insert(Term::one(n));
  seen.insert(Term::one(n));

  ReductionState<K> state(x.size(), x.one());
  OrderIdealSet oi(n);
  std::vector<MarkedPolynomial<K>> basis;

  while (!pending.empty()) {
    Term t = *pending.begin();
    pending.erase(pending.begin());

    auto [residual, combination] = state.reduce_and_track(evaluation_vector(x, t));
    if (detail::all_zero(residual)) {
      basis.emplace_back(t, state.combination_tail(n, combination), x.one());
    } else {
      state = state.append_row(t, std::move(residual), combination);
      oi = oi.with(t);
      for (std::size_t v = 0; v < n; ++v) {
        Term u = t.times_variable(v);
        if (seen.insert(u).second) pending.insert(u);
      }
    }
  }

  sort_basis(basis);
  return BorderPair<K>{std::move(oi), std::move(basis), false};
}

namespace detail {

// Shared recursion of the two enumeration variants; the only difference is
// the candidate set: border extensions that keep O an order ideal, or the
// whole border (quasi order ideals).
template <typename K>
class BmEnumerator {
public:
  BmEnumerator(const PointSet<K>& x, bool quasi, bool parallel)
      : x_(x), quasi_(quasi), parallel_(parallel) {}

  EnumerationResult<K> run() {
    OrderIdealSet empty(x_.arity());
    ReductionState<K> state(x_.size(), x_.one());
    if (!parallel_) {
      step(empty, state, 0);
    } else {
      std::vector<std::pair<OrderIdealSet, ReductionState<K>>> frontier;
      step_collect(empty, state, 0, frontier);
      const std::size_t workers = std::min<std::size_t>(
          std::max(2u, std::thread::hardware_concurrency()), std::max<std::size_t>(frontier.size(), 1));
      std::vector<std::future<BmEnumerator>> futures;
      futures.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [this, &frontier, w, workers]() {
          BmEnumerator local(x_, quasi_, false);
          for (std::size_t i = w; i < frontier.size(); i += workers)
            local.step(frontier[i].first, frontier[i].second, kSplitDepth);
          return local;
        }));
      }
      for (auto& f : futures) merge(f.get());
    }
    EnumerationResult<K> result;
    result.branch_count = branch_count_;
    result.raw_count = raw_count_;
    result.pairs.reserve(results_.size());
    for (auto& [key, pair] : results_) result.pairs.push_back(std::move(pair));
    return result;
  }

private:
  static constexpr std::size_t kSplitDepth = 2;

  std::vector<Term> candidates(const OrderIdealSet& oi) const {
    return quasi_ ? border(oi) : expand_candidates(oi);
  }

  void step(const OrderIdealSet& oi, const ReductionState<K>& state, std::size_t depth) {
    ++branch_count_;
    if (oi.size() == x_.size()) {
      complete(oi, state);
      return;
    }
    for (const Term& t : candidates(oi)) {
      auto [residual, combination] = state.reduce_and_track(evaluation_vector(x_, t));
      if (!all_zero(residual))
        step(oi.with(t), state.append_row(t, std::move(residual), combination), depth + 1);
    }
  }

  // Same walk, but stop at the split depth and hand the subtree roots out.
  void step_collect(const OrderIdealSet& oi, const ReductionState<K>& state, std::size_t depth,
                    std::vector<std::pair<OrderIdealSet, ReductionState<K>>>& frontier) {
    if (depth == kSplitDepth) {
      frontier.emplace_back(oi, state);
      return;
    }
    ++branch_count_;
    if (oi.size() == x_.size()) {
      complete(oi, state);
      return;
    }
    for (const Term& t : candidates(oi)) {
      auto [residual, combination] = state.reduce_and_track(evaluation_vector(x_, t));
      if (!all_zero(residual))
        step_collect(oi.with(t), state.append_row(t, std::move(residual), combination), depth + 1,
                     frontier);
    }
  }

  void complete(const OrderIdealSet& oi, const ReductionState<K>& state) {
    ++raw_count_;
    if (results_.contains(oi)) return;
    std::vector<MarkedPolynomial<K>> basis;
    for (const Term& b : border(oi)) {
      auto [residual, combination] = state.reduce_and_track(evaluation_vector(x_, b));
      // state has full rank s, so every vector reduces to zero
      basis.emplace_back(b, state.combination_tail(x_.arity(), combination), x_.one());
    }
    results_.emplace(oi, BorderPair<K>{oi, std::move(basis), quasi_});
  }

  void merge(BmEnumerator&& other) {
    branch_count_ += other.branch_count_;
    raw_count_ += other.raw_count_;
    for (auto& [key, pair] : other.results_) results_.emplace(key, std::move(pair));
  }

  const PointSet<K>& x_;
  bool quasi_;
  bool parallel_;
  std::map<OrderIdealSet, BorderPair<K>> results_;
  std::uint64_t branch_count_ = 0;
  std::uint64_t raw_count_ = 0;
};

}  // namespace detail

// All order ideals O for which the vanishing ideal of x has an O-border
// basis, together with those bases.
template <typename K>
EnumerationResult<K> bm_all_order_ideals(const PointSet<K>& x, bool parallel = false) {
  return detail::BmEnumerator<K>(x, /*quasi=*/false, parallel).run();
}

// Same recursion with candidates ranging over the whole border: all quasi
// border pairs.
template <typename K>
EnumerationResult<K> bm_all_quasi_order_ideals(const PointSet<K>& x, bool parallel = false) {
  return detail::BmEnumerator<K>(x, /*quasi=*/true, parallel).run();
}

}  // namespace borderbases
