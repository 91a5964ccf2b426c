#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

#include "borderbases/enumeration.hpp"
#include "borderbases/order_ideal.hpp"
#include "borderbases/point_set.hpp"
#include "borderbases/polynomial.hpp"

namespace borderbases {

namespace detail {

// Basis element with its evaluations at every point (original point indices),
// updated incrementally: eliminations and border-term division are linear, so
// the evaluations follow along without ever re-evaluating a polynomial.
template <typename K>
struct FgPoly {
  MarkedPolynomial<K> poly;
  std::vector<K> evals;
};

template <typename K>
FgPoly<K> fg_unit(const PointSet<K>& x) {
  return FgPoly<K>{MarkedPolynomial<K>(Term::one(x.arity()), Polynomial<K>(x.arity()), x.one()),
                   std::vector<K>(x.size(), x.one())};
}

// g := g - c * f on the tail representation: full(g) = bt_g - tail_g.
template <typename K>
void eliminate_into(FgPoly<K>& g, const FgPoly<K>& f, const K& c) {
  g.poly.tail = g.poly.tail + Polynomial<K>::monomial(f.poly.border_term, c);
  g.poly.tail = g.poly.tail.add_scaled(f.poly.tail, -c);
  for (std::size_t i = 0; i < g.evals.size(); ++i) g.evals[i] -= c * f.evals[i];
}

// One body of the quasi step, shared by FG-Border and the all-quasi
// enumeration: extend O by the border term of f, eliminate the value at the
// chosen point from every other basis element, and rebuild the border
// extensions of f. `f` must not be in `basis`, and f must be nonzero at the
// chosen point.
//
// The border-extension guard checks membership in O as well as in the marks
// of `basis`; for FG-Border the O test never fires (the border of an order
// ideal has no multiples inside it), so both variants share this code.
template <typename K>
void fg_apply_step(const PointSet<K>& x, std::size_t point_index, const FgPoly<K>& f,
                   std::vector<FgPoly<K>>& basis, OrderIdealSet& oi) {
  const auto pd = x.point(point_index);
  const K& fval = f.evals[point_index];

  oi = oi.with(f.poly.border_term);

  for (auto& g : basis) {
    if (!g.evals[point_index].is_zero()) {
      K c = g.evals[point_index] / fval;
      eliminate_into(g, f, c);
    }
  }

  std::vector<FgPoly<K>> extensions;
  for (std::size_t var = 0; var < x.arity(); ++var) {
    Term mark = f.poly.border_term.times_variable(var);
    if (oi.contains(mark)) continue;
    bool marked_already = false;
    for (const auto& g : basis) {
      if (g.poly.border_term == mark) { marked_already = true; break; }
    }
    if (marked_already) continue;

    // h = (x_var - p) * f: border term x_var * bt_f, tail p*bt_f + (x_var - p)*tail_f
    FgPoly<K> h{MarkedPolynomial<K>(mark,
                                    Polynomial<K>::monomial(f.poly.border_term, pd[var]) +
                                        f.poly.tail.times_linear(var, pd[var]),
                                    f.poly.unit),
                std::vector<K>()};
    h.evals.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      h.evals.push_back((x.point(i)[var] - pd[var]) * f.evals[i]);

    // border-term division against the current basis
    for (const auto& g : basis) {
      if (const K* tc = h.poly.tail.coefficient(g.poly.border_term); tc != nullptr) {
        K c = -*tc;  // coefficient of g's mark in full(h)
        eliminate_into(h, g, c);
      }
    }
    extensions.push_back(std::move(h));
  }
  for (auto& h : extensions) basis.push_back(std::move(h));
}

template <typename K>
std::vector<MarkedPolynomial<K>> strip_evals(std::vector<FgPoly<K>> basis) {
  std::vector<MarkedPolynomial<K>> out;
  out.reserve(basis.size());
  for (auto& g : basis) out.push_back(std::move(g.poly));
  sort_basis(out);
  return out;
}

// Indices of `basis` in canonical border-term order.
template <typename K>
std::vector<std::size_t> basis_order(const std::vector<FgPoly<K>>& basis) {
  std::vector<std::size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&basis](std::size_t a, std::size_t b) {
    return canonical_compare(basis[a].poly.border_term, basis[b].poly.border_term) < 0;
  });
  return idx;
}

}  // namespace detail

// Incremental Farr-Gao pass over the points in their given order. After k
// iterations the intermediate pair is a border pair for the first k points.
template <typename K>
BorderPair<K> fg_border(const PointSet<K>& x) {
  std::vector<detail::FgPoly<K>> basis{detail::fg_unit(x)};
  OrderIdealSet oi(x.arity());

  for (std::size_t k = 0; k < x.size(); ++k) {
    // smallest border-term degree with nonzero value; canonical order on ties
    std::size_t chosen = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].evals[k].is_zero()) continue;
      if (chosen == basis.size()) {
        chosen = i;
        continue;
      }
      const Term& a = basis[i].poly.border_term;
      const Term& b = basis[chosen].poly.border_term;
      if (a.degree() < b.degree() || (a.degree() == b.degree() && canonical_compare(a, b) < 0))
        chosen = i;
    }
    if (chosen == basis.size())
      throw Error("no basis element is nonzero at point " + std::to_string(k + 1) +
                  "; points are not distinct");
    detail::FgPoly<K> f = std::move(basis[chosen]);
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(chosen));
    detail::fg_apply_step(x, k, f, basis, oi);
  }

  return BorderPair<K>{std::move(oi), detail::strip_evals(std::move(basis)), false};
}

// One application of the quasi step without recursion: extends oi by the
// border term of f, eliminates the value at point d, and rebuilds the border
// extensions. f must satisfy f(P_d) != 0 and must not appear in `basis`;
// d is the 0-based index of the point being absorbed.
template <typename K>
std::pair<OrderIdealSet, std::vector<MarkedPolynomial<K>>> quasi_oi_step(
    const PointSet<K>& x, const OrderIdealSet& oi, std::size_t d, const MarkedPolynomial<K>& f,
    const std::vector<MarkedPolynomial<K>>& basis) {
  auto lift = [&x](const MarkedPolynomial<K>& p) {
    detail::FgPoly<K> fp{p, {}};
    fp.evals.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) fp.evals.push_back(p.evaluate(x.point(i)));
    return fp;
  };

  detail::FgPoly<K> fl = lift(f);
  if (fl.evals[d].is_zero()) throw DomainError("quasi step requires f(P_d) != 0");
  std::vector<detail::FgPoly<K>> b;
  b.reserve(basis.size());
  for (const auto& g : basis) b.push_back(lift(g));

  OrderIdealSet extended = oi;
  detail::fg_apply_step(x, d, fl, b, extended);
  return {std::move(extended), detail::strip_evals(std::move(b))};
}

namespace detail {

// Enumeration of all quasi border pairs, level by level over |O|.
//
// The state reached after absorbing a set Y of points with quasi order ideal
// O does not depend on the route: its basis is the unique quasi O-border
// basis of I(Y). Each level is therefore deduplicated by the key
// (point mask, O), which collapses the heavy overlap between branches while
// keeping completeness (the kept copy of a state still branches over all of
// its extensions).
//
// Every level runs in two phases: a cheap sweep lists all branch edges and
// keeps the first edge per target key, then the surviving edges are applied
// (elimination + border extension). A parallel run distributes only the
// apply phase, so it performs the same applications as a sequential run and
// returns bit-identical results and counters.
template <typename K>
class FgEnumerator {
public:
  FgEnumerator(const PointSet<K>& x, bool parallel) : x_(x), parallel_(parallel) {}

  EnumerationResult<K> run() {
    if (x_.size() > 64) throw InputError("quasi enumeration limited to 64 points");
    const std::size_t s = x_.size();

    // Algorithm root: the constant 1 absorbs the first point.
    State root{1ull, OrderIdealSet(x_.arity()), {}};
    ++branch_count_;
    fg_apply_step(x_, 0, fg_unit(x_), root.basis, root.oi);
    if (s == 1) {
      ++raw_count_;
      complete(root.oi, root.basis);
      return finish();
    }

    std::vector<State> level{std::move(root)};
    for (std::size_t depth = 1; depth < s; ++depth) {
      const bool leaf_level = depth + 1 == s;

      // phase 1: list edges, first edge per target state wins
      std::map<StateKey, Edge> chosen;
      for (std::size_t si = 0; si < level.size(); ++si) {
        const State& st = level[si];
        for (std::size_t bi : basis_order(st.basis)) {
          const FgPoly<K>& g = st.basis[bi];
          OrderIdealSet extended = st.oi.with(g.poly.border_term);
          for (std::size_t idx = 0; idx < x_.size(); ++idx) {
            if (st.mask >> idx & 1) continue;
            if (g.evals[idx].is_zero()) continue;
            ++branch_count_;
            if (leaf_level) ++raw_count_;
            StateKey key{leaf_level ? ~std::uint64_t{0} : st.mask | (std::uint64_t{1} << idx),
                         extended};
            chosen.emplace(std::move(key), Edge{si, bi, idx});
          }
        }
      }

      // phase 2: apply the surviving edges
      std::vector<const Edge*> edges;
      edges.reserve(chosen.size());
      for (auto& [key, edge] : chosen) edges.push_back(&edge);
      std::vector<State> produced(edges.size(), State{0, OrderIdealSet(x_.arity()), {}});
      auto apply_range = [&](std::size_t w, std::size_t stride) {
        for (std::size_t i = w; i < edges.size(); i += stride)
          produced[i] = apply(level[edges[i]->state_index], edges[i]->basis_index, edges[i]->point_index);
      };
      if (parallel_ && edges.size() > 1) {
        const std::size_t workers =
            std::min<std::size_t>(std::max(2u, std::thread::hardware_concurrency()), edges.size());
        std::vector<std::future<void>> futures;
        futures.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
          futures.push_back(std::async(std::launch::async, apply_range, w, workers));
        for (auto& f : futures) f.get();
      } else {
        apply_range(0, 1);
      }

      if (leaf_level) {
        for (auto& st : produced) complete(st.oi, st.basis);
        break;
      }
      level = std::move(produced);
    }
    return finish();
  }

private:
  using StateKey = std::pair<std::uint64_t, OrderIdealSet>;

  struct State {
    std::uint64_t mask;
    OrderIdealSet oi;
    std::vector<FgPoly<K>> basis;

    State(std::uint64_t m, OrderIdealSet o, std::vector<FgPoly<K>> b)
        : mask(m), oi(std::move(o)), basis(std::move(b)) {}
  };

  struct Edge {
    std::size_t state_index;
    std::size_t basis_index;
    std::size_t point_index;
  };

  State apply(const State& st, std::size_t bi, std::size_t idx) const {
    std::vector<FgPoly<K>> rest;
    rest.reserve(st.basis.size() - 1);
    for (std::size_t j = 0; j < st.basis.size(); ++j)
      if (j != bi) rest.push_back(st.basis[j]);
    OrderIdealSet oi = st.oi;
    fg_apply_step(x_, idx, st.basis[bi], rest, oi);
    return State{st.mask | (std::uint64_t{1} << idx), std::move(oi), std::move(rest)};
  }

  void complete(const OrderIdealSet& oi, const std::vector<FgPoly<K>>& basis) {
    if (results_.contains(oi)) return;
    std::vector<FgPoly<K>> copy = basis;
    results_.emplace(oi, BorderPair<K>{oi, strip_evals(std::move(copy)), true});
  }

  EnumerationResult<K> finish() {
    EnumerationResult<K> result;
    result.branch_count = branch_count_;
    result.raw_count = raw_count_;
    result.pairs.reserve(results_.size());
    for (auto& [key, pair] : results_) result.pairs.push_back(std::move(pair));
    return result;
  }

  const PointSet<K>& x_;
  bool parallel_;
  std::map<OrderIdealSet, BorderPair<K>> results_;
  std::uint64_t branch_count_ = 0;
  std::uint64_t raw_count_ = 0;
};

}  // namespace detail

// All quasi border pairs of the vanishing ideal of x, by the incremental
// point-by-point recursion branching over every (basis element, point) choice.
template <typename K>
EnumerationResult<K> fg_all_quasi_order_ideals(const PointSet<K>& x, bool parallel = false) {
  return detail::FgEnumerator<K>(x, parallel).run();
}

}  // namespace borderbases
