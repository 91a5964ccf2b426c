#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "borderbases/errors.hpp"
#include "borderbases/polynomial.hpp"
#include "borderbases/term.hpp"

namespace borderbases {

// Incrementally row-reduced matrix of evaluation vectors, with separator
// polynomials tracking each row's provenance: evaluating separators[k] at the
// point set reproduces rows[k] exactly.
//
// States are persistent: append_row returns a new state sharing all previous
// rows, so branching searches can extend one parent from many branches.
template <typename K>
class ReductionState {
public:
  ReductionState(std::size_t width, K unit) : width_(width), one_(std::move(unit)) {}

  std::size_t width() const { return width_; }
  std::size_t row_count() const { return count_; }
  bool full_rank() const { return count_ == width_; }

  // Eliminate v against the rows in insertion order. Returns the residual
  // (zero at every pivot column) and the combination coefficients c_k with
  // v = residual + sum c_k * rows[k].
  std::pair<std::vector<K>, std::vector<K>> reduce_and_track(std::vector<K> v) const {
    if (v.size() != width_) throw DimensionError("vector length " + std::to_string(v.size()) +
                                                 ", expected " + std::to_string(width_));
    std::vector<const Node*> nodes = chain();
    std::vector<K> combination;
    combination.reserve(nodes.size());
    for (const Node* node : nodes) {
      K c = v[node->pivot] / node->row[node->pivot];
      if (!c.is_zero()) {
        for (std::size_t i = 0; i < width_; ++i) v[i] -= c * node->row[i];
      }
      combination.push_back(std::move(c));
    }
    return {std::move(v), std::move(combination)};
  }

  // New state with one more row; the residual must be nonzero and already
  // reduced against this state. The new separator is t - sum c_k * sep_k.
  ReductionState append_row(const Term& t, std::vector<K> residual, const std::vector<K>& combination) const {
    if (residual.size() != width_) throw DimensionError("residual length mismatch");
    std::size_t pivot = 0;
    while (pivot < width_ && residual[pivot].is_zero()) ++pivot;
    if (pivot == width_) throw ZeroRowError("appending a zero residual for " + t.to_string());
    auto node = std::make_shared<Node>(Node{t, std::move(residual), pivot,
                                            separator_combination_polynomial(t, combination), head_});
    ReductionState next(*this);
    next.head_ = std::move(node);
    ++next.count_;
    return next;
  }

  // t - sum combination[k] * separators[k]; when the residual of t's
  // evaluation vector was zero, this polynomial vanishes on the whole point set.
  Polynomial<K> separator_combination_polynomial(const Term& t, const std::vector<K>& combination) const {
    return Polynomial<K>::monomial(t, one_) - combination_tail(t.arity(), combination);
  }

  // Tail-only variant: sum combination[k] * separators[k].
  Polynomial<K> combination_tail(std::size_t arity, const std::vector<K>& combination) const {
    if (combination.size() != count_) throw DimensionError("combination length mismatch");
    Polynomial<K> result(arity);
    std::vector<const Node*> nodes = chain();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (!combination[k].is_zero())
        result = result.add_scaled(nodes[k]->separator, combination[k]);
    }
    return result;
  }

  std::vector<Term> basis_terms() const {
    std::vector<Term> out;
    out.reserve(count_);
    for (const Node* node : chain()) out.push_back(node->term);
    return out;
  }

  std::vector<std::vector<K>> rows() const {
    std::vector<std::vector<K>> out;
    out.reserve(count_);
    for (const Node* node : chain()) out.push_back(node->row);
    return out;
  }

  std::vector<Polynomial<K>> separators() const {
    std::vector<Polynomial<K>> out;
    out.reserve(count_);
    for (const Node* node : chain()) out.push_back(node->separator);
    return out;
  }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    for (const Node* node : chain()) out.push_back(node->pivot);
    return out;
  }

private:
  struct Node {
    Term term;
    std::vector<K> row;
    std::size_t pivot;
    Polynomial<K> separator;
    std::shared_ptr<const Node> parent;
  };

  // Rows in insertion order (root first).
  std::vector<const Node*> chain() const {
    std::vector<const Node*> nodes(count_);
    const Node* cur = head_.get();
    for (std::size_t i = count_; i-- > 0;) {
      nodes[i] = cur;
      cur = cur->parent.get();
    }
    return nodes;
  }

  std::size_t width_;
  K one_;
  std::size_t count_ = 0;
  std::shared_ptr<const Node> head_;
};

}  // namespace borderbases
