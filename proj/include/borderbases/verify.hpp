#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "borderbases/order_ideal.hpp"
#include "borderbases/point_set.hpp"
#include "borderbases/polynomial.hpp"

namespace borderbases {

struct VerificationCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }

  std::string to_string() const {
    std::string out;
    for (const auto& c : checks) {
      out += (c.pass ? "[ok]   " : "[FAIL] ") + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    return out;
  }
};

namespace detail {

// Plain Gaussian elimination rank; shares nothing with ReductionState.
template <typename K>
std::size_t dense_rank(std::vector<std::vector<K>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      K factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Independent re-check of a claimed (quasi) border pair against a point set:
//   (a) |O| = s
//   (b) O is an order ideal (quasi order ideal when the pair says so)
//   (c) basis marks are exactly the border of O, pairwise distinct, with
//       every tail supported inside O
//   (d) every basis element vanishes at every point
//   (e) the s x s evaluation matrix of O is invertible
// Failures are report entries, never exceptions.
template <typename K>
VerificationReport verify_border_pair(const BorderPair<K>& pair, const PointSet<K>& x) {
  VerificationReport report;
  const auto& oi = pair.order_ideal;

  report.checks.push_back({"cardinality", oi.size() == x.size(),
                           "|O| = " + std::to_string(oi.size()) + ", s = " + std::to_string(x.size())});

  if (pair.quasi) {
    report.checks.push_back({"quasi_order_ideal", is_quasi_order_ideal(oi), oi.to_string()});
  } else {
    report.checks.push_back({"order_ideal", is_order_ideal(oi), oi.to_string()});
  }

  {
    std::vector<Term> marks;
    marks.reserve(pair.basis.size());
    bool tails_ok = true;
    for (const auto& g : pair.basis) {
      marks.push_back(g.border_term);
      for (const auto& [t, c] : g.tail)
        if (!oi.contains(t)) tails_ok = false;
    }
    std::sort(marks.begin(), marks.end(), CanonicalLess{});
    bool distinct = std::adjacent_find(marks.begin(), marks.end()) == marks.end();
    bool match = marks == border(oi);
    std::string detail;
    if (!distinct) detail = "duplicate border terms";
    else if (!match) detail = "marks differ from border(O)";
    else if (!tails_ok) detail = "tail support escapes O";
    report.checks.push_back({"border_match", distinct && match && tails_ok, detail});
  }

  {
    bool vanish = true;
    std::string detail;
    for (std::size_t i = 0; i < x.size() && vanish; ++i) {
      for (const auto& g : pair.basis) {
        if (!g.evaluate(x.point(i)).is_zero()) {
          vanish = false;
          detail = g.to_string() + " at point " + std::to_string(i + 1);
          break;
        }
      }
    }
    report.checks.push_back({"vanishing", vanish, detail});
  }

  {
    std::vector<std::vector<K>> m;
    m.reserve(oi.size());
    for (const auto& t : oi) m.push_back(evaluation_vector(x, t));
    bool invertible = oi.size() == x.size() && detail::dense_rank(std::move(m)) == x.size();
    report.checks.push_back({"invertible", invertible, ""});
  }

  return report;
}

}  // namespace borderbases
