#pragma once

#include <cstdint>
#include <vector>

#include "borderbases/borderbases.hpp"

namespace bbtest {

using namespace borderbases;

inline PointSet<Rational> q_points(std::vector<std::vector<long>> pts) {
  std::vector<std::vector<Rational>> v;
  v.reserve(pts.size());
  for (auto& p : pts) {
    std::vector<Rational> row;
    row.reserve(p.size());
    for (long c : p) row.emplace_back(c);
    v.push_back(std::move(row));
  }
  return PointSet<Rational>(FieldSpec::rationals(), pts.at(0).size(), std::move(v));
}

inline PointSet<Fp> fp_points(std::uint64_t p, std::vector<std::vector<long>> pts) {
  auto spec = FieldSpec::prime_field(p);
  std::vector<std::vector<Fp>> v;
  v.reserve(pts.size());
  for (auto& pt : pts) {
    std::vector<Fp> row;
    row.reserve(pt.size());
    for (long c : pt) row.push_back(Fp::from_signed(c, p));
    v.push_back(std::move(row));
  }
  return PointSet<Fp>(spec, pts.at(0).size(), std::move(v));
}

inline Polynomial<Rational> qpoly(const std::string& text, std::size_t arity) {
  return parse_polynomial<Rational>(text, arity, FieldSpec::rationals());
}

inline Polynomial<Fp> fppoly(const std::string& text, std::size_t arity, std::uint64_t p) {
  return parse_polynomial<Fp>(text, arity, FieldSpec::prime_field(p));
}

inline Term term(const std::string& text, std::size_t arity) { return Term::parse(text, arity); }

inline OrderIdealSet term_set(std::vector<std::string> names, std::size_t arity) {
  std::vector<Term> terms;
  terms.reserve(names.size());
  for (const auto& name : names) terms.push_back(Term::parse(name, arity));
  return OrderIdealSet(arity, std::move(terms));
}

// Distinct random points for property tests; deterministic per seed.
inline PointSet<Rational> random_q_points(std::uint64_t seed, std::size_t s, std::size_t n,
                                          long bound = 5) {
  SplitMix64 rng(seed);
  std::vector<std::vector<Rational>> pts;
  while (pts.size() < s) {
    std::vector<Rational> p;
    for (std::size_t v = 0; v < n; ++v)
      p.emplace_back(static_cast<long>(rng.next() % (2 * bound + 1)) - bound);
    bool dup = false;
    for (auto& q : pts)
      if (q == p) dup = true;
    if (!dup) pts.push_back(std::move(p));
  }
  return PointSet<Rational>(FieldSpec::rationals(), n, std::move(pts));
}

inline PointSet<Fp> random_fp_points(std::uint64_t seed, std::size_t s, std::size_t n, std::uint64_t p) {
  SplitMix64 rng(seed);
  std::vector<std::vector<Fp>> pts;
  while (pts.size() < s) {
    std::vector<Fp> pt;
    for (std::size_t v = 0; v < n; ++v) pt.emplace_back(rng.next() % p, p);
    bool dup = false;
    for (auto& q : pts)
      if (q == pt) dup = true;
    if (!dup) pts.push_back(std::move(pt));
  }
  return PointSet<Fp>(FieldSpec::prime_field(p), n, std::move(pts));
}

inline Term random_term(SplitMix64& rng, std::size_t arity, std::uint32_t max_exp) {
  std::vector<std::uint32_t> exps(arity);
  for (auto& e : exps) e = static_cast<std::uint32_t>(rng.next() % (max_exp + 1));
  return Term(std::move(exps));
}

// Random order ideal grown by closure extensions.
inline OrderIdealSet random_order_ideal(SplitMix64& rng, std::size_t arity, std::size_t size) {
  OrderIdealSet s(arity);
  while (s.size() < size) {
    auto candidates = expand_candidates(s);
    s = s.with(candidates[rng.next() % candidates.size()]);
  }
  return s;
}

inline OrderIdealSet random_quasi_order_ideal(SplitMix64& rng, std::size_t arity, std::size_t size) {
  OrderIdealSet s(arity);
  while (s.size() < size) {
    auto candidates = border(s);
    s = s.with(candidates[rng.next() % candidates.size()]);
  }
  return s;
}

}  // namespace bbtest
