#pragma once

/**
 * @file search.hpp
 * @brief Brute-force enumeration of 2-tensors over F_p and the
 * Yang-Baxter solutions among them.
 */

#include "yang_baxter.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace zinbiel {

/// Visits every tensor over the (prime) field of `a` in lexicographic order of
/// its free coordinates, skipping zero; `visit` returns false to stop.
/// Symmetric mode enumerates only r = σr. Returns the number visited.
inline long enumerate_tensors(const Algebra& a, bool symmetric, long max_candidates, const std::function<bool(const Tensor2&)>& visit) {
  const auto& f = a.field();
  if (f.is_rational()) throw std::invalid_argument("tensor enumeration needs a prime field");
  auto p = static_cast<long>(f.characteristic());
  int n = a.dim();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = symmetric ? i : 0; j < n; ++j) slots.push_back({i, j});
  std::vector<long> digits(slots.size(), 0);
  long visited = 0;
  while (max_candidates < 0 || visited < max_candidates) {
    // odometer increment; stops after wrapping around to zero
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
    Tensor2 r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = f.make(0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      r(i, j) = f.make(digits[s]);
      if (symmetric) r(j, i) = f.make(digits[s]);
    }
    ++visited;
    if (!visit(r)) break;
  }
  return visited;
}

struct ZybeCertificate {
  Tensor2 r;
  bool skew_condition = false;  ///< coboundary condition on the skew part
  bool h_condition = false;     ///< H(x)⟦r,r⟧ = 0 for all x
  std::optional<RClass> classification;
};

struct ZybeSearch {
  std::vector<ZybeCertificate> solutions;
  long examined = 0;
  bool exhausted = false;
};

/// Nonzero solutions of ⟦r,r⟧ = 0, at most `limit` of them.
inline ZybeSearch search_zybe(const Algebra& a, bool symmetric, int limit, long max_candidates = -1) {
  ZybeSearch out;
  bool stopped = false;
  out.examined = enumerate_tensors(a, symmetric, max_candidates, [&](const Tensor2& r) {
    if (!zybe_bracket(a, r).is_zero()) return true;
    auto cb = check_coboundary_bialgebra(a, r);
    ZybeCertificate c{r, cb.report.find(kSkewPartClause)->passed, cb.report.find(kBracketClause)->passed, std::nullopt};
    if (cb.report.passed()) c.classification = classify(RMatrix(a, r));
    out.solutions.push_back(std::move(c));
    if (static_cast<int>(out.solutions.size()) >= limit) {
      stopped = true;
      return false;
    }
    return true;
  });
  long total = 1;
  int free = symmetric ? a.dim() * (a.dim() + 1) / 2 : a.dim() * a.dim();
  for (int i = 0; i < free; ++i) total *= static_cast<long>(a.field().characteristic());
  out.exhausted = !stopped && out.examined == total - 1;
  return out;
}

}  // namespace zinbiel
