#include "milnorkit/polymap.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

#include "milnorkit/error.hpp"

namespace milnorkit {

PolyMap::PolyMap(ContextPtr context, std::vector<Polynomial> components)
    : context_(std::move(context)), components_(std::move(components)) {
  if (components_.empty()) throw InputError("a map needs at least one component");
  for (auto& c : components_) {
    require_same_arity(context_, c.context());
    c = c.with_context(context_);
  }
}

PolyMap PolyMap::truncation(std::size_t j) const {
  if (j == 0 || j > components_.size()) throw std::out_of_range("truncation index out of range");
  return PolyMap(context_, std::vector<Polynomial>(components_.begin(), components_.begin() + j));
}

PolyMatrix PolyMap::jacobian() const {
  PolyMatrix rows;
  for (const auto& f : components_) rows.push_back(gradient(f));
  return rows;
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  g.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) g.push_back(partial_derivative(f, i));
  return g;
}

PolyMatrix hessian(const Polynomial& f) {
  PolyMatrix h;
  for (const auto& d : gradient(f)) h.push_back(gradient(d));
  return h;
}

namespace {

// Sum over injective row -> column assignments restricted to `columns`;
// dp[mask] holds the signed sum for the first popcount(mask) rows.
Polynomial subset_determinant(const PolyMatrix& m, const std::vector<std::size_t>& columns,
                              const PolyReducer& reduce) {
  const std::size_t k = columns.size();
  const ContextPtr& ctx = m.at(0).at(0).context();
  std::vector<std::optional<Polynomial>> dp(std::size_t{1} << k);
  dp[0] = Polynomial(ctx, Rational(1));
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (!dp[mask] || dp[mask]->is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == k) continue;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (1u << c)) continue;
      const Polynomial& entry = m[row][columns[c]];
      if (entry.is_zero()) continue;
      // inversions: already-used columns to the right of c
      int inversions = std::popcount(mask >> (c + 1));
      Polynomial term = *dp[mask] * entry;
      if (reduce) term = reduce(term);
      if (inversions % 2) term = -term;
      auto& slot = dp[mask | (1u << c)];
      if (slot) {
        *slot += term;
      } else {
        slot = std::move(term);
      }
    }
  }
  auto& full = dp.back();
  return full ? *full : Polynomial(ctx);
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, const PolyReducer& reduce) {
  if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
  }
  std::vector<std::size_t> columns(m.size());
  for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  return subset_determinant(m, columns, reduce);
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  if (m.empty()) throw std::invalid_argument("minors of an empty matrix");
  const std::size_t k = m.size();
  const std::size_t cols = m[0].size();
  std::vector<Polynomial> out;
  if (k > cols) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(subset_determinant(m, pick, {}));
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == cols - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace milnorkit
