#include <algorithm>
#include <cmath>
#include <sstream>

#include "milnorkit/classify.hpp"
#include "milnorkit/groebner.hpp"

namespace milnorkit {

namespace {

// Dense univariate polynomials, coefficient of t^i at index i.
using Univariate = std::vector<Rational>;

void trim(Univariate& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Univariate mul(const Univariate& a, const Univariate& b) {
  if (a.empty() || b.empty()) return {};
  Univariate r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Univariate remainder(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
  }
  return a;
}

Univariate monic(Univariate a) {
  if (a.empty()) return a;
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

Univariate gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Univariate derivative(const Univariate& a) {
  Univariate r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rational(static_cast<long>(i)));
  trim(r);
  return r;
}

Rational eval(const Univariate& a, const Rational& t) {
  Rational r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * t + a[i];
  return r;
}

std::vector<Univariate> sturm_chain(const Univariate& a) {
  std::vector<Univariate> chain{a, derivative(a)};
  while (!chain.back().empty()) {
    Univariate r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int variations(const std::vector<Univariate>& chain, const Rational& t) {
  int v = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign(eval(p, t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Real roots of a squarefree polynomial in (lo, hi].
int roots_between(const std::vector<Univariate>& chain, const Rational& lo, const Rational& hi) {
  return variations(chain, lo) - variations(chain, hi);
}

// Isolates one real root if any; returns an interval of width < 2^-40.
std::optional<std::pair<Rational, Rational>> real_root(const Univariate& g) {
  if (g.size() < 2) return std::nullopt;
  Univariate sf = monic(g);
  Univariate d = gcd(sf, derivative(sf));
  if (d.size() > 1) {
    // exact division by the repeated part
    Univariate q(sf.size() - d.size() + 1), r = sf;
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = r[k + d.size() - 1] / d.back();
      for (std::size_t i = 0; i < d.size(); ++i) r[k + i] -= q[k] * d[i];
    }
    sf = monic(q);
  }
  auto chain = sturm_chain(sf);
  Rational bound = 1;
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) bound += abs(sf[i]);
  Rational lo = -bound, hi = bound;
  if (roots_between(chain, lo, hi) == 0) return std::nullopt;
  const Rational eps = Rational(1, 1L << 40);
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    if (roots_between(chain, lo, mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return std::make_pair(lo, hi);
}

Univariate restrict_to_line(const Polynomial& g, const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = g.arity();
  Univariate out;
  for (const auto& term : g.terms()) {
    Univariate prod{term.coefficient};
    for (std::size_t i = 0; i < n && !prod.empty(); ++i) {
      unsigned e = term.monomial.exponent(i);
      if (e == 0) continue;
      Univariate lin{Rational(a[i]), Rational(b[i])};
      trim(lin);
      for (unsigned k = 0; k < e; ++k) prod = mul(prod, lin);
    }
    if (out.size() < prod.size()) out.resize(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) out[i] += prod[i];
  }
  trim(out);
  return out;
}

std::string point_text(const VariableContext& ctx, const std::vector<int>& x) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < x.size(); ++i) s << (i ? ", " : "") << ctx.name(i);
  s << ") = (";
  for (std::size_t i = 0; i < x.size(); ++i) s << (i ? ", " : "") << x[i];
  s << ")";
  return s.str();
}

std::string line_text(const VariableContext& ctx, const std::vector<int>& a, const std::vector<int>& b) {
  std::ostringstream s;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 && b[i] == 0) continue;
    s << (first ? "" : ", ") << ctx.name(i) << " = ";
    first = false;
    std::string bt = b[i] == 0 ? "" : (b[i] == 1 ? "t" : (b[i] == -1 ? "-t" : std::to_string(b[i]) + "*t"));
    if (a[i] == 0) {
      s << bt;
    } else if (bt.empty()) {
      s << a[i];
    } else {
      s << a[i] << (bt[0] == '-' ? " - " + bt.substr(1) : " + " + bt);
    }
  }
  s << ", all others 0";
  return s.str();
}

bool vanishes_at(const std::vector<Polynomial>& comps, const std::vector<int>& x) {
  std::vector<double> xd(x.begin(), x.end());
  for (const auto& g : comps) {
    if (std::abs(evaluate(g, xd)) > 1e-6) return false;
  }
  std::vector<Rational> xq(x.begin(), x.end());
  for (const auto& g : comps) {
    if (evaluate(g, xq) != 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> grid_zero(const std::vector<Polynomial>& comps, std::size_t n, int range) {
  const std::size_t width = static_cast<std::size_t>(2 * range + 1);
  double total = std::pow(static_cast<double>(width), static_cast<double>(n));
  if (total > 2e6) return std::nullopt;
  std::vector<int> x(n, -range);
  while (true) {
    if (std::any_of(x.begin(), x.end(), [](int v) { return v != 0; }) && vanishes_at(comps, x)) return x;
    std::size_t i = 0;
    while (i < n && x[i] == range) x[i++] = -range;
    if (i == n) return std::nullopt;
    ++x[i];
  }
}

std::vector<std::vector<int>> small_vectors(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<int> v(n);
      v[i] = s;
      out.push_back(v);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (int s : {1, -1}) {
        for (int t : {1, -1}) {
          std::vector<int> v(n);
          v[i] = s;
          v[j] = t;
          out.push_back(v);
        }
      }
    }
  }
  return out;
}

bool parallel(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

}  // namespace

OriginOnly decide_origin_only(const PolyMap& f) {
  OriginOnly r{Status::unknown, "none", "", std::nullopt, 0};
  const auto& comps = f.components();
  const auto& ctx = *f.context();
  const std::size_t n = f.arity();

  GroebnerBasis gb = buchberger(comps);
  r.complex_dimension = ideal_dimension(gb);
  if (!gb.is_zero_ideal() && !gb.is_unit()) {
    bool contains_origin = true;
    std::vector<Rational> zero(n);
    for (const auto& g : comps) contains_origin = contains_origin && evaluate(g, zero) == 0;
    if (!contains_origin) {
      r.status = Status::inapplicable;
      r.evidence = "F(0) != 0";
      return r;
    }
  }

  RealRefinement real = real_refinement(comps);
  if (real.origin_only) {
    r.status = Status::holds;
    r.strength = "certified";
    r.evidence = "sum-of-squares refinement contains every variable";
    return r;
  }
  bool homogeneous = std::all_of(comps.begin(), comps.end(), [](const Polynomial& g) {
    return is_homogeneous(g).kind != Homogeneity::Kind::inhomogeneous;
  });
  if (r.complex_dimension == 0 && homogeneous) {
    r.status = Status::holds;
    r.strength = "certified";
    r.evidence = "homogeneous components with a zero-dimensional complex variety";
    return r;
  }
  if (real.linear && real.dimension > 0) {
    auto free = independent_variables(real.basis);
    std::vector<Rational> pt(n);
    pt[free.front()] = 1;
    for (const auto& g : real.basis.generators()) {
      std::size_t lead = 0;
      while (g.leading_monomial().exponent(lead) == 0) ++lead;
      pt[lead] = -g.coefficient(Monomial::variable(free.front())) / g.leading_coefficient();
    }
    if (std::all_of(comps.begin(), comps.end(), [&](const Polynomial& g) { return evaluate(g, pt) == 0; })) {
      std::ostringstream s;
      s << "(";
      for (std::size_t i = 0; i < n; ++i) s << (i ? ", " : "") << ctx.name(i);
      s << ") = (";
      for (std::size_t i = 0; i < n; ++i) s << (i ? ", " : "") << to_string(pt[i]);
      s << ")";
      r.status = Status::fails;
      r.strength = "certified";
      r.witness = s.str();
      r.evidence = "real zero set is a linear subspace of dimension " + std::to_string(real.dimension);
      return r;
    }
  }
  for (int range : {1, 2}) {
    if (auto x = grid_zero(comps, n, range)) {
      r.status = Status::fails;
      r.strength = "certified";
      r.witness = point_text(ctx, *x);
      r.evidence = "rational grid search";
      return r;
    }
  }
  if (n <= 10) {
    auto vs = small_vectors(n);
    for (const auto& b : vs) {
      if (*std::find_if(b.begin(), b.end(), [](int v) { return v != 0; }) < 0) continue;
      for (const auto& a : vs) {
        if (parallel(a, b)) continue;
        Univariate g;
        for (const auto& c : comps) {
          g = gcd(g, restrict_to_line(c, a, b));
          if (g.size() == 1) break;
        }
        if (g.size() == 1) continue;
        std::string where = line_text(ctx, a, b);
        if (g.empty()) {
          r.status = Status::fails;
          r.strength = "certified";
          r.witness = where + ", any t";
          r.evidence = "rational line search";
          return r;
        }
        if (auto root = real_root(g)) {
          Polynomial gt(VariableContext::make({"t"}));
          for (std::size_t i = 0; i < g.size(); ++i) {
            gt += Polynomial::monomial(gt.context(), Monomial::variable(0, static_cast<unsigned>(i)), g[i]);
          }
          std::ostringstream s;
          s.precision(12);
          s << where << ", where " << to_string(gt) << " = 0, t ~ " << to_double((root->first + root->second) / 2);
          r.status = Status::fails;
          r.strength = "certified";
          r.witness = s.str();
          r.evidence = "rational line search with an exact real root (Sturm)";
          return r;
        }
      }
    }
  }
  if (r.complex_dimension == 0) {
    r.status = Status::holds;
    r.strength = "evidence";
    r.evidence = "complex variety zero-dimensional; no nonzero real zero found by grid and line search";
  } else {
    r.evidence = "complex variety of dimension " + std::to_string(r.complex_dimension) +
                 "; no nonzero real zero found by grid and line search";
  }
  return r;
}

}  // namespace milnorkit
