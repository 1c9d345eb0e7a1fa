#include "milnorkit/groebner.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "milnorkit/error.hpp"

namespace milnorkit {

namespace {

// Leading monomials plus their supports, for quick divisibility screening.
struct Divisors {
  std::vector<const Polynomial*> polys;
  std::vector<std::uint32_t> supports;

  void add(const Polynomial* p) {
    polys.push_back(p);
    supports.push_back(p->leading_monomial().support());
  }

  const Polynomial* find(const Monomial& m) const {
    const std::uint32_t s = m.support();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if ((supports[i] & ~s) != 0) continue;
      if (polys[i]->leading_monomial().divides(m)) return polys[i];
    }
    return nullptr;
  }
};

Polynomial reduce_fully(Polynomial p, const Divisors& by) {
  const ContextPtr ctx = p.context();
  const Polynomial one(ctx, Rational(1));
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    if (const Polynomial* g = by.find(lt.monomial)) {
      p = p.minus_scaled(lt.coefficient / g->leading_coefficient(), lt.monomial / g->leading_monomial(), *g);
    } else {
      remainder.push_back(lt);
      p = p.minus_scaled(lt.coefficient, lt.monomial, one);
    }
  }
  return Polynomial::from_terms(ctx, std::move(remainder));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  explicit Engine(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  bool insert(Polynomial h) {
    h = h.monic();
    if (h.is_constant()) {
      unit_ = true;
      return false;
    }
    store_.push_back(std::move(h));
    active_.push_back(false);
    update(store_.size() - 1);
    return true;
  }

  void run(BuchbergerStats* stats) {
    while (!unit_ && !pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        auto c = grevlex(pairs_[k].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::pair(pairs_[k].j, pairs_[k].i) < std::pair(pairs_[best].j, pairs_[best].i))) {
          best = k;
        }
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (stats) ++stats->pairs_considered;
      const Polynomial& a = store_[pr.i];
      const Polynomial& b = store_[pr.j];
      Polynomial s = Polynomial(ctx_)
                         .minus_scaled(Rational(-1), pr.lcm / a.leading_monomial(), a)
                         .minus_scaled(Rational(1), pr.lcm / b.leading_monomial(), b);
      Polynomial h = reduce_fully(std::move(s), divisors());
      if (h.is_zero()) {
        if (stats) ++stats->reductions_to_zero;
        continue;
      }
      insert(std::move(h));
    }
  }

  std::vector<Polynomial> result() const {
    if (unit_) return {Polynomial(ctx_, Rational(1))};
    std::vector<const Polynomial*> minimal;
    for (std::size_t k = 0; k < store_.size(); ++k) {
      if (active_[k]) minimal.push_back(&store_[k]);
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Divisors others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.add(minimal[l]);
      }
      const Polynomial& g = *minimal[k];
      Polynomial head = Polynomial::monomial(ctx_, g.leading_monomial(), g.leading_coefficient());
      Polynomial tail = reduce_fully(g - head, others);
      out.push_back((head + tail).monic());
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& x, const Polynomial& y) {
      return grevlex(x.leading_monomial(), y.leading_monomial()) > 0;
    });
    return out;
  }

  bool unit() const { return unit_; }

  Divisors divisors() const {
    Divisors d;
    for (std::size_t k = 0; k < store_.size(); ++k) {
      if (active_[k]) d.add(&store_[k]);
    }
    return d;
  }

 private:
  const Monomial& lm(std::size_t k) const { return store_[k].leading_monomial(); }

  // Gebauer-Moeller installation of a new element h.
  void update(std::size_t h) {
    std::vector<Pair> c;
    for (std::size_t g = 0; g < store_.size(); ++g) {
      if (active_[g]) c.push_back({g, h, lm(g).lcm(lm(h))});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = lm(p.i).coprime(lm(h));
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (d[l].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      bool drop = lm(h).divides(p.lcm) && !(lm(p.i).lcm(lm(h)) == p.lcm) && !(lm(p.j).lcm(lm(h)) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : d) {
      if (!lm(p.i).coprime(lm(h))) next.push_back(p);
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < store_.size(); ++g) {
      if (active_[g] && lm(h).divides(lm(g))) active_[g] = false;
    }
    active_[h] = true;
  }

  ContextPtr ctx_;
  std::deque<Polynomial> store_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

Divisors divisors_of(const GroebnerBasis& gb) {
  Divisors d;
  for (const auto& g : gb.generators()) d.add(&g);
  return d;
}

}  // namespace

GroebnerBasis::GroebnerBasis(ContextPtr context, std::vector<Polynomial> reduced)
    : context_(std::move(context)), gens_(std::move(reduced)) {}

bool GroebnerBasis::contains(const Polynomial& p) const { return normal_form(p, *this).is_zero(); }

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, BuchbergerStats* stats) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const ContextPtr ctx = generators.front().context();
  std::vector<Polynomial> input;
  for (const auto& g : generators) {
    require_same_arity(ctx, g.context());
    if (!g.is_zero()) input.push_back(g.with_context(ctx));
  }
  if (input.empty()) return GroebnerBasis(ctx, {});
  // deterministic start: ascending leading monomials
  std::stable_sort(input.begin(), input.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  Engine engine(ctx);
  for (auto& g : input) {
    Polynomial h = reduce_fully(g, engine.divisors());
    if (h.is_zero()) continue;
    engine.insert(std::move(h));
    if (engine.unit()) break;
  }
  engine.run(stats);
  return GroebnerBasis(ctx, engine.result());
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (gb.is_zero_ideal()) return p;
  require_same_arity(gb.context(), p.context());
  return reduce_fully(p.with_context(gb.context()), divisors_of(gb));
}

std::vector<std::size_t> independent_variables(const GroebnerBasis& gb) {
  const std::size_t n = gb.context()->arity();
  std::vector<std::size_t> out;
  if (gb.is_unit()) return out;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.generators()) supports.push_back(g.leading_monomial().support());
  for (std::size_t k = n + 1; k-- > 0;) {
    // subsets of size k in lexicographic order of index lists
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (std::size_t i : pick) mask |= 1u << i;
      bool independent = std::none_of(supports.begin(), supports.end(),
                                      [mask](std::uint32_t s) { return (s & ~mask) == 0; });
      if (independent) return pick;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

int ideal_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  return static_cast<int>(independent_variables(gb).size());
}

QuotientAlgebra::QuotientAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {
  int d = ideal_dimension(gb_);
  if (d > 0) {
    throw DomainError("quotient not finite-dimensional (ideal dimension " + std::to_string(d) + ")");
  }
  if (d < 0) return;
  const std::size_t n = gb_.context()->arity();
  Divisors lead = divisors_of(gb_);
  std::set<Monomial, GrevlexGreater> seen{Monomial()};
  std::deque<Monomial> queue{Monomial()};
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (seen.count(next) || lead.find(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  basis_.assign(seen.begin(), seen.end());
  std::stable_sort(basis_.begin(), basis_.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& p) const {
  std::vector<Rational> out(basis_.size());
  if (basis_.empty()) return out;
  Polynomial r = normal_form(p, gb_);
  for (const auto& t : r.terms()) out[index_.at(t.monomial)] = t.coefficient;
  return out;
}

Polynomial QuotientAlgebra::element(const std::vector<Rational>& coords) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size() && i < basis_.size(); ++i) {
    if (coords[i] != 0) terms.push_back({basis_[i], coords[i]});
  }
  return Polynomial::from_terms(gb_.context(), std::move(terms));
}

std::vector<Rational> QuotientAlgebra::multiply(std::size_t i, std::size_t j) const {
  return coordinates(Polynomial::monomial(gb_.context(), basis_.at(i) * basis_.at(j)));
}

std::optional<QuotientAlgebra> try_quotient_algebra(const GroebnerBasis& gb) {
  if (ideal_dimension(gb) > 0) return std::nullopt;
  return QuotientAlgebra(gb);
}

bool supported_at_origin(const QuotientAlgebra& q) {
  const std::size_t d = q.dim();
  if (d == 0) return true;
  const ContextPtr& ctx = q.ideal().context();
  for (std::size_t i = 0; i < ctx->arity(); ++i) {
    if (!q.ideal().contains(Polynomial::monomial(ctx, Monomial::variable(i, static_cast<unsigned>(d))))) {
      return false;
    }
  }
  return true;
}

std::vector<Polynomial> jacobian_ideal(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.arity(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

MilnorNumber milnor_number(const Polynomial& f) {
  std::vector<Polynomial> gens = jacobian_ideal(f);
  GroebnerBasis gb = buchberger(gens);
  MilnorNumber m{MilnorNumber::Kind::finite, 0, ideal_dimension(gb), {}};
  if (m.jacobian_dimension < 0) {
    m.note = "gradient does not vanish: regular point";
    return m;
  }
  std::vector<Rational> origin(f.arity());
  for (const auto& g : gens) {
    if (evaluate(g, origin) != 0) {
      m.note = "gradient does not vanish at the origin: regular point";
      return m;
    }
  }
  if (m.jacobian_dimension > 0) {
    m.kind = MilnorNumber::Kind::infinite;
    m.note = "Jacobian ideal has dimension " + std::to_string(m.jacobian_dimension);
    return m;
  }
  QuotientAlgebra q(gb);
  if (!supported_at_origin(q)) {
    m.kind = MilnorNumber::Kind::unsupported;
    m.note = "unsupported: requires local standard bases (critical points away from the origin)";
    return m;
  }
  m.value = q.dim();
  return m;
}

namespace {

bool sign_definite_even(const Polynomial& p) {
  if (p.is_zero()) return false;
  int s = sign(p.leading_coefficient());
  for (const auto& t : p.terms()) {
    if (sign(t.coefficient) != s) return false;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (t.monomial.exponent(i) % 2) return false;
    }
  }
  return true;
}

Monomial support_monomial(const Monomial& m, std::size_t n) {
  std::vector<unsigned> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = m.exponent(i) ? 1u : 0u;
  return Monomial::from_exponents(e);
}

}  // namespace

RealRefinement real_refinement(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("real_refinement needs at least one generator");
  const ContextPtr ctx = generators.front().context();
  const std::size_t n = ctx->arity();
  Polynomial squares(ctx);
  for (const auto& g : generators) squares += g * g;

  std::vector<Polynomial> current = generators;
  std::vector<Monomial> added;
  GroebnerBasis gb = buchberger(current);
  while (!gb.is_unit()) {
    std::vector<Polynomial> candidates = gb.generators();
    candidates.push_back(squares);
    candidates.push_back(normal_form(squares, gb));
    std::vector<Monomial> fresh;
    bool contradiction = false;
    for (const auto& c : candidates) {
      if (!sign_definite_even(c)) continue;
      if (c.is_constant()) {
        contradiction = true;
        break;
      }
      for (const auto& t : c.terms()) {
        Monomial s = support_monomial(t.monomial, n);
        Polynomial sp = Polynomial::monomial(ctx, s);
        if (s.is_one() || gb.contains(sp)) continue;
        if (std::find(fresh.begin(), fresh.end(), s) == fresh.end()) fresh.push_back(s);
      }
    }
    if (contradiction) {
      gb = GroebnerBasis(ctx, {Polynomial(ctx, Rational(1))});
      break;
    }
    if (fresh.empty()) break;
    for (const auto& s : fresh) {
      added.push_back(s);
      current.push_back(Polynomial::monomial(ctx, s));
    }
    gb = buchberger(current);
  }
  RealRefinement r{gb, ideal_dimension(gb), std::move(added), true, false};
  for (const auto& g : gb.generators()) {
    if (g.degree() > 1) r.linear = false;
  }
  if (gb.is_unit()) r.linear = false;
  r.origin_only = !gb.is_unit() && r.linear && r.dimension == 0;
  return r;
}

}  // namespace milnorkit
