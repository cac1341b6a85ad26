#include "folnewt/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace folnewt {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::undetermined: return "undetermined";
  }
  return "?";
}

namespace groebner {

FuelUsage& FuelUsage::operator+=(const FuelUsage& other) {
  spair_reductions += other.spair_reductions;
  max_spair_reductions_single_run = std::max(max_spair_reductions_single_run, other.max_spair_reductions_single_run);
  runs += other.runs;
  exhausted_runs += other.exhausted_runs;
  return *this;
}

namespace {

using Exp = std::uint16_t;

struct FuelExhausted {};

/// Variables ranked for one computation, plus the comparison it induces.
class Ring {
 public:
  Ring(std::vector<std::string> vars, OrderKind kind, std::size_t front)
      : vars_(std::move(vars)), kind_(kind), front_(front) {
    for (std::size_t i = 0; i < vars_.size(); ++i) index_.emplace(vars_[i], i);
  }

  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t index(const std::string& v) const { return index_.at(v); }

  int compare(const Exp* a, const Exp* b) const {
    const std::size_t n = vars_.size();
    switch (kind_) {
      case OrderKind::lex:
        return lex(a, b, 0, n);
      case OrderKind::graded_lex: {
        int d = degree_cmp(a, b, 0, n);
        return d != 0 ? d : lex(a, b, 0, n);
      }
      case OrderKind::graded_reverse_lex:
        return grevlex(a, b, 0, n);
      case OrderKind::block_elimination: {
        int c = grevlex(a, b, 0, front_);
        return c != 0 ? c : grevlex(a, b, front_, n);
      }
    }
    return 0;
  }

 private:
  static int degree_cmp(const Exp* a, const Exp* b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    return da == db ? 0 : (da < db ? -1 : 1);
  }
  static int lex(const Exp* a, const Exp* b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
  static int grevlex(const Exp* a, const Exp* b, std::size_t lo, std::size_t hi) {
    int d = degree_cmp(a, b, lo, hi);
    if (d != 0) return d;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }

  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> index_;
  OrderKind kind_;
  std::size_t front_;
};

/// Terms sorted by decreasing monomial; exponents stored flat.
struct Dense {
  std::vector<Rational> coef;
  std::vector<Exp> exps;

  std::size_t size() const { return coef.size(); }
  bool empty() const { return coef.empty(); }
  const Exp* mono(std::size_t i, std::size_t n) const { return exps.data() + i * n; }
};

Ring make_ring(const std::vector<const Polynomial*>& polys, const std::vector<std::string>& extra,
               const TermOrder& order) {
  LabelSet all;
  for (const auto* p : polys) all = all | p->variables();
  all = all | LabelSet(extra);
  std::vector<std::string> vars;
  std::size_t front = 0;
  if (order.kind == OrderKind::block_elimination) {
    for (const auto& v : order.front) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    front = vars.size();
    for (const auto& v : all) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
  } else {
    vars = all.items();
  }
  return Ring(std::move(vars), order.kind, front);
}

Dense to_dense(const Polynomial& p, const Ring& ring) {
  const std::size_t n = ring.size();
  std::vector<std::pair<std::vector<Exp>, Rational>> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exp> e(n, 0);
    for (const auto& [v, k] : m.factors()) {
      if (k > std::numeric_limits<Exp>::max()) throw std::overflow_error("exponent too large for Groebner ring");
      e[ring.index(v)] = static_cast<Exp>(k);
    }
    terms.emplace_back(std::move(e), c);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ring.compare(a.first.data(), b.first.data()) > 0; });
  Dense d;
  d.coef.reserve(terms.size());
  d.exps.reserve(terms.size() * n);
  for (auto& [e, c] : terms) {
    d.coef.push_back(std::move(c));
    d.exps.insert(d.exps.end(), e.begin(), e.end());
  }
  return d;
}

Polynomial from_dense(const Dense& d, const Ring& ring) {
  const std::size_t n = ring.size();
  Polynomial out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<Monomial::Factor> f;
    const Exp* e = d.mono(i, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (e[k]) f.emplace_back(ring.vars()[k], e[k]);
    }
    out += Polynomial::term(d.coef[i], Monomial(std::move(f)));
  }
  return out;
}

bool divides(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool is_constant(const Dense& d, std::size_t n) {
  if (d.size() != 1) return false;
  const Exp* e = d.mono(0, n);
  return std::all_of(e, e + n, [](Exp x) { return x == 0; });
}

void make_monic(Dense& d) {
  if (d.empty() || d.coef[0] == 1) return;
  Rational inv = 1 / d.coef[0];
  for (auto& c : d.coef) c *= inv;
}

/// p - c * x^shift * g, merging the sorted term lists.
Dense sub_scaled(const Dense& p, const Rational& c, const std::vector<Exp>& shift, const Dense& g,
                 const Ring& ring, std::size_t skip_p = 0, std::size_t skip_g = 0) {
  const std::size_t n = ring.size();
  Dense out;
  out.coef.reserve(p.size() + g.size());
  out.exps.reserve((p.size() + g.size()) * n);
  std::vector<Exp> tmp(n);
  std::size_t i = skip_p, j = skip_g;
  auto shifted = [&](std::size_t jj) {
    const Exp* e = g.mono(jj, n);
    for (std::size_t k = 0; k < n; ++k) tmp[k] = static_cast<Exp>(e[k] + shift[k]);
    return tmp.data();
  };
  while (i < p.size() || j < g.size()) {
    int cmp;
    const Exp* gj = nullptr;
    if (j < g.size()) gj = shifted(j);
    if (i == p.size()) {
      cmp = -1;
    } else if (j == g.size()) {
      cmp = 1;
    } else {
      cmp = ring.compare(p.mono(i, n), gj);
    }
    if (cmp > 0) {
      out.coef.push_back(p.coef[i]);
      out.exps.insert(out.exps.end(), p.mono(i, n), p.mono(i, n) + n);
      ++i;
    } else if (cmp < 0) {
      out.coef.push_back(-c * g.coef[j]);
      out.exps.insert(out.exps.end(), gj, gj + n);
      ++j;
    } else {
      Rational v = p.coef[i] - c * g.coef[j];
      if (v != 0) {
        out.coef.push_back(std::move(v));
        out.exps.insert(out.exps.end(), gj, gj + n);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

/// Full reduction of p modulo basis (leading terms of basis assumed monic or not).
Dense reduce(Dense p, const std::vector<Dense>& basis, const Ring& ring, std::size_t term_cap,
             std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  const std::size_t n = ring.size();
  Dense rem;
  std::vector<Exp> shift(n);
  std::size_t head = 0;
  while (head < p.size()) {
    const Exp* lt = p.mono(head, n);
    std::size_t found = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (divides(basis[k].mono(0, n), lt, n)) {
        found = k;
        break;
      }
    }
    if (found == basis.size()) {
      rem.coef.push_back(p.coef[head]);
      rem.exps.insert(rem.exps.end(), lt, lt + n);
      ++head;
      continue;
    }
    const Dense& g = basis[found];
    const Exp* gl = g.mono(0, n);
    for (std::size_t k = 0; k < n; ++k) shift[k] = static_cast<Exp>(lt[k] - gl[k]);
    Rational c = p.coef[head] / g.coef[0];
    p = sub_scaled(p, c, shift, g, ring, head + 1, 1);
    head = 0;
    if (p.size() + rem.size() > term_cap) throw FuelExhausted{};
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  std::vector<Exp> lcm;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, const Fuel& fuel, bool stop_at_constant)
      : ring_(ring), fuel_(fuel), stop_at_constant_(stop_at_constant) {}

  std::vector<Dense> run(std::vector<Dense> inputs) {
    const std::size_t n = ring_.size();
    for (auto& g : inputs) {
      if (g.empty()) continue;
      make_monic(g);
      if (is_constant(g, n) && stop_at_constant_) return {g};
      add(std::move(g));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = ring_.compare(pairs_[k].lcm.data(), pairs_[best].lcm.data());
        if (c < 0 || (c == 0 && std::tie(pairs_[k].j, pairs_[k].i) < std::tie(pairs_[best].j, pairs_[best].i))) {
          best = k;
        }
      }
      Pair p = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      pending_[p.i][p.j] = pending_[p.j][p.i] = false;
      if (coprime(p) || chain(p)) continue;

      if (++reductions_ > fuel_.max_spair_reductions) throw FuelExhausted{};
      Dense h = reduce(s_poly(p), basis_, ring_, fuel_.max_total_terms);
      if (h.empty()) continue;
      make_monic(h);
      if (is_constant(h, n) && stop_at_constant_) return {h};
      add(std::move(h));
      if (total_terms_ > fuel_.max_total_terms) throw FuelExhausted{};
    }
    return interreduce();
  }

  std::size_t reductions() const { return reductions_; }

 private:
  void add(Dense g) {
    const std::size_t n = ring_.size();
    const std::size_t idx = basis_.size();
    total_terms_ += g.size();
    basis_.push_back(std::move(g));
    for (auto& row : pending_) row.push_back(false);
    pending_.emplace_back(idx + 1, false);
    for (std::size_t k = 0; k < idx; ++k) {
      Pair p{k, idx, std::vector<Exp>(n)};
      const Exp* a = basis_[k].mono(0, n);
      const Exp* b = basis_[idx].mono(0, n);
      for (std::size_t v = 0; v < n; ++v) p.lcm[v] = std::max(a[v], b[v]);
      pending_[k][idx] = pending_[idx][k] = true;
      pairs_.push_back(std::move(p));
    }
  }

  bool coprime(const Pair& p) const {
    const std::size_t n = ring_.size();
    const Exp* a = basis_[p.i].mono(0, n);
    const Exp* b = basis_[p.j].mono(0, n);
    for (std::size_t v = 0; v < n; ++v) {
      if (a[v] && b[v]) return false;
    }
    return true;
  }

  bool chain(const Pair& p) const {
    const std::size_t n = ring_.size();
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (pending_[p.i][k] || pending_[p.j][k]) continue;
      if (divides(basis_[k].mono(0, n), p.lcm.data(), n)) return true;
    }
    return false;
  }

  Dense s_poly(const Pair& p) const {
    const std::size_t n = ring_.size();
    const Dense& f = basis_[p.i];
    const Dense& g = basis_[p.j];
    std::vector<Exp> sf(n), sg(n);
    const Exp* a = f.mono(0, n);
    const Exp* b = g.mono(0, n);
    for (std::size_t v = 0; v < n; ++v) {
      sf[v] = static_cast<Exp>(p.lcm[v] - a[v]);
      sg[v] = static_cast<Exp>(p.lcm[v] - b[v]);
    }
    Dense scaled_f;
    scaled_f.coef = f.coef;
    scaled_f.exps.resize(f.exps.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
      for (std::size_t v = 0; v < n; ++v) scaled_f.exps[t * n + v] = static_cast<Exp>(f.exps[t * n + v] + sf[v]);
    }
    // both are monic, so the leading terms cancel exactly
    return sub_scaled(scaled_f, Rational(1), sg, g, ring_, 1, 1);
  }

  std::vector<Dense> interreduce() const {
    const std::size_t n = ring_.size();
    std::vector<Dense> kept;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      bool redundant = false;
      for (std::size_t m = 0; m < basis_.size() && !redundant; ++m) {
        if (m == k) continue;
        const Exp* lm = basis_[m].mono(0, n);
        const Exp* lk = basis_[k].mono(0, n);
        if (divides(lm, lk, n)) {
          // equal leading monomials: keep the earliest element
          redundant = ring_.compare(lm, lk) != 0 || m < k;
        }
      }
      if (!redundant) kept.push_back(basis_[k]);
    }
    std::vector<Dense> out(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      out[k] = reduce(kept[k], kept, ring_, fuel_.max_total_terms, k);
      make_monic(out[k]);
    }
    std::sort(out.begin(), out.end(),
              [&](const Dense& a, const Dense& b) { return ring_.compare(a.mono(0, n), b.mono(0, n)) > 0; });
    return out;
  }

  const Ring& ring_;
  Fuel fuel_;
  bool stop_at_constant_;
  std::vector<Dense> basis_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<bool>> pending_;
  std::size_t reductions_ = 0;
  std::size_t total_terms_ = 0;
};

std::optional<std::vector<Polynomial>> run_buchberger(const Ideal& ideal, const TermOrder& order, const Fuel& fuel,
                                                      FuelUsage* usage, bool stop_at_constant) {
  std::vector<const Polynomial*> polys;
  for (const auto& g : ideal.generators) polys.push_back(&g);
  Ring ring = make_ring(polys, ideal.variables, order);
  std::vector<Dense> inputs;
  for (const auto& g : ideal.generators) {
    if (!g.is_zero()) inputs.push_back(to_dense(g, ring));
  }
  Buchberger engine(ring, fuel, stop_at_constant);
  std::optional<std::vector<Polynomial>> out;
  try {
    auto basis = engine.run(std::move(inputs));
    out.emplace();
    for (const auto& d : basis) out->push_back(from_dense(d, ring));
  } catch (const FuelExhausted&) {
    out.reset();
  }
  if (usage) {
    usage->spair_reductions += engine.reductions();
    usage->max_spair_reductions_single_run = std::max(usage->max_spair_reductions_single_run, engine.reductions());
    usage->runs += 1;
    if (!out) usage->exhausted_runs += 1;
  }
  return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const TermOrder& order) {
  std::vector<const Polynomial*> polys{&p};
  for (const auto& g : basis) polys.push_back(&g);
  Ring ring = make_ring(polys, {}, order);
  std::vector<Dense> dense;
  for (const auto& g : basis) {
    if (!g.is_zero()) dense.push_back(to_dense(g, ring));
  }
  Dense r = reduce(to_dense(p, ring), dense, ring, std::numeric_limits<std::size_t>::max());
  return from_dense(r, ring);
}

std::optional<std::vector<Polynomial>> buchberger(const Ideal& ideal, const TermOrder& order, const Fuel& fuel,
                                                  FuelUsage* usage) {
  return run_buchberger(ideal, order, fuel, usage, false);
}

Tri contains_one(const Ideal& ideal, const Fuel& fuel, FuelUsage* usage) {
  bool all_zero = true;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    all_zero = false;
    if (g.is_constant()) return Tri::yes;
  }
  if (all_zero) return Tri::no;
  auto basis = run_buchberger(ideal, TermOrder::graded_reverse_lex(), fuel, usage, true);
  if (!basis) return Tri::undetermined;
  for (const auto& g : *basis) {
    if (g.is_constant() && !g.is_zero()) return Tri::yes;
  }
  return Tri::no;
}

std::optional<Ideal> eliminate(const Ideal& ideal, const std::vector<std::string>& front, const Fuel& fuel,
                               FuelUsage* usage) {
  auto basis = run_buchberger(ideal, TermOrder::block(front), fuel, usage, false);
  if (!basis) return std::nullopt;
  const LabelSet eliminated(front);
  Ideal out;
  LabelSet ambient = LabelSet(ideal.variables);
  for (const auto& g : ideal.generators) ambient = ambient | g.variables();
  out.variables = (ambient - eliminated).items();
  for (auto& g : *basis) {
    if ((g.variables() & eliminated).empty()) out.generators.push_back(std::move(g));
  }
  return out;
}

std::string fresh_variable(const Ideal& ideal, const Polynomial& f, std::string_view stem) {
  LabelSet used = LabelSet(ideal.variables) | f.variables();
  for (const auto& g : ideal.generators) used = used | g.variables();
  std::string name(stem);
  for (int k = 1; used.contains(name); ++k) name = std::string(stem) + std::to_string(k);
  return name;
}

std::optional<Ideal> saturate(const Ideal& ideal, const Polynomial& f, const Fuel& fuel, FuelUsage* usage) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  const std::string u = fresh_variable(ideal, f);
  Ideal extended = ideal;
  extended.generators.push_back(Polynomial::variable(u) * f - Polynomial(1));
  auto out = eliminate(extended, {u}, fuel, usage);
  if (out) {
    std::erase(out->variables, u);
  }
  return out;
}

}  // namespace groebner
}  // namespace folnewt
