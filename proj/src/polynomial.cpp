#include "folnewt/polynomial.hpp"

#include <algorithm>

namespace folnewt {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string_view to_string(VarKind kind) {
  switch (kind) {
    case VarKind::divisor: return "divisor";
    case VarKind::free: return "free";
    case VarKind::exceptional: return "exceptional";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return natural_compare(a.first, b.first) < 0; });
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

Monomial Monomial::variable(std::string name, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::degree(std::string_view var) const {
  for (const auto& f : factors_) {
    if (f.first == var) return f.second;
  }
  return 0;
}

LabelSet Monomial::variables() const {
  std::vector<std::string> names;
  names.reserve(factors_.size());
  for (const auto& f : factors_) names.push_back(f.first);
  return LabelSet(std::move(names));
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& f : factors_) {
    while (j < other.factors_.size() && natural_compare(other.factors_[j].first, f.first) < 0) ++j;
    if (j == other.factors_.size() || other.factors_[j].first != f.first) return false;
    if (other.factors_[j].second < f.second) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  std::size_t j = 0;
  for (const auto& f : factors_) {
    std::uint32_t e = f.second;
    while (j < divisor.factors_.size() && natural_compare(divisor.factors_[j].first, f.first) < 0) ++j;
    if (j < divisor.factors_.size() && divisor.factors_[j].first == f.first) {
      if (divisor.factors_[j].second > e) throw std::domain_error("monomial quotient is not exact");
      e -= divisor.factors_[j].second;
    }
    if (e > 0) out.factors_.emplace_back(f.first, e);
  }
  if (!divisor.divides(*this)) throw std::domain_error("monomial quotient is not exact");
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Factor> all = factors_;
  for (const auto& f : other.factors_) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Factor& g) { return g.first == f.first; });
    if (it == all.end()) {
      all.push_back(f);
    } else {
      it->second = std::max(it->second, f.second);
    }
  }
  return Monomial(std::move(all));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Factor> out;
  for (const auto& f : factors_) {
    std::uint32_t e = std::min(f.second, other.degree(f.first));
    if (e > 0) out.emplace_back(f.first, e);
  }
  return Monomial(std::move(out));
}

Monomial Monomial::restricted_to(const LabelSet& vars) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (vars.contains(f.first)) out.factors_.push_back(f);
  }
  return out;
}

Monomial Monomial::without(const LabelSet& vars) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (!vars.contains(f.first)) out.factors_.push_back(f);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size()) {
      out.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size()) {
      out.factors_.push_back(b.factors_[j++]);
    } else {
      int c = natural_compare(a.factors_[i].first, b.factors_[j].first);
      if (c < 0) {
        out.factors_.push_back(a.factors_[i++]);
      } else if (c > 0) {
        out.factors_.push_back(b.factors_[j++]);
      } else {
        out.factors_.emplace_back(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
        ++i;
        ++j;
      }
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += '*';
    out += factors_[i].first;
    if (factors_[i].second != 1) out += '^' + std::to_string(factors_[i].second);
  }
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    int c = natural_compare(fa[i].first, fb[j].first);
    if (c < 0) return 1;  // a has a positive exponent on a higher-ranked variable
    if (c > 0) return -1;
    if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) add_term(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::string name) {
  return term(Rational(1), Monomial::variable(std::move(name)));
}

Polynomial Polynomial::term(const Rational& coefficient, Monomial monomial) {
  Polynomial p;
  p.add_term(monomial, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

LabelSet Polynomial::variables() const {
  std::vector<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) names.push_back(f.first);
  }
  return LabelSet(std::move(names));
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::uint32_t Polynomial::degree(std::string_view var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(var));
  return d;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational value = c;
  value.canonicalize();  // callers may pass an unreduced fraction such as 2/2
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), ma * m, ca);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Rational factor = c;
  factor.canonicalize();
  Polynomial out = *this;
  for (auto& [m, v] : out.terms_) v *= factor;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  Polynomial out;
  for (const auto& [t, c] : terms_) {
    if (!m.divides(t)) throw std::domain_error("polynomial is not divisible by " + m.to_string());
    out.terms_.emplace(t.quotient(m), c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return {};
  Rational inv = 1 / leading_coefficient();
  return scaled(inv);
}

Rational Polynomial::evaluate(const std::map<std::string, Rational, NaturalLess>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [name, e] : m.factors()) {
      auto it = point.find(name);
      if (it == point.end()) throw std::out_of_range("no value bound for variable " + name);
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      p.canonicalize();
      v *= p;
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::evaluate_partial(const std::map<std::string, Rational, NaturalLess>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    std::vector<Monomial::Factor> rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) {
        rest.emplace_back(name, e);
        continue;
      }
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      p.canonicalize();
      v *= p;
    }
    out.add_term(Monomial(std::move(rest)), v);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += mag.get_str() + '*' + m.to_string();
    }
  }
  return out;
}

// ------------------------------------------------------- free functions

Polynomial poly_substitute(const Polynomial& p, const Substitution& subst) {
  std::map<std::pair<std::string, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](const std::string& var, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto s = subst.find(var);
    Polynomial base = s == subst.end() ? Polynomial::variable(var) : s->second;
    return powers.emplace(key, base.pow(e)).first->second;
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t(c);
    for (const auto& [var, e] : m.factors()) t *= power_of(var, e);
    out += t;
  }
  return out;
}

DivisorExpansion divisor_expansion(const Polynomial& p, const LabelSet& divisor_vars) {
  DivisorExpansion out;
  for (const auto& [m, c] : p.terms()) {
    out[m.restricted_to(divisor_vars)] += Polynomial::term(c, m.without(divisor_vars));
  }
  // terms sharing an x-part differ in the remaining part, so no entry cancels
  return out;
}

Polynomial derivative(const Polynomial& p, std::string_view var) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const std::uint32_t d = m.degree(var);
    if (d == 0) continue;
    out += Polynomial::term(c * d, m.quotient(Monomial::variable(std::string(var))));
  }
  return out;
}

Monomial monomial_content(std::span<const Polynomial> ps, const LabelSet& divisor_vars) {
  bool any = false;
  std::vector<std::uint32_t> mins(divisor_vars.size(), 0);
  for (const auto& p : ps) {
    for (const auto& [m, c] : p.terms()) {
      for (std::size_t k = 0; k < divisor_vars.size(); ++k) {
        auto d = m.degree(divisor_vars[k]);
        mins[k] = any ? std::min(mins[k], d) : d;
      }
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("monomial content of an all-zero family");
  std::vector<Monomial::Factor> f;
  for (std::size_t k = 0; k < divisor_vars.size(); ++k) f.emplace_back(divisor_vars[k], mins[k]);
  return Monomial(std::move(f));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  Polynomial q, r = a;
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) throw std::domain_error("inexact polynomial division");
    Polynomial t = Polynomial::term(r.leading_coefficient() / cb, lr.quotient(lb));
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

using UniCoeffs = std::map<std::uint32_t, Polynomial>;

UniCoeffs coefficients_in(const Polynomial& p, const std::string& v) {
  UniCoeffs out;
  const LabelSet just_v{v};
  for (const auto& [m, c] : p.terms()) {
    out[m.degree(v)] += Polynomial::term(c, m.without(just_v));
  }
  return out;
}

Polynomial content_in(const Polynomial& p, const std::string& v) {
  Polynomial g;
  for (const auto& [d, c] : coefficients_in(p, v)) {
    g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, const std::string& v) {
  if (p.is_zero()) return p;
  return exact_divide(p, content_in(p, v));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const std::string& v) {
  const std::uint32_t db = b.degree(v);
  const Polynomial lb = coefficients_in(b, v).rbegin()->second;
  Polynomial r = a;
  while (!r.is_zero() && r.degree(v) >= db) {
    auto rc = coefficients_in(r, v);
    const std::uint32_t dr = rc.rbegin()->first;
    const Polynomial& lr = rc.rbegin()->second;
    r = lb * r - lr * b * Monomial::variable(v, dr - db);
  }
  return r;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  LabelSet vars = a.variables() | b.variables();
  const std::string v = vars[0];
  const bool in_a = a.degree(v) > 0, in_b = b.degree(v) > 0;
  if (!in_a) return poly_gcd(a, content_in(b, v));
  if (!in_b) return poly_gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial pa = exact_divide(a, ca), pb = exact_divide(b, cb);
  const Polynomial c = poly_gcd(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Polynomial g;
  for (;;) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return (c * primitive_part(g, v)).monic();
}

GcdCheck gcd_is_constant(std::span<const Polynomial> ps) {
  Polynomial g;
  bool any = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    any = true;
    g = poly_gcd(g, p);
    if (g.is_constant()) break;
  }
  if (!any) throw std::invalid_argument("gcd of an all-zero family");
  GcdCheck out;
  out.constant = g.is_constant();
  out.gcd = g;
  return out;
}

}  // namespace folnewt
