#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace schubert {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v <= 0)
    throw PolyError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

// Lex order in which smaller variables (z11, then x1, x2, ...) are larger.
bool lex_greater(const Monomial& a, const Monomial& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (std::size_t k = 0;; ++k) {
    if (k == ea.size()) return false;
    if (k == eb.size()) return true;
    if (ea[k].first != eb[k].first) return ea[k].first < eb[k].first;
    if (ea[k].second != eb[k].second) return ea[k].second > eb[k].second;
  }
}

}  // namespace

std::string Variable::name() const {
  switch (kind) {
    case Kind::X:
      return "x" + std::to_string(i);
    case Kind::Y:
      return "y" + std::to_string(i);
    case Kind::Z:
      if (i >= 10 || j >= 10) return "z" + std::to_string(i) + "_" + std::to_string(j);
      return "z" + std::to_string(i) + std::to_string(j);
  }
  return {};
}

Variable Variable::parse(std::string_view text) {
  if (text.size() < 2) throw PolyError("bad variable '" + std::string(text) + "'");
  const std::string_view rest = text.substr(1);
  switch (text[0]) {
    case 'x':
      return x(parse_int(rest, "variable index"));
    case 'y':
      return y(parse_int(rest, "variable index"));
    case 'z': {
      const auto us = rest.find('_');
      if (us != std::string_view::npos)
        return z(parse_int(rest.substr(0, us), "row"), parse_int(rest.substr(us + 1), "column"));
      if (rest.size() != 2) throw PolyError("ambiguous z variable '" + std::string(text) + "'");
      return z(parse_int(rest.substr(0, 1), "row"), parse_int(rest.substr(1), "column"));
    }
    default:
      throw PolyError("bad variable '" + std::string(text) + "'");
  }
}

// ---- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [v, e] : entries) {
    if (e < 0) throw PolyError("negative exponent");
    if (e == 0) continue;
    if (!e_.empty() && e_.back().first == v)
      e_.back().second += e;
    else
      e_.emplace_back(v, e);
  }
}

Monomial Monomial::of(Variable v, int e) { return Monomial({{v, e}}); }

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : e_) d += e;
  return d;
}

int Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), v,
                             [](const Entry& a, const Variable& b) { return a.first < b; });
  return it != e_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      r.e_.push_back(*a++);
    } else if (a == e_.end() || b->first < a->first) {
      r.e_.push_back(*b++);
    } else {
      r.e_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  auto b = o.e_.begin();
  for (const auto& [v, e] : e_) {
    while (b != o.e_.end() && b->first < v) ++b;
    if (b == o.e_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  auto a = e_.begin();
  for (const auto& [v, e] : o.e_) {
    while (a != e_.end() && a->first < v) ++a;
    const int d = (a != e_.end() && a->first == v) ? e - a->second : e;
    if (d < 0) throw PolyError("monomial does not divide");
    if (d > 0) r.e_.emplace_back(v, d);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      r.e_.push_back(*a++);
    } else if (a == e_.end() || b->first < a->first) {
      r.e_.push_back(*b++);
    } else {
      r.e_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  auto b = o.e_.begin();
  for (const auto& [v, e] : e_) {
    while (b != o.e_.end() && b->first < v) ++b;
    if (b != o.e_.end() && b->first == v) return false;
  }
  return true;
}

Monomial Monomial::substitute(const Variable& a, const Variable& b) const {
  std::vector<Entry> out = e_;
  for (auto& [v, e] : out)
    if (v == a) v = b;
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  if (e_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : e_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(long c) : Polynomial(mpz_class(c)) {}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

Polynomial::Polynomial(const Variable& v) { t_.emplace(Monomial::of(v), 1); }

Polynomial::Polynomial(const Monomial& m, const mpz_class& c) {
  if (c != 0) t_.emplace(m, c);
}

bool Polynomial::is_homogeneous() const {
  if (t_.empty()) return true;
  const int d = t_.begin()->first.degree();
  return std::all_of(t_.begin(), t_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree());
  return d;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  return r += o;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  return r -= o;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Polynomial Polynomial::swap_variables(const Variable& a, const Variable& b) const {
  // Route a through a placeholder so a and b do not merge.
  const Variable tmp{Variable::Kind::Y, 0, -1};
  Polynomial r;
  for (const auto& [m, c] : t_)
    r.add_term(m.substitute(a, tmp).substitute(b, a).substitute(tmp, b), c);
  return r;
}

Polynomial Polynomial::evaluate(const Variable& v, long value) const {
  Polynomial r;
  for (const auto& [m, c] : t_) {
    const int e = m.exponent(v);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), mpz_class(value).get_mpz_t(), static_cast<unsigned long>(e));
    std::vector<Monomial::Entry> rest;
    for (const auto& entry : m.entries())
      if (entry.first != v) rest.push_back(entry);
    r.add_term(Monomial(std::move(rest)), c * f);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  // Highest degree first, then lex.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : t_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    const int da = a->first.degree();
    const int db = b->first.degree();
    return da != db ? da > db : lex_greater(a->first, b->first);
  });
  for (const auto* t : order) {
    const mpz_class& c = t->second;
    const mpz_class a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (t->first.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += t->first.to_string();
    }
  }
  return s;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw PolyError("empty polynomial");

  Polynomial r;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw PolyError("expected + or - in polynomial");
    }
    std::size_t end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    const std::string term = compact.substr(pos, end - pos);
    if (term.empty()) throw PolyError("empty term in polynomial");
    pos = end;

    mpz_class coeff = sign;
    std::vector<Monomial::Entry> entries;
    std::stringstream ss(term);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      if (factor.empty()) throw PolyError("empty factor in '" + term + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        mpz_class c;
        if (c.set_str(factor, 10) != 0) throw PolyError("bad coefficient '" + factor + "'");
        coeff *= c;
        continue;
      }
      const auto caret = factor.find('^');
      int e = 1;
      if (caret != std::string::npos) e = parse_int(std::string_view(factor).substr(caret + 1), "exponent");
      entries.emplace_back(Variable::parse(factor.substr(0, caret)), e);
    }
    r.add_term(Monomial(std::move(entries)), coeff);
  }
  return r;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : t_) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& [v, e] : m.entries()) exps.push_back({v.name(), e});
    nlohmann::json coeff;
    if (c.fits_slong_p())
      coeff = c.get_si();
    else
      coeff = c.get_str();
    out.push_back({{"coeff", coeff}, {"exps", exps}});
  }
  return out;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PolyError("polynomial JSON must be an array");
  Polynomial r;
  for (const auto& term : j) {
    mpz_class c;
    const auto& cj = term.at("coeff");
    if (cj.is_string()) {
      if (c.set_str(cj.get<std::string>(), 10) != 0) throw PolyError("bad coefficient in JSON");
    } else {
      c = cj.get<long>();
    }
    std::vector<Monomial::Entry> entries;
    for (const auto& ve : term.at("exps"))
      entries.emplace_back(Variable::parse(ve.at(0).get<std::string>()), ve.at(1).get<int>());
    r.add_term(Monomial(std::move(entries)), c);
  }
  return r;
}

// Long division in lex_greater order; every step strictly lowers the
// leading monomial of the remainder.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PolyError("division by zero");
  auto leading = [&](const Polynomial& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (lex_greater(it->first, best->first)) best = it;
    return *best;
  };
  const auto [lg, lc] = leading(g);
  Polynomial rem = f;
  Polynomial q;
  while (!rem.is_zero()) {
    const auto [lm, c] = leading(rem);
    if (!lg.divides(lm) || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()))
      throw PolyError("inexact division");
    const Polynomial t(lg.quotient_of(lm), c / lc);
    q += t;
    rem -= t * g;
  }
  return q;
}

Polynomial x_minus_y(int i, int j) { return Polynomial(Variable::x(i)) - Polynomial(Variable::y(j)); }

Polynomial divided_difference(const Polynomial& f, int i) {
  const Variable a = Variable::x(i);
  const Variable b = Variable::x(i + 1);
  const Polynomial num = f - f.swap_variables(a, b);

  // Group the numerator by the cofactor of x_i^p x_{i+1}^q and by p+q, then
  // divide each binary form by (x_i - x_{i+1}) synthetically.
  std::map<std::pair<Monomial, int>, std::map<int, mpz_class>> forms;
  for (const auto& [m, c] : num.terms()) {
    const int p = m.exponent(a);
    const int q = m.exponent(b);
    std::vector<Monomial::Entry> rest;
    for (const auto& e : m.entries())
      if (e.first != a && e.first != b) rest.push_back(e);
    forms[{Monomial(std::move(rest)), p + q}][p] += c;
  }
  Polynomial out;
  for (const auto& [key, coeffs] : forms) {
    const auto& [rest, d] = key;
    mpz_class carry = 0;  // quotient coefficient of x_i^(p-1) x_{i+1}^(d-p)
    for (int p = d; p >= 1; --p) {
      auto it = coeffs.find(p);
      carry += it == coeffs.end() ? mpz_class(0) : it->second;
      if (carry != 0)
        out.add_term(rest * Monomial({{a, p - 1}, {b, d - p}}), carry);
    }
    auto it0 = coeffs.find(0);
    if ((it0 == coeffs.end() ? mpz_class(0) : it0->second) + carry != 0)
      throw PolyError("inexact division in divided difference");
  }
  return out;
}

}  // namespace schubert
