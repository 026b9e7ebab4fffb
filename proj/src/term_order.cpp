#include "schubert/term_order.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::RowLex:
      return "row-lex";
    case OrderKind::ColLex:
      return "col-lex";
    case OrderKind::AntiDiagLex:
      return "antidiag";
    case OrderKind::CustomLex:
      return "custom";
  }
  return {};
}

std::string to_string(OrderClass c) {
  switch (c) {
    case OrderClass::Diagonal:
      return "diagonal";
    case OrderClass::Antidiagonal:
      return "antidiagonal";
    case OrderClass::Unverified:
      return "unverified";
  }
  return {};
}

TermOrder::TermOrder(OrderKind kind, std::vector<Cell> ranking)
    : kind_(kind), ranking_(std::move(ranking)) {
  switch (kind_) {
    case OrderKind::RowLex:
    case OrderKind::ColLex:
      class_ = OrderClass::Diagonal;
      break;
    case OrderKind::AntiDiagLex:
      class_ = OrderClass::Antidiagonal;
      break;
    case OrderKind::CustomLex:
      class_ = OrderClass::Unverified;
      for (std::size_t k = 0; k < ranking_.size(); ++k)
        custom_pos_.emplace_back(ranking_[k], static_cast<int>(k));
      std::sort(custom_pos_.begin(), custom_pos_.end());
      for (std::size_t k = 1; k < custom_pos_.size(); ++k)
        if (custom_pos_[k].first == custom_pos_[k - 1].first)
          throw PolyError("custom order lists " + schubert::to_string(custom_pos_[k].first) + " twice");
      break;
  }
}

TermOrder TermOrder::custom(std::vector<Cell> ranking) {
  for (const Cell& c : ranking)
    if (c.row < 1 || c.col < 1) throw PolyError("custom order cell out of range");
  return TermOrder(OrderKind::CustomLex, std::move(ranking));
}

TermOrder TermOrder::parse(std::string_view text) {
  if (text == "row-lex") return row_lex();
  if (text == "col-lex") return col_lex();
  if (text == "antidiag" || text == "antidiag-lex") return antidiag_lex();
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::vector<Cell> ranking;
    std::stringstream ss{std::string(text.substr(prefix.size()))};
    std::string item;
    while (std::getline(ss, item, ',')) {
      const Variable v = Variable::parse(item);
      if (!v.is_z()) throw PolyError("custom order must list z variables");
      ranking.push_back(cell_of(v));
    }
    return custom(std::move(ranking));
  }
  throw PolyError("unknown term order '" + std::string(text) + "'");
}

std::string TermOrder::name() const {
  if (kind_ != OrderKind::CustomLex) return schubert::to_string(kind_);
  std::string s = "custom:";
  for (std::size_t k = 0; k < ranking_.size(); ++k) {
    if (k) s += ',';
    s += Variable::z(ranking_[k].row, ranking_[k].col).name();
  }
  return s;
}

TermOrder TermOrder::with_classification(OrderClass c) const {
  TermOrder t = *this;
  t.class_ = c;
  return t;
}

std::pair<long, long> TermOrder::key(const Cell& c) const {
  switch (kind_) {
    case OrderKind::RowLex:
      return {c.row, c.col};
    case OrderKind::ColLex:
      return {c.col, c.row};
    case OrderKind::AntiDiagLex:
      return {c.row, -c.col};
    case OrderKind::CustomLex: {
      auto it = std::lower_bound(custom_pos_.begin(), custom_pos_.end(), std::pair<Cell, int>{c, -1});
      if (it != custom_pos_.end() && it->first == c) return {-1, it->second};
      // Unlisted cells come after all listed ones, row-major.
      return {static_cast<long>(c.row) * 1'000'000 + c.col, 0};
    }
  }
  return {};
}

bool TermOrder::var_greater(const Cell& a, const Cell& b) const { return key(a) < key(b); }

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
  // Walk both monomials from their largest variable down.
  auto sorted = [&](const Monomial& m) {
    std::vector<std::pair<Cell, int>> v;
    for (const auto& [var, e] : m.entries()) {
      if (!var.is_z()) throw PolyError("term orders compare z monomials only");
      v.emplace_back(cell_of(var), e);
    }
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return var_greater(x.first, y.first); });
    return v;
  };
  const auto va = sorted(a);
  const auto vb = sorted(b);
  for (std::size_t k = 0;; ++k) {
    if (k == va.size()) return false;
    if (k == vb.size()) return true;
    if (va[k].first != vb[k].first) return var_greater(va[k].first, vb[k].first);
    if (va[k].second != vb[k].second) return va[k].second > vb[k].second;
  }
}

std::pair<Monomial, mpz_class> leading_term(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) throw PolyError("leading term of zero");
  for (const auto& [m, c] : f.terms())
    for (const auto& [v, e] : m.entries())
      if (!v.is_z()) throw PolyError("term orders compare z monomials only");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return *best;
}

}  // namespace schubert
