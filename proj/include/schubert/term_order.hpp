#pragma once

// Lexicographic monomial orders on the z variables.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class OrderKind { RowLex, ColLex, AntiDiagLex, CustomLex };
enum class OrderClass { Diagonal, Antidiagonal, Unverified };

std::string to_string(OrderKind k);
std::string to_string(OrderClass c);

class TermOrder {
 public:
  TermOrder() = default;
  static TermOrder row_lex() { return TermOrder(OrderKind::RowLex, {}); }
  static TermOrder col_lex() { return TermOrder(OrderKind::ColLex, {}); }
  static TermOrder antidiag_lex() { return TermOrder(OrderKind::AntiDiagLex, {}); }
  /// Listed cells first, largest first; unlisted cells follow in row-major order.
  static TermOrder custom(std::vector<Cell> ranking);
  /// "row-lex", "col-lex", "antidiag", or "custom:z11,z23,..."
  static TermOrder parse(std::string_view text);

  OrderKind kind() const { return kind_; }
  OrderClass classification() const { return class_; }
  const std::vector<Cell>& ranking() const { return ranking_; }
  std::string name() const;

  /// True when z_a is larger than z_b.
  bool var_greater(const Cell& a, const Cell& b) const;
  /// Lexicographic comparison of monomials in z variables.
  bool greater(const Monomial& a, const Monomial& b) const;

  /// Copy with the classification replaced, used after an empirical check.
  TermOrder with_classification(OrderClass c) const;

 private:
  TermOrder(OrderKind kind, std::vector<Cell> ranking);
  // Sort key of a cell: smaller key = larger variable.
  std::pair<long, long> key(const Cell& c) const;

  OrderKind kind_ = OrderKind::RowLex;
  OrderClass class_ = OrderClass::Diagonal;
  std::vector<Cell> ranking_;
  std::vector<std::pair<Cell, int>> custom_pos_;  // sorted by cell
};

/// The order-maximal term of f. Throws PolyError on zero or on non-z variables.
std::pair<Monomial, mpz_class> leading_term(const Polynomial& f, const TermOrder& ord);

inline Cell cell_of(const Variable& v) { return {v.i, v.j}; }

}  // namespace schubert
