#pragma once

// Exact polynomials over Z in the variables z_ij, x_i, y_j.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace schubert {

class PolyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Variable {
  enum class Kind { Z = 0, X = 1, Y = 2 };
  Kind kind = Kind::Z;
  int i = 0;  // row index for Z, index for X and Y
  int j = 0;  // column index for Z, unused otherwise

  static Variable z(int i, int j) { return {Kind::Z, i, j}; }
  static Variable x(int i) { return {Kind::X, i, 0}; }
  static Variable y(int j) { return {Kind::Y, j, 0}; }

  bool is_z() const { return kind == Kind::Z; }
  /// "x3", "y1", "z23"; z indices of 10 or more are written "z10_2".
  std::string name() const;
  static Variable parse(std::string_view text);

  auto operator<=>(const Variable&) const = default;
};

/// Sorted by variable, exponents positive.
class Monomial {
 public:
  using Entry = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);  // merges and sorts
  static Monomial of(Variable v, int e = 1);

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }
  int degree() const;
  int exponent(const Variable& v) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  /// Replace variable a by b (exponents add if b already occurs).
  Monomial substitute(const Variable& a, const Variable& b) const;

  std::string to_string() const;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Entry> e_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT: integer constants
  explicit Polynomial(const mpz_class& c);
  explicit Polynomial(const Variable& v);
  Polynomial(const Monomial& m, const mpz_class& c);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  bool is_homogeneous() const;
  int degree() const;  // -1 for zero
  mpz_class coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  void add_term(const Monomial& m, const mpz_class& c);

  /// Swap two variables everywhere.
  Polynomial swap_variables(const Variable& a, const Variable& b) const;
  /// Set a variable to an integer value.
  Polynomial evaluate(const Variable& v, long value) const;

  std::string to_string() const;
  static Polynomial parse(std::string_view text);
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

  bool operator==(const Polynomial& o) const = default;

 private:
  Terms t_;
};

/// Exact division; throws PolyError when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// (x_i - y_j)
Polynomial x_minus_y(int i, int j);

/// (f - s_i f) / (x_i - x_{i+1}) with s_i swapping x_i and x_{i+1}.
Polynomial divided_difference(const Polynomial& f, int i);

}  // namespace schubert
