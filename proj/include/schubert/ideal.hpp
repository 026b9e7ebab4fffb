#pragma once

// Schubert determinantal ideals, Gröbner bases and monomial ideals.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/term_order.hpp"

namespace schubert {

class IdealError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a Gröbner computation exceeds its budget of term operations.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr long kDefaultBudget = 10'000'000;

/// The m x n matrix of variables z_ij with the cells of `zeroed` set to 0.
struct GenericMatrix {
  int m = 0;
  int n = 0;
  Partition zeroed;

  bool is_zero(int i, int j) const { return zeroed.contains({i, j}); }
};

/// Determinant of the submatrix on the given rows and columns (1-based,
/// increasing). Cofactor expansion, memoized over (row set, column set).
Polynomial determinant(const GenericMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols);

/// All nonzero k x k minors of M restricted to rows [1,row_hi] and
/// columns [1,col_hi].
std::vector<Polynomial> minors(const GenericMatrix& M, int k, int row_hi, int col_hi);

/// Lex-leading monomial and sign of a minor without expanding it. Empty when
/// the minor vanishes.
std::optional<std::pair<Monomial, int>> minor_leading_term(const GenericMatrix& M, const std::vector<int>& rows,
                                                           const std::vector<int>& cols, const TermOrder& ord);

struct Ideal {
  int m = 0;  // ambient rows
  int n = 0;  // ambient columns
  std::vector<Polynomial> gens;

  nlohmann::json to_json() const;
  static Ideal from_json(const nlohmann::json& j);
};

Ideal fulton_generators(const PartialPermutation& w);
Ideal cdg_generators(const PartialPermutation& w);

/// z_ij -> z_{i+a,j}; terms that leave the ambient rows vanish.
Ideal shift_down(const Ideal& I, int a);
/// z_ij -> z_{i,j+b}; terms that leave the ambient columns vanish.
Ideal shift_right(const Ideal& I, int b);
Ideal with_ambient(const Ideal& I, int m, int n);

struct GroebnerStats {
  long pairs_considered = 0;
  long pairs_reduced = 0;
  long term_ops = 0;
};

/// Reduced Gröbner basis with primitive integer generators and positive
/// leading coefficients. Throws BudgetExceeded past `budget` term operations.
Ideal groebner(const Ideal& I, const TermOrder& ord, long budget = kDefaultBudget, GroebnerStats* stats = nullptr);

/// Buchberger's criterion on the given generators. With use_criteria the
/// coprime and chain criteria skip pairs; without, every S-polynomial is
/// reduced.
bool is_groebner(const Ideal& I, const TermOrder& ord, bool use_criteria = true, long budget = kDefaultBudget);

/// Same check, keeping the first S-pair (generator indices) whose
/// S-polynomial has a nonzero remainder.
struct GroebnerCheck {
  bool ok = true;
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial remainder;
};
GroebnerCheck check_groebner(const Ideal& I, const TermOrder& ord, bool use_criteria = true,
                             long budget = kDefaultBudget);

class MonomialIdeal;

MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& ord, long budget = kDefaultBudget);
/// Leading monomials of the given generators only.
MonomialIdeal leading_monomials(const Ideal& I, const TermOrder& ord);

/// A prime generated by variables.
struct CoordSubspace {
  std::vector<Variable> vars;  // sorted
  int codim() const { return static_cast<int>(vars.size()); }
  auto operator<=>(const CoordSubspace&) const = default;
  std::string to_string() const;
};

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes the generators.
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& o) const;
  bool is_squarefree() const;

  MonomialIdeal operator+(const MonomialIdeal& o) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;
  MonomialIdeal radical() const;
  /// (A : v)
  MonomialIdeal quotient_by_variable(const Variable& v) const;
  /// A times a monomial.
  MonomialIdeal times(const Monomial& m) const;
  MonomialIdeal shift_down(int a) const;
  MonomialIdeal shift_right(int b) const;

  std::vector<CoordSubspace> minimal_primes() const;
  /// Length of the localization at P. Throws IdealError unless P is a
  /// minimal prime of this ideal.
  long multiplicity_along(const CoordSubspace& P) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static MonomialIdeal from_json(const nlohmann::json& j);

  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Monomial> gens_;  // minimal, sorted
};

/// Sum over the primes of largest codimension of multiplicity times
/// prod (x_i - y_j).
Polynomial equivariant_class(const MonomialIdeal& A);

MonomialIdeal l_ideal(const Diagram& d);
/// Leading monomials of the CDG generators.
MonomialIdeal j_ideal(const PartialPermutation& w, const TermOrder& ord);
/// Leading monomials of the nonzero maximal minors of Z^lambda on [i] x [j].
MonomialIdeal j_lambda(const Partition& lambda, int i, int j, const TermOrder& ord);

}  // namespace schubert
