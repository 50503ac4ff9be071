#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stanleychar/numeric.hpp"

namespace stanleychar {

/// Families of indeterminates, in canonical variable order.
enum class Family : std::uint8_t { P, Q, R, S, Gamma };

/// A named indeterminate: p_i, q_i (i >= 1), R_j (j >= 2), s or gamma.
struct Indeterminate {
  Family family = Family::P;
  int index = 0;

  auto operator<=>(const Indeterminate&) const = default;
  bool operator==(const Indeterminate&) const = default;

  /// "p1", "q2", "R4", "s", "gamma".
  std::string name() const;
  /// Inverse of name(); throws std::invalid_argument on anything else.
  static Indeterminate parse(std::string_view name);
};

inline Indeterminate var_p(int i) { return {Family::P, i}; }
inline Indeterminate var_q(int i) { return {Family::Q, i}; }
inline Indeterminate var_R(int j) { return {Family::R, j}; }
inline Indeterminate var_s() { return {Family::S, 0}; }
inline Indeterminate var_gamma() { return {Family::Gamma, 0}; }

/// Degree attached to each family. R_j contributes r * j per unit exponent;
/// every other family contributes its flat weight.
struct Weights {
  int p = 1;
  int q = 1;
  int r = 1;
  int s = 1;
  int gamma = 1;

  int of(const Indeterminate& x) const;
};

/// A product of indeterminates with positive exponents, kept sorted by
/// indeterminate. The empty product is the constant monomial 1.
class Monomial {
 public:
  using Factor = std::pair<Indeterminate, int>;

  Monomial() = default;
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);
  Monomial(std::initializer_list<Factor> factors) : Monomial(std::vector<Factor>(factors)) {}

  const std::vector<Factor>& factors() const { return factors_; }
  int exponent(const Indeterminate& x) const;
  int degree() const { return degree_; }
  int weighted_degree(const Weights& w) const;
  /// Weighted degree under the default Weights (R_j has weight j).
  int grade() const { return grade_; }
  bool is_constant() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

  /// "p1^2*q1", "1" for the constant monomial.
  std::string to_string() const;

 private:
  void refresh();

  std::vector<Factor> factors_;
  int degree_ = 0;
  int grade_ = 0;
};

/// Canonical term order: higher grade first, then lower plain degree, then
/// lexicographic with earlier indeterminates (P < Q < R < S < Gamma,
/// ascending index) most significant and higher exponents first.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(const Indeterminate& x, int exponent = 1);
  static Polynomial term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a);

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, int exponent);

/// Exact coefficient of m in f, 0 if absent.
Rational coefficient(const Polynomial& f, const Monomial& m);

/// Terms of f whose weighted degree is exactly d.
Polynomial homogeneous_component(const Polynomial& f, int d, const Weights& weights = {});

/// Largest weighted degree of a term of f; -1 for the zero polynomial.
int weighted_degree(const Polynomial& f, const Weights& weights = {});

/// Simultaneous substitution; unbound indeterminates are kept.
Polynomial substitute(const Polynomial& f, const std::map<Indeterminate, Polynomial>& bindings);

/// Value of f with every indeterminate bound; throws std::invalid_argument if
/// some indeterminate of f is unbound.
Rational evaluate(const Polynomial& f, const std::map<Indeterminate, Rational>& values);

/// Set of indeterminates occurring in f.
std::vector<Indeterminate> indeterminates(const Polynomial& f);

/// Canonical text, e.g. "R6 + 15*R4 + 5*R2^2 + 8*R2" or "-p1^2*q1 + 1/2".
std::string to_text(const Polynomial& f);

/// Parses the grammar produced by to_text (whitespace-insensitive).
Polynomial parse_polynomial(std::string_view text);

}  // namespace stanleychar
