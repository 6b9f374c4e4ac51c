#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace gaussint {

/// Exponent vector (m_1, ..., m_n) of a monomial x_1^m_1 ... x_n^m_n.
using Exponents = std::vector<int>;

struct Monomial {
  Exponents exponents;
  double coefficient = 0.0;
};

/// Sparse multivariate polynomial with real coefficients.
///
/// Terms are keyed by exponent vector, so the representation is canonical:
/// like terms are merged on construction and exact zeros are dropped. No
/// numerical pruning is performed; a coefficient survives unless its
/// magnitude is below 1e-300.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, double>;

  /// The zero polynomial in `dim` variables.
  explicit Polynomial(int dim);
  Polynomial(int dim, std::span<const Monomial> terms);

  static Polynomial constant(int dim, double value);
  /// The coordinate function x_index (0-based).
  static Polynomial variable(int dim, int index);
  static Polynomial monomial(Exponents exponents, double coefficient = 1.0);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for constants and for the zero polynomial.
  int degree() const;
  /// Coefficient of the given exponent vector (0 if absent).
  double coefficient(const Exponents& exponents) const;

  double operator()(std::span<const double> x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, double s) { return s * p; }
  friend Polynomial operator+(const Polynomial& p, double c);
  friend Polynomial operator+(double c, const Polynomial& p) { return p + c; }
  friend Polynomial operator-(const Polynomial& p, double c) { return p + (-c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void accumulate(const Exponents& exponents, double coefficient);
  void normalize();

  int dim_;
  TermMap terms_;
};

/// Pointwise evaluation; throws DimensionError if x.size() != p.dim().
double evaluate(const Polynomial& p, std::span<const double> x);

/// q(x) = p(x + c).
Polynomial shifted(const Polynomial& p, std::span<const double> c);

/// Partial derivative with respect to x_index.
Polynomial derivative(const Polynomial& p, int index);

/// Integer power p^k, k >= 0.
Polynomial power(const Polynomial& p, int k);

/// Debug rendering, e.g. "1.05*x1 - 0.05*x1^3". Not a parse format.
std::string to_string(const Polynomial& p);

/// An ordered list of polynomials sharing one input dimension; holds the
/// vector-valued process and measurement functions.
class PolyVector {
 public:
  PolyVector(int dim_in, std::vector<Polynomial> components);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return static_cast<int>(components_.size()); }
  const Polynomial& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<Polynomial>& components() const { return components_; }

  std::vector<double> operator()(std::span<const double> x) const;

 private:
  int dim_in_;
  std::vector<Polynomial> components_;
};

}  // namespace gaussint
