#include "gaussint/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

constexpr double kZeroThreshold = 1e-300;

void require_same_dim(const Polynomial& a, const Polynomial& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": polynomial dimensions differ (" +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

double int_pow(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim <= 0) throw DimensionError("Polynomial: dimension must be positive");
}

Polynomial::Polynomial(int dim, std::span<const Monomial> terms) : Polynomial(dim) {
  for (const auto& t : terms) accumulate(t.exponents, t.coefficient);
  normalize();
}

Polynomial Polynomial::constant(int dim, double value) {
  Polynomial p(dim);
  p.accumulate(Exponents(static_cast<std::size_t>(dim), 0), value);
  p.normalize();
  return p;
}

Polynomial Polynomial::variable(int dim, int index) {
  if (index < 0 || index >= dim) throw DimensionError("Polynomial::variable: index out of range");
  Exponents e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(index)] = 1;
  Polynomial p(dim);
  p.accumulate(e, 1.0);
  return p;
}

Polynomial Polynomial::monomial(Exponents exponents, double coefficient) {
  Polynomial p(static_cast<int>(exponents.size()));
  p.accumulate(exponents, coefficient);
  p.normalize();
  return p;
}

void Polynomial::accumulate(const Exponents& exponents, double coefficient) {
  if (static_cast<int>(exponents.size()) != dim_) {
    throw DimensionError("Polynomial: exponent vector length " + std::to_string(exponents.size()) +
                         " does not match dimension " + std::to_string(dim_));
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int m) { return m < 0; })) {
    throw DimensionError("Polynomial: negative exponent");
  }
  terms_[exponents] += coefficient;
}

void Polynomial::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kZeroThreshold; });
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

double Polynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::operator()(std::span<const double> x) const { return evaluate(*this, x); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a, b, "add");
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.terms_[e] += c;
  r.normalize();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dim(a, b, "mul");
  Polynomial r(a.dim_);
  Exponents e(static_cast<std::size_t>(a.dim_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.terms_[e] += ca * cb;
    }
  }
  r.normalize();
  return r;
}

Polynomial operator*(double s, const Polynomial& p) {
  Polynomial r = p;
  for (auto& [e, c] : r.terms_) c *= s;
  r.normalize();
  return r;
}

Polynomial operator+(const Polynomial& p, double c) {
  Polynomial r = p;
  r.terms_[Exponents(static_cast<std::size_t>(p.dim_), 0)] += c;
  r.normalize();
  return r;
}

double evaluate(const Polynomial& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.dim()) {
    throw DimensionError("evaluate: point has " + std::to_string(x.size()) +
                         " coordinates, polynomial has dimension " + std::to_string(p.dim()));
  }
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= int_pow(x[i], e[i]);
    sum += term;
  }
  return sum;
}

Polynomial shifted(const Polynomial& p, std::span<const double> c) {
  if (static_cast<int>(c.size()) != p.dim()) {
    throw DimensionError("shifted: offset length does not match polynomial dimension");
  }
  const auto n = c.size();
  std::vector<Monomial> out;
  Exponents j(n);
  for (const auto& [m, coef] : p.terms()) {
    // Expand prod_i (x_i + c_i)^{m_i} over every j <= m.
    std::fill(j.begin(), j.end(), 0);
    while (true) {
      double w = coef;
      for (std::size_t i = 0; i < n && w != 0.0; ++i) {
        w *= binomial(m[i], j[i]) * int_pow(c[i], m[i] - j[i]);
      }
      if (w != 0.0) out.push_back({j, w});
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (j[i] < m[i]) {
          ++j[i];
          break;
        }
        j[i] = 0;
      }
      if (i == n) break;
    }
  }
  return Polynomial(p.dim(), out);
}

Polynomial derivative(const Polynomial& p, int index) {
  if (index < 0 || index >= p.dim()) throw DimensionError("derivative: index out of range");
  const auto k = static_cast<std::size_t>(index);
  std::vector<Monomial> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponents d = e;
    --d[k];
    out.push_back({std::move(d), c * e[k]});
  }
  return Polynomial(p.dim(), out);
}

Polynomial power(const Polynomial& p, int k) {
  if (k < 0) throw DimensionError("power: negative exponent");
  Polynomial r = Polynomial::constant(p.dim(), 1.0);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, double>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) < total_degree(b.first);
  });

  std::ostringstream os;
  os.precision(10);
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool constant_term = total_degree(e) == 0;
    double mag = c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mag = std::abs(c);
    first = false;

    bool wrote = false;
    if (constant_term || mag != 1.0) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

PolyVector::PolyVector(int dim_in, std::vector<Polynomial> components)
    : dim_in_(dim_in), components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.dim() != dim_in_) throw DimensionError("PolyVector: component dimension mismatch");
  }
}

std::vector<double> PolyVector::operator()(std::span<const double> x) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(evaluate(c, x));
  return out;
}

}  // namespace gaussint
