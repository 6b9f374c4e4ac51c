#include "gaussint/engines.hpp"

#include <algorithm>
#include <cmath>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& M) { return 0.5 * (M + M.transpose()); }

void check_input(const ModelFunction& f, const Gaussian& g) {
  if (f.dim_in() != g.dim() || g.cov.rows() != g.dim() || g.cov.cols() != g.dim()) {
    throw DimensionError("moment engine: model input and Gaussian dimensions differ");
  }
}

}  // namespace

TransformedMoments GaussianIntegralEngine::transform(const ModelFunction& f, const Gaussian& g) const {
  check_input(f, g);
  const int n = g.dim();
  const int p = f.dim_out();
  const EigenBasis basis = eig_sym(g.cov);
  const PolyVector fp = f.polynomial_about(g.mean);

  TransformedMoments out{Eigen::VectorXd(p), Eigen::MatrixXd(p, p), Eigen::MatrixXd(n, p)};
  std::vector<Polynomial> centered;
  centered.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    out.mean[j] = expect_poly(fp[j], g, basis);
    centered.push_back(fp[j] - out.mean[j]);
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      const auto& ci = centered[static_cast<std::size_t>(i)];
      const auto& cj = centered[static_cast<std::size_t>(j)];
      out.cov(i, j) = out.cov(j, i) = expect_poly(ci * cj, g, basis);
    }
  }
  for (int i = 0; i < n; ++i) {
    const Polynomial xi = Polynomial::variable(n, i) - g.mean[i];
    for (int j = 0; j < p; ++j) {
      out.cross(i, j) = expect_poly(xi * centered[static_cast<std::size_t>(j)], g, basis);
    }
  }
  return out;
}

TransformedMoments LinearizationEngine::transform(const ModelFunction& f, const Gaussian& g) const {
  check_input(f, g);
  const Eigen::MatrixXd J = f.jacobian(g.mean);
  return {f(g.mean), symmetrized(J * g.cov * J.transpose()), g.cov * J.transpose()};
}

TransformedMoments SigmaPointEngine::transform(const ModelFunction& f, const Gaussian& g) const {
  check_input(f, g);
  const int n = g.dim();
  const UnitRule unit = rule(n);
  const Eigen::MatrixXd L = covariance_sqrt(g.cov);

  const Eigen::MatrixXd X = (L * unit.points).colwise() + g.mean;
  Eigen::MatrixXd Y(f.dim_out(), unit.size());
  for (int j = 0; j < unit.size(); ++j) Y.col(j) = f(X.col(j));
  if (!Y.allFinite()) throw NumericalError(std::string(name()) + ": non-finite model output");

  TransformedMoments out;
  out.mean = Y * unit.weights;
  const Eigen::MatrixXd dY = Y.colwise() - out.mean;
  const Eigen::MatrixXd dX = X.colwise() - g.mean;
  const Eigen::MatrixXd dYw = dY * unit.weights.asDiagonal();
  out.cov = symmetrized(dYw * dY.transpose());
  out.cross = dX * dYw.transpose();
  return out;
}

UnitRule UnscentedEngine::rule(int n) const { return unscented_rule(n, kappa_.value_or(3.0 - n)); }

GaussHermiteEngine::GaussHermiteEngine(int points_per_axis)
    : points_(points_per_axis), base_(gauss_hermite_1d(points_per_axis)) {
  if (points_per_axis < 2) throw ConfigError("GaussHermiteEngine: need at least 2 points per axis");
}

UnitRule GaussHermiteEngine::rule(int n) const {
  if (n == 1) return base_;
  return gauss_hermite_rule(n, points_);
}

Eigen::MatrixXd covariance_sqrt(const Eigen::MatrixXd& P) {
  Eigen::LLT<Eigen::MatrixXd> llt(P);
  if (llt.info() == Eigen::Success) return llt.matrixL();

  // Eigen square root S sqrt(D), re-triangularized by QR so that the result
  // is still a lower-triangular factor of P.
  const EigenBasis basis = eig_sym(P);
  const double floor = 1e-14 * std::max(basis.values.maxCoeff(), 1.0);
  const Eigen::VectorXd root = basis.values.cwiseMax(floor).cwiseSqrt();
  const Eigen::MatrixXd A = basis.vectors * root.asDiagonal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A.transpose());
  Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < R.rows(); ++i) {
    if (R(i, i) < 0.0) R.row(i) *= -1.0;
  }
  return R.transpose();
}

std::string_view to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::ekf: return "ekf";
    case EngineKind::ckf: return "ckf";
    case EngineKind::ukf: return "ukf";
    case EngineKind::ghf: return "ghf";
    case EngineKind::gif: return "gif";
  }
  return "?";
}

EngineKind parse_engine_kind(std::string_view name) {
  for (auto k : {EngineKind::ekf, EngineKind::ckf, EngineKind::ukf, EngineKind::ghf, EngineKind::gif}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown filter '" + std::string(name) + "' (expected ekf, ckf, ukf, ghf or gif)");
}

std::vector<EngineKind> parse_engine_list(std::string_view list) {
  std::vector<EngineKind> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto end = comma == std::string_view::npos ? list.size() : comma;
    auto item = list.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto k = parse_engine_kind(item);
      if (std::find(out.begin(), out.end(), k) != out.end()) {
        throw ConfigError("filter '" + std::string(item) + "' listed twice");
      }
      out.push_back(k);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw ConfigError("filter list is empty");
  return out;
}

std::unique_ptr<MomentEngine> make_engine(EngineKind kind, const EngineOptions& options) {
  switch (kind) {
    case EngineKind::ekf: return std::make_unique<LinearizationEngine>();
    case EngineKind::ckf: return std::make_unique<CubatureEngine>();
    case EngineKind::ukf: return std::make_unique<UnscentedEngine>(options.ukf_kappa);
    case EngineKind::ghf: return std::make_unique<GaussHermiteEngine>(options.ghf_points);
    case EngineKind::gif: return std::make_unique<GaussianIntegralEngine>();
  }
  throw ConfigError("unknown engine kind");
}

}  // namespace gaussint
