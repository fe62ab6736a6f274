#include "xxz/fredholm.hpp"

#include "xxz/quadrature.hpp"

namespace xxz {

QuadratureGrid::QuadratureGrid(int n, double Q_) : Q(Q_) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = Q * x[i];
    weights[i] = Q * w[i];
  }
}

FredholmSolver::FredholmSolver(
    QuadratureGrid grid, const std::function<double(double, double)>& kernel)
    : grid_(std::move(grid)) {
  const int n = grid_.size();
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A(i, j) += grid_.weights[j] * kernel(grid_.nodes[i], grid_.nodes[j]);
  lu_.compute(A);
}

std::vector<double> FredholmSolver::solve(
    const std::vector<double>& rhs) const {
  const int n = grid_.size();
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b(i) = rhs[i];
  Eigen::VectorXd f = lu_.solve(b);
  return std::vector<double>(f.data(), f.data() + n);
}

double FredholmSolver::extend(
    const std::function<double(double, double)>& kernel, double x,
    double rhs_at_x, const std::vector<double>& f) const {
  double acc = rhs_at_x;
  for (int j = 0; j < grid_.size(); ++j)
    acc -= grid_.weights[j] * kernel(x, grid_.nodes[j]) * f[j];
  return acc;
}

double grid_integral(const QuadratureGrid& grid,
                     const std::vector<double>& f) {
  double acc = 0.0;
  for (int j = 0; j < grid.size(); ++j) acc += grid.weights[j] * f[j];
  return acc;
}

}  // namespace xxz
