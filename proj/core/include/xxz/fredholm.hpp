#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <vector>

namespace xxz {

// Gauss-Legendre nodes/weights mapped onto [-Q, Q].
struct QuadratureGrid {
  double Q = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  QuadratureGrid() = default;
  QuadratureGrid(int n, double Q);
  int size() const { return static_cast<int>(nodes.size()); }
};

// Nystrom discretization of (I + K) f = rhs on a fixed grid, with the LU
// factorization cached so many right-hand sides can be solved cheaply.
class FredholmSolver {
 public:
  // kernel(x, y) is the full kernel of the integral operator.
  FredholmSolver(QuadratureGrid grid,
                 const std::function<double(double, double)>& kernel);

  const QuadratureGrid& grid() const { return grid_; }

  // Solve (I + K) f = rhs for rhs given on the grid nodes.
  std::vector<double> solve(const std::vector<double>& rhs) const;

  // Natural Nystrom extension: f(x) = rhs(x) - sum_j w_j kernel(x, y_j) f_j.
  double extend(const std::function<double(double, double)>& kernel, double x,
                double rhs_at_x, const std::vector<double>& f) const;

 private:
  QuadratureGrid grid_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

// Quadrature of a grid function against the grid weights.
double grid_integral(const QuadratureGrid& grid, const std::vector<double>& f);

}  // namespace xxz
