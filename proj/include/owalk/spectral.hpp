#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "owalk/graph.hpp"

namespace owalk {

using Complex = std::complex<double>;

inline constexpr double kDefaultGroupingTolerance = 1e-8;

// Spectral decomposition A = sum_r theta_r E_r of a skew-symmetric
// adjacency matrix.
//
// Sign convention: eigenvalues of A are purely imaginary and are stored as
// reals y_r with theta_r = i*y_r. If H = iA has eigenpair (lambda, v) then
// A v = -i*lambda v, so y = -lambda.
//
// eigenvalues() is strictly increasing. idempotents()[r] is the orthogonal
// projector onto the theta_r-eigenspace. Exact zero is used for the kernel
// whenever a cluster lies within the grouping scale of 0.
class SpectralDecomposition {
 public:
  SpectralDecomposition(std::vector<double> eigenvalues,
                        std::vector<Eigen::MatrixXcd> idempotents,
                        std::vector<int> multiplicities,
                        double grouping_tolerance);

  int dimension() const noexcept { return dimension_; }
  std::size_t count() const noexcept { return eigenvalues_.size(); }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  const std::vector<Eigen::MatrixXcd>& idempotents() const noexcept { return idempotents_; }
  const std::vector<int>& multiplicities() const noexcept { return multiplicities_; }
  double grouping_tolerance() const noexcept { return grouping_tolerance_; }

  double eigenvalue(std::size_t r) const { return eigenvalues_[r]; }
  const Eigen::MatrixXcd& idempotent(std::size_t r) const { return idempotents_[r]; }
  Complex theta(std::size_t r) const { return {0.0, eigenvalues_[r]}; }

  // Index s with y_s = -y_r (r itself for the zero eigenvalue), or -1.
  int conjugate_index(std::size_t r) const;

  double spectral_radius() const;

 private:
  int dimension_ = 0;
  std::vector<double> eigenvalues_;
  std::vector<Eigen::MatrixXcd> idempotents_;
  std::vector<int> multiplicities_;
  double grouping_tolerance_ = kDefaultGroupingTolerance;
};

// Throws Error{EigensolverFailure | AmbiguousGrouping}.
SpectralDecomposition decompose(const OrientedGraph& g,
                                double grouping_tolerance = kDefaultGroupingTolerance);

// U(t) = sum_r exp(t*theta_r) E_r = exp(tA). The imaginary part is checked
// and dropped; throws Error{NonRealResult} when it does not vanish.
Eigen::MatrixXd transition_matrix(const SpectralDecomposition& sd, double t);

// Column U(t) e_a, same realness check as transition_matrix.
Eigen::VectorXd evolve_column(const SpectralDecomposition& sd, Vertex a, double t);

// U(t)_{b,a} as computed from the spectral sum (imaginary part retained).
Complex amplitude(const SpectralDecomposition& sd, Vertex a, Vertex b, double t);

// |U(t)_{b,a}|; one iff transfer a -> b is perfect at time t.
double fidelity(const SpectralDecomposition& sd, Vertex a, Vertex b, double t);

// Imaginary parts below this are treated as rounding noise.
inline constexpr double kRealnessTolerance = 1e-8;

}  // namespace owalk
