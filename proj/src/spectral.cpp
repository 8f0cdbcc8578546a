#include "owalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "owalk/error.hpp"

namespace owalk {

SpectralDecomposition::SpectralDecomposition(std::vector<double> eigenvalues,
                                             std::vector<Eigen::MatrixXcd> idempotents,
                                             std::vector<int> multiplicities,
                                             double grouping_tolerance)
    : dimension_(idempotents.empty() ? 0 : static_cast<int>(idempotents.front().rows())),
      eigenvalues_(std::move(eigenvalues)),
      idempotents_(std::move(idempotents)),
      multiplicities_(std::move(multiplicities)),
      grouping_tolerance_(grouping_tolerance) {}

int SpectralDecomposition::conjugate_index(std::size_t r) const {
  const double target = -eigenvalues_[r];
  const double scale = grouping_tolerance_ * (1.0 + spectral_radius());
  for (std::size_t s = 0; s < eigenvalues_.size(); ++s) {
    if (std::abs(eigenvalues_[s] - target) <= scale) return static_cast<int>(s);
  }
  return -1;
}

double SpectralDecomposition::spectral_radius() const {
  double radius = 0.0;
  for (double y : eigenvalues_) radius = std::max(radius, std::abs(y));
  return radius;
}

SpectralDecomposition decompose(const OrientedGraph& g, double grouping_tolerance) {
  const int n = g.size();
  if (n == 0) return SpectralDecomposition({}, {}, {}, grouping_tolerance);

  const Eigen::MatrixXcd hamiltonian = Complex(0.0, 1.0) * g.adjacency().cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::EigensolverFailure, "Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();

  const double h_norm = hamiltonian.norm();
  for (int k = 0; k < n; ++k) {
    const double residual = (hamiltonian * vectors.col(k) - lambda(k) * vectors.col(k)).norm();
    if (residual > 1e-10 * std::max(h_norm, 1.0)) {
      std::ostringstream msg;
      msg << "eigenpair " << k << " residual " << residual << " exceeds 1e-10*||H||";
      throw Error(ErrorKind::EigensolverFailure, msg.str());
    }
  }

  // y = -lambda; walk lambda from the top to get y increasing.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return -lambda(i) < -lambda(j); });

  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(lambda(k)));
  const double scale = grouping_tolerance * (1.0 + radius);

  std::vector<std::vector<int>> clusters;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const double y = -lambda(order[pos]);
    if (pos > 0) {
      const double gap = y - (-lambda(order[pos - 1]));
      if (gap < scale) {
        clusters.back().push_back(order[pos]);
        continue;
      }
      if (gap < 10.0 * scale) {
        std::ostringstream msg;
        msg << "eigenvalues " << y - gap << " and " << y << " are " << gap
            << " apart, within 10x the grouping scale " << scale;
        throw Error(ErrorKind::AmbiguousGrouping, msg.str());
      }
    }
    clusters.push_back({order[pos]});
  }

  std::vector<double> values;
  std::vector<Eigen::MatrixXcd> projectors;
  std::vector<int> multiplicities;
  for (const auto& cluster : clusters) {
    double mean = 0.0;
    Eigen::MatrixXcd basis(n, static_cast<Eigen::Index>(cluster.size()));
    for (std::size_t j = 0; j < cluster.size(); ++j) {
      mean += -lambda(cluster[j]);
      basis.col(static_cast<Eigen::Index>(j)) = vectors.col(cluster[j]);
    }
    mean /= static_cast<double>(cluster.size());
    if (std::abs(mean) < scale) mean = 0.0;
    values.push_back(mean);
    projectors.push_back(basis * basis.adjoint());
    multiplicities.push_back(static_cast<int>(cluster.size()));
  }
  return SpectralDecomposition(std::move(values), std::move(projectors),
                               std::move(multiplicities), grouping_tolerance);
}

namespace {

Complex phase(double t, double y) { return std::polar(1.0, t * y); }

void check_real(double max_imag) {
  if (max_imag > kRealnessTolerance) {
    std::ostringstream msg;
    msg << "transition matrix has imaginary entry of size " << max_imag;
    throw Error(ErrorKind::NonRealResult, msg.str());
  }
}

}  // namespace

Eigen::MatrixXd transition_matrix(const SpectralDecomposition& sd, double t) {
  const int n = sd.dimension();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t r = 0; r < sd.count(); ++r) {
    sum += phase(t, sd.eigenvalue(r)) * sd.idempotent(r);
  }
  check_real(n == 0 ? 0.0 : sum.imag().cwiseAbs().maxCoeff());
  return sum.real();
}

Eigen::VectorXd evolve_column(const SpectralDecomposition& sd, Vertex a, double t) {
  const int n = sd.dimension();
  Eigen::VectorXcd column = Eigen::VectorXcd::Zero(n);
  for (std::size_t r = 0; r < sd.count(); ++r) {
    column += phase(t, sd.eigenvalue(r)) * sd.idempotent(r).col(a);
  }
  check_real(n == 0 ? 0.0 : column.imag().cwiseAbs().maxCoeff());
  return column.real();
}

Complex amplitude(const SpectralDecomposition& sd, Vertex a, Vertex b, double t) {
  Complex sum = 0.0;
  for (std::size_t r = 0; r < sd.count(); ++r) {
    sum += phase(t, sd.eigenvalue(r)) * sd.idempotent(r)(b, a);
  }
  return sum;
}

double fidelity(const SpectralDecomposition& sd, Vertex a, Vertex b, double t) {
  return std::min(1.0, std::abs(amplitude(sd, a, b, t)));
}

}  // namespace owalk
