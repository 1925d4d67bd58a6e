#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fif/error.hpp"

namespace fif::oracle {

DenseCirculant build_dense(const DiscreteFilter& f) {
  const std::size_t n = f.period();
  if (n > kDenseLimit) throw Error(Errc::SizeGuard, "dense matrix limited to n <= 2048, got " + std::to_string(n));
  const auto w = f.weights();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = w[(j + n - i) % n];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m.row(i).sum() - 1.0) > 1e-12) throw Error(Errc::DegenerateFilter, "dense row sum is not 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw Error(Errc::AsymmetryDetected, "dense matrix is not symmetric");
      if (m(i, j) != m((i + 1) % n, (j + 1) % n)) throw Error(Errc::AsymmetryDetected, "dense matrix is not circulant");
    }
  }
  return DenseCirculant(std::move(m));
}

std::vector<double> dense_power_apply(const DenseCirculant& w, std::span<const double> s, std::size_t iterations) {
  if (s.size() != w.size()) throw Error(Errc::LengthMismatch, "signal and matrix sizes differ");
  const auto n = static_cast<Eigen::Index>(s.size());
  const Eigen::MatrixXd step = Eigen::MatrixXd::Identity(n, n) - w.matrix();
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(s.data(), n);
  for (std::size_t m = 0; m < iterations; ++m) x = step * x;
  return std::vector<double>(x.data(), x.data() + n);
}

std::vector<double> dense_eigenvalues(const DenseCirculant& w) {
  const std::size_t n = w.size();
  if (n > kEigenLimit) throw Error(Errc::SizeGuard, "eigen oracle limited to n <= 512, got " + std::to_string(n));
  std::vector<double> lambdas(n);
  for (std::size_t j = 0; j < n; ++j) {
    long double acc = w(0, 0);
    for (std::size_t k = 1; 2 * k < n; ++k) {
      const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>((j * k) % n) /
                                static_cast<long double>(n);
      acc += 2.0L * w(0, k) * std::cos(angle);
    }
    if (n % 2 == 0) acc += w(0, n / 2) * ((j % 2 == 0) ? 1.0L : -1.0L);
    lambdas[j] = static_cast<double>(acc);
  }
  return lambdas;
}

std::vector<double> dense_eigendecomposition(const DenseCirculant& w) {
  if (w.size() > kEigenLimit) throw Error(Errc::SizeGuard, "eigen oracle limited to n <= 512");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w.matrix(), Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fif::oracle
