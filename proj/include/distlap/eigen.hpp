#pragma once

#include <vector>

#include "distlap/graph.hpp"

namespace distlap {

enum class EigenMethod { PowerIteration, JacobiFull };

/// Largest eigenpair of L_D or Q_D together with the evidence that it is one.
struct SpectralSummary {
  double rho = 0.0;
  std::vector<double> vector;  // unit length
  double residual = 0.0;       // ||M x - rho x||_2
  int iterations = 0;
  EigenMethod method = EigenMethod::PowerIteration;
};

struct FullSpectrum {
  std::vector<double> eigenvalues;   // ascending
  std::vector<double> eigenvectors;  // row-major n x n, column j pairs with eigenvalues[j]
  double off_diag_norm = 0.0;
  int sweeps = 0;

  double vector_entry(int row, int col) const {
    return eigenvectors[static_cast<std::size_t>(row) * eigenvalues.size() + col];
  }
};

struct PowerIterationOptions {
  int max_iterations = 100000;
  double rq_tolerance = 1e-13;  // relative change of the Rayleigh quotient
  int stable_iterations = 3;
  double residual_tolerance = 1e-9;  // times max(1, |rho|)
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls to
/// 1e-12 * ||M||_F. Throws NoConvergence after 100 sweeps.
FullSpectrum jacobi_spectrum(const SymMatrix& m);

/// Largest eigenvalue of a distance Laplacian. Power iteration restricted to
/// the complement of the all-ones vector, falling back to Jacobi when the
/// iteration cap is hit. The returned vector is orthogonal to the all-ones
/// vector and its first non-negligible entry is positive.
SpectralSummary largest_eigenpair_laplacian(const SymMatrix& l, const PowerIterationOptions& opts = {});

/// Perron pair of a nonnegative irreducible matrix such as Q_D; the returned
/// vector is entrywise positive.
SpectralSummary largest_eigenpair_signless(const SymMatrix& q, const PowerIterationOptions& opts = {});

/// Throws TooSmall for n < 2.
SpectralSummary rho_L(const Graph& g);
SpectralSummary rho_Q(const Graph& g);

enum class Objective { RhoL, RhoQ };

/// rho_L or rho_Q of g by objective.
SpectralSummary spectral_radius(const Graph& g, Objective objective);
double spectral_radius_value(const DistanceData& d, Objective objective);

enum class RhoOrder { Less, Tie, Greater };

/// 1e-8 * max(1, |a|, |b|).
double comparison_tolerance(double a, double b) noexcept;

/// Strict order outside comparison_tolerance, Tie inside it.
RhoOrder compare_rho(double a, double b) noexcept;
RhoOrder compare_rho(const SpectralSummary& a, const SpectralSummary& b) noexcept;

}  // namespace distlap
