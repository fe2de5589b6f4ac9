#include "distlap/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace distlap {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiTolerance = 1e-12;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void scale(std::span<double> a, double f) {
  for (double& v : a) v *= f;
}

void remove_mean(std::span<double> a) {
  const double mean = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
  for (double& v : a) v -= mean;
}

double residual_norm(const SymMatrix& m, std::span<const double> x, double rho) {
  std::vector<double> y(x.size());
  m.multiply(x, y);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - rho * x[i];
    s += r * r;
  }
  return std::sqrt(s);
}

void fix_sign_first_nonzero(std::vector<double>& x) {
  for (double v : x) {
    if (std::abs(v) > 1e-9) {
      if (v < 0) scale(x, -1.0);
      return;
    }
  }
}

void fix_sign_positive(std::vector<double>& x) {
  if (std::accumulate(x.begin(), x.end(), 0.0) < 0) scale(x, -1.0);
}

// Q_D starts from the ramp (1, 1 + 1/n, 1 + 2/n, ...). For L_D the centered
// ramp is antisymmetric under reversing the labels, so on a graph whose
// labeling has that symmetry it can be orthogonal to the top eigenvector;
// a fixed-seed pseudo-random start in [0.5, 1.5) is used instead.
std::vector<double> start_vector(int n, bool laplacian) {
  std::vector<double> x(static_cast<std::size_t>(n));
  if (laplacian) {
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int i = 0; i < n; ++i) x[i] = 0.5 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
    remove_mean(x);
  } else {
    for (int i = 0; i < n; ++i) x[i] = 1.0 + static_cast<double>(i) / n;
  }
  scale(x, 1.0 / norm(x));
  return x;
}

SpectralSummary from_jacobi(const SymMatrix& m, bool laplacian) {
  const FullSpectrum fs = jacobi_spectrum(m);
  const int n = m.order();
  SpectralSummary s;
  s.method = EigenMethod::JacobiFull;
  s.iterations = fs.sweeps;
  s.rho = fs.eigenvalues.back();
  s.vector.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.vector[i] = fs.vector_entry(i, n - 1);
  if (laplacian) {
    remove_mean(s.vector);
    scale(s.vector, 1.0 / norm(s.vector));
    fix_sign_first_nonzero(s.vector);
  } else {
    fix_sign_positive(s.vector);
  }
  s.residual = residual_norm(m, s.vector, s.rho);
  return s;
}

SpectralSummary power_iteration(const SymMatrix& m, bool laplacian, const PowerIterationOptions& opts) {
  const int n = m.order();
  std::vector<double> x = start_vector(n, laplacian);
  std::vector<double> y(static_cast<std::size_t>(n));
  double previous = 0.0;
  int stable = 0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    m.multiply(x, y);
    if (laplacian) remove_mean(y);
    const double rq = dot(x, y);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = y[i] - rq * x[i];
      r2 += r * r;
    }
    stable = (it > 1 && std::abs(rq - previous) <= opts.rq_tolerance * std::abs(rq)) ? stable + 1 : 0;
    previous = rq;
    if (stable >= opts.stable_iterations && std::sqrt(r2) <= opts.residual_tolerance * std::max(1.0, std::abs(rq))) {
      SpectralSummary s;
      s.rho = rq;
      s.vector = std::move(x);
      if (laplacian) {
        fix_sign_first_nonzero(s.vector);
      } else {
        fix_sign_positive(s.vector);
      }
      s.residual = residual_norm(m, s.vector, s.rho);
      s.iterations = it;
      s.method = EigenMethod::PowerIteration;
      return s;
    }
    const double ny = norm(y);
    if (ny == 0.0) break;
    for (int i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  return from_jacobi(m, laplacian);
}

void check_order(const Graph& g) {
  if (g.order() < 2) {
    throw Error(Errc::TooSmall, "spectral radius needs n >= 2, got n=" + std::to_string(g.order()));
  }
}

}  // namespace

FullSpectrum jacobi_spectrum(const SymMatrix& m) {
  const int n = m.order();
  std::vector<double> a(m.entries().begin(), m.entries().end());
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto at = [n](std::vector<double>& mat, int i, int j) -> double& {
    return mat[static_cast<std::size_t>(i) * n + j];
  };
  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2.0 * at(a, p, q) * at(a, p, q);
    return std::sqrt(s);
  };

  const double target = kJacobiTolerance * m.frobenius_norm();
  FullSpectrum out;
  double off = off_norm();
  int sweep = 0;
  while (off > target) {
    if (sweep == kMaxJacobiSweeps) {
      throw Error(Errc::NoConvergence, "Jacobi did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    ++sweep;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_norm();
  }

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return at(a, i, i) < at(a, j, j); });
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(static_cast<std::size_t>(n) * n);
  for (int col = 0; col < n; ++col) {
    out.eigenvalues[col] = at(a, idx[col], idx[col]);
    for (int row = 0; row < n; ++row) {
      out.eigenvectors[static_cast<std::size_t>(row) * n + col] = at(v, row, idx[col]);
    }
  }
  out.off_diag_norm = off;
  out.sweeps = sweep;
  return out;
}

SpectralSummary largest_eigenpair_laplacian(const SymMatrix& l, const PowerIterationOptions& opts) {
  if (l.order() < 2) throw Error(Errc::TooSmall, "matrix order below 2");
  return power_iteration(l, true, opts);
}

SpectralSummary largest_eigenpair_signless(const SymMatrix& q, const PowerIterationOptions& opts) {
  if (q.order() < 1) throw Error(Errc::TooSmall, "empty matrix");
  return power_iteration(q, false, opts);
}

SpectralSummary rho_L(const Graph& g) {
  check_order(g);
  return largest_eigenpair_laplacian(build_L(g));
}

SpectralSummary rho_Q(const Graph& g) {
  check_order(g);
  return largest_eigenpair_signless(build_Q(g));
}

SpectralSummary spectral_radius(const Graph& g, Objective objective) {
  return objective == Objective::RhoL ? rho_L(g) : rho_Q(g);
}

double spectral_radius_value(const DistanceData& d, Objective objective) {
  if (d.n < 2) throw Error(Errc::TooSmall, "spectral radius needs n >= 2");
  return objective == Objective::RhoL ? largest_eigenpair_laplacian(build_L(d)).rho
                                      : largest_eigenpair_signless(build_Q(d)).rho;
}

double comparison_tolerance(double a, double b) noexcept {
  return 1e-8 * std::max({1.0, std::abs(a), std::abs(b)});
}

RhoOrder compare_rho(double a, double b) noexcept {
  const double eps = comparison_tolerance(a, b);
  if (a - b > eps) return RhoOrder::Greater;
  if (b - a > eps) return RhoOrder::Less;
  return RhoOrder::Tie;
}

RhoOrder compare_rho(const SpectralSummary& a, const SpectralSummary& b) noexcept { return compare_rho(a.rho, b.rho); }

}  // namespace distlap
