#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrhorn/horn.hpp"

namespace lrhorn {

/// Dense real symmetric matrix; symmetry is structural (only one triangle is
/// settable, both reads agree by construction).
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order)
      : order_(order), a_(static_cast<std::size_t>(order) * order, 0.0) {
    if (order < 1) throw std::invalid_argument("order must be positive");
  }

  int order() const { return order_; }

  double operator()(int row, int col) const { return a_[index(row, col)]; }

  void set(int row, int col, double value) {
    a_[index(row, col)] = value;
    a_[index(col, row)] = value;
  }

  double trace() const {
    double t = 0.0;
    for (int d = 0; d < order_; ++d) t += (*this)(d, d);
    return t;
  }

  double frobenius_norm() const {
    double t = 0.0;
    for (double v : a_) t += v * v;
    return std::sqrt(t);
  }

  friend SymmetricMatrix operator+(const SymmetricMatrix& x, const SymmetricMatrix& y) {
    if (x.order_ != y.order_) throw std::invalid_argument("order mismatch");
    SymmetricMatrix out(x.order_);
    for (std::size_t p = 0; p < out.a_.size(); ++p) out.a_[p] = x.a_[p] + y.a_[p];
    return out;
  }

 private:
  std::size_t index(int row, int col) const {
    if (row < 0 || row >= order_ || col < 0 || col >= order_)
      throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(row) * order_ + col;
  }

  int order_;
  std::vector<double> a_;
};

/// Standard-normal stream over a fixed-seed mt19937_64 via the Box-Muller
/// transform; self-contained so the sample sequence is identical across
/// standard libraries.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1], u2 in [0, 1)
    const double u1 =
        (static_cast<double>(engine_() >> 11) + 1.0) / 9007199254740993.0;  // 2^53 + 1
    const double u2 = static_cast<double>(engine_() >> 11) / 9007199254740992.0;  // 2^53
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Independent standard-normal entries, symmetrized as (G + G^T) / 2.
inline SymmetricMatrix sample_symmetric(int r, NormalSampler& rng) {
  std::vector<double> g(static_cast<std::size_t>(r) * r);
  for (double& v : g) v = rng.next();
  SymmetricMatrix out(r);
  for (int row = 0; row < r; ++row)
    for (int col = row; col < r; ++col)
      out.set(row, col,
              0.5 * (g[static_cast<std::size_t>(row) * r + col] +
                     g[static_cast<std::size_t>(col) * r + row]));
  return out;
}

struct EigenDecomposition {
  std::vector<double> values;   // weakly decreasing
  std::vector<double> vectors;  // row-major; column c is the eigenvector of values[c]
  int order = 0;
  int sweeps = 0;

  double vector_entry(int row, int col) const {
    return vectors[static_cast<std::size_t>(row) * order + col];
  }
};

/// Cyclic Jacobi rotations, iterated until the off-diagonal Frobenius norm
/// drops below 1e-12 times the Frobenius norm of the input. The sweep limit
/// is generous; hitting it signals a defect, not an input problem.
inline EigenDecomposition jacobi_eigen(const SymmetricMatrix& m) {
  constexpr int kMaxSweeps = 64;
  constexpr double kRelativeTarget = 1e-12;
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) a[static_cast<std::size_t>(row) * n + col] = m(row, col);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int d = 0; d < n; ++d) v[static_cast<std::size_t>(d) * n + d] = 1.0;

  auto at = [&](std::vector<double>& mat, int row, int col) -> double& {
    return mat[static_cast<std::size_t>(row) * n + col];
  };
  auto off_norm = [&]() {
    double t = 0.0;
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col)
        if (row != col) t += at(a, row, col) * at(a, row, col);
    return std::sqrt(t);
  };

  const double target = kRelativeTarget * m.frobenius_norm();
  int sweeps = 0;
  while (off_norm() > target) {
    if (sweeps++ >= kMaxSweeps)
      throw std::runtime_error("jacobi_eigen failed to converge");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int x = 0; x < n; ++x) {
          const double axp = at(a, x, p), axq = at(a, x, q);
          at(a, x, p) = c * axp - s * axq;
          at(a, x, q) = s * axp + c * axq;
        }
        for (int x = 0; x < n; ++x) {
          const double apx = at(a, p, x), aqx = at(a, q, x);
          at(a, p, x) = c * apx - s * aqx;
          at(a, q, x) = s * apx + c * aqx;
        }
        for (int x = 0; x < n; ++x) {
          const double vxp = at(v, x, p), vxq = at(v, x, q);
          at(v, x, p) = c * vxp - s * vxq;
          at(v, x, q) = s * vxp + c * vxq;
        }
      }
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) perm[static_cast<std::size_t>(d)] = d;
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    return at(a, x, x) > at(a, y, y);
  });

  EigenDecomposition out;
  out.order = n;
  out.sweeps = sweeps;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c) {
    out.values[static_cast<std::size_t>(c)] = at(a, perm[static_cast<std::size_t>(c)],
                                                 perm[static_cast<std::size_t>(c)]);
    for (int row = 0; row < n; ++row)
      out.vectors[static_cast<std::size_t>(row) * n + c] =
          at(v, row, perm[static_cast<std::size_t>(c)]);
  }
  return out;
}

/// All eigenvalues, weakly decreasing.
inline std::vector<double> eigenvalues_desc(const SymmetricMatrix& m) {
  return jacobi_eigen(m).values;
}

/// Frobenius distance between M and V diag(w) V^T, relative to |M|_F
/// (absolute when M = 0); the runtime correctness identity of the solver.
inline double reconstruction_error(const SymmetricMatrix& m, const EigenDecomposition& e) {
  const int n = m.order();
  double err = 0.0;
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col) {
      double rebuilt = 0.0;
      for (int c = 0; c < n; ++c)
        rebuilt += e.vector_entry(row, c) * e.values[static_cast<std::size_t>(c)] *
                   e.vector_entry(col, c);
      const double diff = rebuilt - m(row, col);
      err += diff * diff;
    }
  const double scale = m.frobenius_norm();
  return scale > 0.0 ? std::sqrt(err) / scale : std::sqrt(err);
}

struct SpectralViolation {
  long long trial = 0;
  std::string inequality;
  double margin = 0.0;
};

struct SpectralSampleReport {
  int r = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<SpectralViolation> violations;
  double worst_margin = 0.0;          // smallest inequality margin seen
  double max_trace_error = 0.0;       // relative
  double max_reconstruction_error = 0.0;  // relative Frobenius
};

namespace detail {

// splitmix64: decorrelates per-trial seeds from a single stream seed.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::string render_subset(const char* name, const std::vector<int>& subset) {
  std::string out = name;
  out += "{";
  for (std::size_t p = 0; p < subset.size(); ++p) {
    if (p) out += ",";
    out += std::to_string(subset[p]);
  }
  out += "}";
  return out;
}

}  // namespace detail

/// Samples pairs of random symmetric matrices and checks every facet
/// inequality on the spectra of (A+B, A, B), along with trace additivity and
/// the eigensolver reconstruction identity. Real symmetric samples are
/// Hermitian, so each sampled triple lies in the eigenvalue cone and the
/// inequalities are a necessary condition; violations beyond tolerance are
/// recorded (none are expected).
inline SpectralSampleReport he_probe(int r, long long trials, std::uint64_t seed,
                                     const std::vector<HornInequality>& facets) {
  constexpr double kMarginTolerance = 1e-8;
  SpectralSampleReport report;
  report.r = r;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = kMarginTolerance;
  bool first_margin = true;

  for (long long trial = 0; trial < trials; ++trial) {
    NormalSampler rng(detail::split_seed(seed, static_cast<std::uint64_t>(trial)));
    const SymmetricMatrix a = sample_symmetric(r, rng);
    const SymmetricMatrix b = sample_symmetric(r, rng);
    const SymmetricMatrix sum = a + b;

    const auto ea = jacobi_eigen(a);
    const auto eb = jacobi_eigen(b);
    const auto esum = jacobi_eigen(sum);

    report.max_reconstruction_error =
        std::max({report.max_reconstruction_error, reconstruction_error(a, ea),
                  reconstruction_error(b, eb), reconstruction_error(sum, esum)});

    double total_lambda = 0.0, total_mu = 0.0, total_nu = 0.0;
    for (int d = 0; d < r; ++d) {
      total_lambda += esum.values[static_cast<std::size_t>(d)];
      total_mu += ea.values[static_cast<std::size_t>(d)];
      total_nu += eb.values[static_cast<std::size_t>(d)];
    }
    const double scale =
        std::max({1.0, std::abs(total_lambda), std::abs(total_mu) + std::abs(total_nu)});
    report.max_trace_error = std::max(
        report.max_trace_error, std::abs(total_lambda - total_mu - total_nu) / scale);

    for (const auto& facet : facets) {
      double lhs = 0.0, rhs = 0.0;
      for (int i : facet.subsets.I) lhs += esum.values[static_cast<std::size_t>(i - 1)];
      for (int j : facet.subsets.J) rhs += ea.values[static_cast<std::size_t>(j - 1)];
      for (int k : facet.subsets.K) rhs += eb.values[static_cast<std::size_t>(k - 1)];
      const double margin = rhs - lhs;
      if (first_margin || margin < report.worst_margin) {
        report.worst_margin = margin;
        first_margin = false;
      }
      if (margin < -kMarginTolerance) {
        report.violations.push_back(SpectralViolation{
            trial,
            detail::render_subset("I", facet.subsets.I) + " " +
                detail::render_subset("J", facet.subsets.J) + " " +
                detail::render_subset("K", facet.subsets.K),
            margin});
      }
    }
  }
  return report;
}

}  // namespace lrhorn
