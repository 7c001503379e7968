#include "polyspace/numeric.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "polyspace/parallel.hpp"

namespace polyspace {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> lengths_as_double(const LengthVector& l) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(l.n()));
  for (const BigInt& v : l.lengths()) out.push_back(v.get_d());
  return out;
}

struct EndPoint {
  double x = 0;  // sum of l_i cos(theta_i)
  double y = 0;  // sum of l_i sin(theta_i)
};

EndPoint end_point(const std::vector<double>& len, const ArmConfiguration& c) {
  EndPoint e;
  e.x = len[0];  // gauge: first link along the real axis
  for (std::size_t j = 0; j < c.angles.size(); ++j) {
    e.x += len[j + 1] * std::cos(c.angles[j]);
    e.y += len[j + 1] * std::sin(c.angles[j]);
  }
  return e;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2 * kPi);  // lands in [-pi, pi]
  if (a <= -kPi) a = kPi;
  return a;
}

}  // namespace

double f_arm(const LengthVector& l, const ArmConfiguration& c) {
  const std::vector<double> len = lengths_as_double(l);
  const EndPoint e = end_point(len, c);
  return -(e.x * e.x + e.y * e.y);
}

std::vector<double> grad_f(const LengthVector& l, const ArmConfiguration& c) {
  const std::vector<double> len = lengths_as_double(l);
  const EndPoint e = end_point(len, c);
  std::vector<double> g(c.angles.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    g[j] = 2.0 * len[j + 1] * (e.x * std::sin(c.angles[j]) - e.y * std::cos(c.angles[j]));
  return g;
}

std::vector<double> hessian_f(const LengthVector& l, const ArmConfiguration& c) {
  const std::vector<double> len = lengths_as_double(l);
  const EndPoint e = end_point(len, c);
  const std::size_t m = c.angles.size();
  std::vector<double> h(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      if (j == k) {
        h[j * m + k] = 2.0 * len[j + 1] *
                           (e.x * std::cos(c.angles[j]) + e.y * std::sin(c.angles[j])) -
                       2.0 * len[j + 1] * len[j + 1];
      } else {
        h[j * m + k] = -2.0 * len[j + 1] * len[k + 1] * std::cos(c.angles[j] - c.angles[k]);
      }
    }
  }
  return h;
}

std::vector<double> hessian_f_fd(const LengthVector& l, const ArmConfiguration& c, double h) {
  const std::size_t m = c.angles.size();
  std::vector<double> out(m * m);
  ArmConfiguration probe = c;
  const double f0 = f_arm(l, c);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j; k < m; ++k) {
      double v;
      if (j == k) {
        probe = c;
        probe.angles[j] = c.angles[j] + h;
        const double fp = f_arm(l, probe);
        probe.angles[j] = c.angles[j] - h;
        const double fm = f_arm(l, probe);
        v = (fp - 2 * f0 + fm) / (h * h);
      } else {
        probe = c;
        probe.angles[j] = c.angles[j] + h;
        probe.angles[k] = c.angles[k] + h;
        const double fpp = f_arm(l, probe);
        probe.angles[k] = c.angles[k] - h;
        const double fpm = f_arm(l, probe);
        probe.angles[j] = c.angles[j] - h;
        const double fmm = f_arm(l, probe);
        probe.angles[k] = c.angles[k] + h;
        const double fmp = f_arm(l, probe);
        v = (fpp - fpm - fmp + fmm) / (4 * h * h);
      }
      out[j * m + k] = v;
      out[k * m + j] = v;
    }
  }
  return out;
}

ArmConfiguration collinear_config(const LengthVector& l, SubsetMask J) {
  const int n = l.n();
  if (!J.fits(n)) throw input_error("collinear_config: mask does not fit n");
  if (!J.contains(1)) J = J.complement(n);  // p_J and p_CJ coincide on the torus
  ArmConfiguration c;
  c.angles.resize(static_cast<std::size_t>(n - 1));
  for (int i = 2; i <= n; ++i)
    c.angles[static_cast<std::size_t>(i - 2)] = J.contains(i) ? 0.0 : kPi;
  return c;
}

int morse_index_numeric(const LengthVector& l, SubsetMask J) {
  if (classify_subset(l, J) != SubsetClass::Long)
    throw input_error("morse_index_numeric: subset must be long");
  const ArmConfiguration c = collinear_config(l, J);
  const std::size_t m = c.angles.size();
  const std::vector<double> h = hessian_f(l, c);
  Eigen::MatrixXd mat(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) mat(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = h[j * m + k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
  const double scale = l.total().get_d() * l.total().get_d();
  const double dead_zone = 1e-7 * scale;
  int negatives = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) <= dead_zone)
      throw degenerate_hessian_error("morse_index_numeric: eigenvalue " +
                                     std::to_string(lambda) + " in the dead zone");
    if (lambda < 0) ++negatives;
  }
  return negatives;
}

ArmConfiguration apply_involution(ArmConfiguration c) {
  for (double& a : c.angles) {
    a = -a;
    if (a <= -kPi) a = kPi;  // keep the (-pi, pi] normal form
  }
  return c;
}

int sample_components(const LengthVector& l, int samples, double closure_tol,
                      double link_radius, std::uint64_t seed) {
  const int n = l.n();
  if (n > 7)
    throw budget_error("sample_components: n = " + std::to_string(n) +
                       " exceeds the sampling budget (7)");
  if (samples < 1) throw input_error("sample_components: samples must be positive");
  const std::vector<double> len = lengths_as_double(l);
  const double total = l.total().get_d();
  const double step = 0.1 / (total * total);
  const double f_goal = -closure_tol * closure_tol;
  const std::size_t m = static_cast<std::size_t>(n - 1);
  constexpr int kMaxIterations = 10'000;

  // One slot per sample keeps the merge deterministic for any worker count;
  // each sample owns an RNG stream derived from (seed, sample index).
  std::vector<std::optional<std::vector<double>>> survivors(static_cast<std::size_t>(samples));
  parallel_chunks(0, static_cast<std::uint64_t>(samples), [&](int, std::uint64_t lo, std::uint64_t hi) {
    std::vector<double> theta(m), grad(m);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
      std::mt19937_64 rng(sseq);
      for (double& a : theta)
        a = -kPi + 2 * kPi * (static_cast<double>(rng()) / 18446744073709551616.0);
      bool closed = false;
      for (int iter = 0; iter < kMaxIterations; ++iter) {
        double ex = len[0], ey = 0;
        for (std::size_t j = 0; j < m; ++j) {
          ex += len[j + 1] * std::cos(theta[j]);
          ey += len[j + 1] * std::sin(theta[j]);
        }
        if (-(ex * ex + ey * ey) >= f_goal) {
          closed = true;
          break;
        }
        for (std::size_t j = 0; j < m; ++j)
          grad[j] = 2.0 * len[j + 1] * (ex * std::sin(theta[j]) - ey * std::cos(theta[j]));
        for (std::size_t j = 0; j < m; ++j) theta[j] += step * grad[j];
      }
      if (!closed) continue;
      std::vector<double> point(m);
      for (std::size_t j = 0; j < m; ++j) point[j] = wrap_angle(theta[j]);
      survivors[static_cast<std::size_t>(idx)] = std::move(point);
    }
  });

  std::vector<std::vector<double>> points;
  for (auto& s : survivors)
    if (s) points.push_back(std::move(*s));
  if (points.empty()) return 0;
  if (points.size() < 50)
    throw inconclusive_error("sample_components: only " + std::to_string(points.size()) +
                             " of " + std::to_string(samples) +
                             " samples converged; result inconclusive");

  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const double radius_sq = link_radius * link_radius;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t q = p + 1; q < points.size(); ++q) {
      double dist_sq = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const double d = wrap_angle(points[p][j] - points[q][j]);
        dist_sq += d * d;
        if (dist_sq > radius_sq) break;
      }
      if (dist_sq <= radius_sq) parent[find(p)] = find(q);
    }
  }
  int components = 0;
  for (std::size_t v = 0; v < points.size(); ++v)
    if (find(v) == v) ++components;
  return components;
}

}  // namespace polyspace
