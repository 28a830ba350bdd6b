#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace polilab {

using Vec = std::vector<double>;

// Dense row-major matrix. Small enough here that anything fancier than a
// flat buffer would only get in the way of the hand-written gradients.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), a(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
  std::size_t size() const { return a.size(); }
};

double dot(const Vec& x, const Vec& y);

// y = A x
Vec matvec(const Mat& A, const Vec& x);
// y = A^T x
Vec matvec_t(const Mat& A, const Vec& x);
// y += s * x
void axpy(double s, const Vec& x, Vec& y);
// A += s * (u v^T)
void add_outer(double s, const Vec& u, const Vec& v, Mat& A);

inline double sigmoid(double x) {
  if (x >= 0.0) {
    const double e = std::exp(-x);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// Probabilities are clipped into [kProbEps, 1 - kProbEps] before any log,
// so cross-entropy losses stay finite for all inputs.
inline constexpr double kProbEps = 1e-7;

inline double clip_prob(double p) {
  if (p < kProbEps) return kProbEps;
  if (p > 1.0 - kProbEps) return 1.0 - kProbEps;
  return p;
}

// Binary cross-entropy of an already-clipped probability.
inline double bce(double p, double y) {
  return -(y * std::log(p) + (1.0 - y) * std::log(1.0 - p));
}

bool all_finite(const Vec& v);

}  // namespace polilab
