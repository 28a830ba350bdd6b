#include "polilab/core/math.hpp"

#include "polilab/core/errors.hpp"

namespace polilab {

double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw ShapeError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vec matvec(const Mat& A, const Vec& x) {
  if (A.cols != x.size()) throw ShapeError("matvec: dimension mismatch");
  Vec y(A.rows, 0.0);
  for (std::size_t r = 0; r < A.rows; ++r) {
    double s = 0.0;
    const double* row = A.a.data() + r * A.cols;
    for (std::size_t c = 0; c < A.cols; ++c) s += row[c] * x[c];
    y[r] = s;
  }
  return y;
}

Vec matvec_t(const Mat& A, const Vec& x) {
  if (A.rows != x.size()) throw ShapeError("matvec_t: dimension mismatch");
  Vec y(A.cols, 0.0);
  for (std::size_t r = 0; r < A.rows; ++r) {
    const double xr = x[r];
    const double* row = A.a.data() + r * A.cols;
    for (std::size_t c = 0; c < A.cols; ++c) y[c] += row[c] * xr;
  }
  return y;
}

void axpy(double s, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw ShapeError("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

void add_outer(double s, const Vec& u, const Vec& v, Mat& A) {
  if (A.rows != u.size() || A.cols != v.size())
    throw ShapeError("add_outer: dimension mismatch");
  for (std::size_t r = 0; r < A.rows; ++r) {
    double* row = A.a.data() + r * A.cols;
    const double su = s * u[r];
    for (std::size_t c = 0; c < A.cols; ++c) row[c] += su * v[c];
  }
}

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace polilab
