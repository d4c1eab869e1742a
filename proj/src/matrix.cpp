#include "clusterlab/matrix.hpp"

#include <sstream>

namespace clusterlab {

namespace {

Rational bareiss(RationalMatrix a) {
  const std::size_t k = a.rows();
  Rational sign = 1;
  Rational prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (is_zero(a(p, p))) {
      std::size_t r = p + 1;
      while (r < k && is_zero(a(r, p))) ++r;
      if (r == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(a(p, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
      a(i, p) = 0;
    }
    prev = a(p, p);
  }
  return sign * a(k - 1, k - 1);
}

}  // namespace

Rational det(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  if (a.rows() <= 4) return det_cofactor(a);
  return bareiss(a);
}

std::size_t rank(const RationalMatrix& a0) {
  RationalMatrix a = a0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Vector solve(const RationalMatrix& a0, const Vector& b) {
  const std::size_t k = a0.rows();
  if (a0.cols() != k || b.size() != k) throw DimensionError("solve shape mismatch");
  RationalMatrix a(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = a0(i, j);
    a(i, k) = b[i];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && is_zero(a(piv, c))) ++piv;
    if (piv == k) throw ArithmeticError("singular system");
    for (std::size_t j = 0; j <= k; ++j) std::swap(a(c, j), a(piv, j));
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j <= k; ++j) a(i, j) -= f * a(c, j);
    }
  }
  Vector x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = a(i, k) / a(i, i);
  return x;
}

RationalMatrix from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  RationalMatrix a(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) a.set_column(c, cols[c]);
  return a;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Covector xi_covector(const std::vector<Vector>& vs) {
  const std::size_t m = vs.size() + 1;
  for (const auto& v : vs)
    if (v.size() != m) throw DimensionError("xi_covector needs m-1 vectors in Q^m");
  Covector out;
  out.coeffs.assign(m, Rational(0));
  out.degenerate = true;
  for (std::size_t k = 0; k < m; ++k) {
    RationalMatrix minor(m - 1, m - 1);
    for (std::size_t r = 0, rr = 0; r < m; ++r) {
      if (r == k) continue;
      for (std::size_t c = 0; c + 1 < m; ++c) minor(rr, c) = vs[c][r];
      ++rr;
    }
    Rational d = m == 1 ? Rational(1) : det(minor);
    out.coeffs[k] = (k % 2 == 0) ? d : Rational(-d);
    if (!is_zero(d)) out.degenerate = false;
  }
  return out;
}

std::string to_string(const RationalMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? ", " : "") << to_string(a(r, c));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace clusterlab
