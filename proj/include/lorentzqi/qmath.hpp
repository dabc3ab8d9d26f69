#pragma once

// Dense complex linear algebra for operators on up to 12 qubits.
//
// Qubit 0 is the leftmost tensor factor: in an n-qubit basis index, qubit q
// occupies bit (n - 1 - q). |q0 q1 q2> therefore maps to 4*q0 + 2*q1 + q2.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorentzqi/errors.hpp"

namespace lorentzqi {

using complex = std::complex<double>;
using ComplexVector = std::vector<complex>;

inline constexpr std::size_t kMaxQubits = 12;

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds from nested rows; every row must have the same length.
  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw usage_error("ComplexMatrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static ComplexMatrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<complex> data() noexcept { return data_; }
  std::span<const complex> data() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(complex s) noexcept {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw usage_error("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const complex aik = a(i, k);
        if (aik == complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
    if (a.cols_ != v.size()) throw usage_error("matrix-vector product: dimension mismatch");
    ComplexVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      complex acc{};
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * v[k];
      out[i] = acc;
    }
    return out;
  }

 private:
  void require_same_shape(const ComplexMatrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw usage_error(std::string(what) + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> data_;
};

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

inline ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (auto& x : out.data()) x = std::conj(x);
  return out;
}

inline complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw usage_error("trace: matrix is not square");
  complex t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw usage_error("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

/// Largest entrywise modulus of m - m^dagger.
inline double hermiticity_violation(const ComplexMatrix& m) {
  if (!m.is_square()) throw usage_error("hermiticity_violation: matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

/// (m + m^dagger) / 2, removing rounding asymmetry.
inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out = m + adjoint(m);
  out *= 0.5;
  return out;
}

inline ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  ComplexMatrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

/// <a|b>, conjugating the first argument.
inline complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw usage_error("inner: dimension mismatch");
  complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

inline double norm2(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const complex s = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

/// Number of qubits n with 2^n == dim; throws when dim is not a power of two
/// in range.
inline std::size_t qubits_for_dim(std::size_t dim) {
  for (std::size_t n = 0; n <= kMaxQubits; ++n)
    if ((std::size_t{1} << n) == dim) return n;
  throw usage_error("dimension " + std::to_string(dim) + " is not 2^n with n <= 12");
}

/// Reduced operator on the qubits listed in `keep` (strictly increasing).
/// Kept qubits retain their relative order in the output.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t qubit_count,
                                   std::span<const std::size_t> keep) {
  if (qubit_count > kMaxQubits) throw usage_error("partial_trace: too many qubits");
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (rho.rows() != dim || rho.cols() != dim)
    throw usage_error("partial_trace: operator is not 2^n x 2^n");
  if (keep.empty()) throw usage_error("partial_trace: keep set is empty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= qubit_count)
      throw usage_error("partial_trace: qubit index " + std::to_string(keep[i]) +
                        " out of range for " + std::to_string(qubit_count) + " qubits");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw usage_error("partial_trace: keep indices must be strictly increasing");
  }

  std::vector<std::size_t> traced;
  for (std::size_t q = 0, k = 0; q < qubit_count; ++q) {
    if (k < keep.size() && keep[k] == q) {
      ++k;
    } else {
      traced.push_back(q);
    }
  }

  // Scatter each reduced index into its full-register bit positions once.
  auto offsets = [qubit_count](std::span<const std::size_t> qubits) {
    const std::size_t m = qubits.size();
    std::vector<std::size_t> off(std::size_t{1} << m, 0);
    for (std::size_t idx = 0; idx < off.size(); ++idx)
      for (std::size_t b = 0; b < m; ++b)
        if ((idx >> (m - 1 - b)) & 1U) off[idx] |= std::size_t{1} << (qubit_count - 1 - qubits[b]);
    return off;
  };
  const auto kept_off = offsets(keep);
  const auto traced_off = offsets(traced);

  const std::size_t out_dim = kept_off.size();
  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t i = 0; i < out_dim; ++i)
    for (std::size_t j = 0; j < out_dim; ++j) {
      complex acc{};
      for (const std::size_t t : traced_off) acc += rho(kept_off[i] | t, kept_off[j] | t);
      out(i, j) = acc;
    }
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t qubit_count,
                                   std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, qubit_count, std::span<const std::size_t>(keep.begin(), keep.size()));
}

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace detail

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Eigenvalues come back sorted descending.
inline EigenSystem eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_square()) throw usage_error("eig_hermitian: matrix is not square");
  if (const double asym = hermiticity_violation(m); asym > kHermitianTolerance)
    throw numeric_error("eig_hermitian: input not Hermitian (max asymmetry " +
                        std::to_string(asym) + ")");

  const std::size_t n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = kJacobiTolerance * std::max(1.0, detail::frobenius_norm(a));

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps && detail::off_diagonal_norm(a) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase e^{-i phi} on column q makes a(p,q) real, then a real
        // Jacobi rotation annihilates it.
        const complex phase = std::conj(apq) / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const complex vpp = c, vpq = s, vqp = -s * phase, vqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {  // columns: A <- A V
          const complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // rows: A <- V^dagger A
          const complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * vpp + vkq * vqp;
          v(k, q) = vkp * vpq + vkq * vqq;
        }
      }
  }
  if (detail::off_diagonal_norm(a) > stop)
    throw numeric_error("eig_hermitian: Jacobi did not converge in " +
                        std::to_string(kJacobiMaxSweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

inline std::vector<double> eigvals_hermitian(const ComplexMatrix& m) {
  return eig_hermitian(m).values;
}

inline constexpr double kNegativeEigenTolerance = 1e-10;

/// Clamps rounding-level negatives (down to -1e-10) to zero; anything more
/// negative is an error.
inline double clamp_nonnegative(double lambda) {
  if (lambda < -kNegativeEigenTolerance)
    throw numeric_error("eigenvalue " + std::to_string(lambda) + " below -1e-10");
  return std::max(lambda, 0.0);
}

/// V f(Lambda) V^dagger for a Hermitian input.
template <class F>
ComplexMatrix hermitian_function(const EigenSystem& es, F&& f) {
  const std::size_t n = es.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(es.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const complex vik = es.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(es.vectors(j, k));
    }
  }
  return out;
}

/// Hermitian PSD square root.
inline ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  const EigenSystem es = eig_hermitian(m);
  for (const double l : es.values) clamp_nonnegative(l);
  return hermitian_function(es, [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

inline complex det2(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw usage_error("det2: matrix is not 2x2");
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}
inline const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m{{0.0, complex{0.0, -1.0}}, {complex{0.0, 1.0}, 0.0}};
  return m;
}
inline const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

}  // namespace lorentzqi
