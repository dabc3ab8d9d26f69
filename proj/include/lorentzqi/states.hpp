#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lorentzqi/errors.hpp"
#include "lorentzqi/qmath.hpp"

namespace lorentzqi {

inline constexpr double kNormTolerance = 1e-12;

/// Normalized state vector over n qubits.
class PureState {
 public:
  /// Throws unless amplitudes.size() == 2^n and the norm is 1 within 1e-12.
  explicit PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubits_ = qubits_for_dim(amplitudes_.size());
    if (const double nrm = norm2(amplitudes_); std::abs(nrm - 1.0) > kNormTolerance)
      throw numeric_error("PureState: amplitudes have norm " + std::to_string(nrm));
  }

  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static PureState normalized(ComplexVector amplitudes) {
    const double nrm = norm2(amplitudes);
    if (nrm == 0.0) throw usage_error("PureState::normalized: zero vector");
    for (auto& a : amplitudes) a /= nrm;
    return PureState(std::move(amplitudes));
  }

  std::size_t qubit_count() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  const complex& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

 private:
  ComplexVector amplitudes_;
  std::size_t qubits_ = 0;
};

struct DensityDiagnostics {
  double hermiticity_violation = 0.0;
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  bool pass = false;
};

inline constexpr double kDensityTolerance = 1e-10;

inline DensityDiagnostics validate_density(const ComplexMatrix& m) {
  DensityDiagnostics d;
  if (!m.is_square()) return d;
  d.hermiticity_violation = hermiticity_violation(m);
  d.trace_deviation = std::abs(trace(m) - complex{1.0});
  // Spectrum of the Hermitian part; a large asymmetry already fails above.
  const auto values = eigvals_hermitian(hermitian_part(m));
  d.min_eigenvalue = values.empty() ? 0.0 : values.back();
  d.pass = d.hermiticity_violation <= kDensityTolerance &&
           d.trace_deviation <= kDensityTolerance && d.min_eigenvalue >= -kDensityTolerance;
  return d;
}

/// Hermitian, unit-trace, positive-semidefinite operator on n qubits.
class DensityOperator {
 public:
  /// Validates and stores the Hermitian part of `m`; throws numeric_error on
  /// any invariant violation beyond 1e-10.
  explicit DensityOperator(ComplexMatrix m) {
    if (!m.is_square()) throw usage_error("DensityOperator: matrix is not square");
    qubits_ = qubits_for_dim(m.rows());
    const DensityDiagnostics d = validate_density(m);
    if (!d.pass)
      throw numeric_error("DensityOperator: invalid (hermiticity " +
                          std::to_string(d.hermiticity_violation) + ", trace deviation " +
                          std::to_string(d.trace_deviation) + ", min eigenvalue " +
                          std::to_string(d.min_eigenvalue) + ")");
    matrix_ = hermitian_part(m);
  }

  std::size_t qubit_count() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  static DensityOperator maximally_mixed(std::size_t qubits) {
    const std::size_t dim = std::size_t{1} << qubits;
    return DensityOperator(ComplexMatrix::identity(dim) * complex(1.0 / static_cast<double>(dim)));
  }

 private:
  ComplexMatrix matrix_;
  std::size_t qubits_ = 0;
};

enum class StateId { ghz_plus, ghz_minus, w, w_prime };

inline constexpr std::array<StateId, 4> kAllStates{StateId::ghz_plus, StateId::ghz_minus,
                                                   StateId::w, StateId::w_prime};

inline std::string_view to_string(StateId id) {
  switch (id) {
    case StateId::ghz_plus: return "ghz_plus";
    case StateId::ghz_minus: return "ghz_minus";
    case StateId::w: return "w";
    case StateId::w_prime: return "w_prime";
  }
  return "?";
}

inline std::optional<StateId> parse_state_id(std::string_view text) {
  for (const StateId id : kAllStates)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

/// The four three-qubit initial states, amplitudes in lexicographic basis
/// order |000>, |001>, ..., |111>.
inline PureState make_state(StateId id) {
  const double g = 1.0 / std::sqrt(2.0);
  const double w = 1.0 / std::sqrt(3.0);
  ComplexVector a(8);
  switch (id) {
    case StateId::ghz_plus: a[0b000] = g; a[0b111] = g; break;
    case StateId::ghz_minus: a[0b000] = g; a[0b111] = -g; break;
    case StateId::w: a[0b100] = w; a[0b010] = w; a[0b001] = w; break;
    case StateId::w_prime: a[0b110] = w; a[0b101] = w; a[0b011] = w; break;
  }
  return PureState(std::move(a));
}

/// Computational basis state |bits> on n qubits (qubit 0 = most significant bit).
inline PureState basis_state(std::size_t qubits, std::size_t bits) {
  ComplexVector a(std::size_t{1} << qubits);
  if (bits >= a.size()) throw usage_error("basis_state: index out of range");
  a[bits] = 1.0;
  return PureState(std::move(a));
}

inline DensityOperator to_density(const PureState& psi) {
  return DensityOperator(outer(psi.amplitudes(), psi.amplitudes()));
}

inline DensityDiagnostics validate_density(const DensityOperator& rho) {
  return validate_density(rho.matrix());
}

/// Reduced state on `keep` (strictly increasing qubit indices).
inline DensityOperator reduce(const DensityOperator& rho, std::initializer_list<std::size_t> keep) {
  return DensityOperator(partial_trace(rho.matrix(), rho.qubit_count(), keep));
}

}  // namespace lorentzqi
