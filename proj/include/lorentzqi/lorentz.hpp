#pragma once

// Wigner-rotation channel on three spin qubits.
//
// Each particle's spin is rotated by D(Omega) = C (|0><0| + |1><1|) +
// S (|1><0| - |0><1|) with C = cos(Omega/2), S = sin(Omega/2): a real rotation
// about y. The momentum superposition sin(a)|p-> + cos(a)|p+> is handled by
// transforming each momentum branch separately and tracing momentum out.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <span>
#include <vector>

#include "lorentzqi/angles.hpp"
#include "lorentzqi/errors.hpp"
#include "lorentzqi/qmath.hpp"
#include "lorentzqi/states.hpp"

namespace lorentzqi {

/// How the Wigner angle depends on the momentum branch.
enum class BranchConvention {
  opposite,  // D(+Omega) on p+, D(-Omega) on p-
  same,      // D(+Omega) on both branches
};

inline std::string_view to_string(BranchConvention c) {
  return c == BranchConvention::opposite ? "opposite" : "same";
}

struct MomentumConfig {
  double alpha = 0.0;
  BranchConvention convention = BranchConvention::opposite;
};

inline ComplexMatrix wigner_unitary(double omega) {
  if (!std::isfinite(omega)) throw usage_error("wigner_unitary: non-finite angle");
  const double c = std::cos(omega / 2.0);
  const double s = std::sin(omega / 2.0);
  return ComplexMatrix{{c, -s}, {s, c}};
}

/// Applies a 2x2 operator to one qubit of an n-qubit amplitude vector in place.
inline void apply_single_qubit(ComplexVector& amps, std::size_t qubit_count, std::size_t qubit,
                               const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw usage_error("apply_single_qubit: operator is not 2x2");
  if (qubit >= qubit_count) throw usage_error("apply_single_qubit: qubit index out of range");
  if (amps.size() != (std::size_t{1} << qubit_count))
    throw usage_error("apply_single_qubit: vector size is not 2^n");
  const std::size_t stride = std::size_t{1} << (qubit_count - 1 - qubit);
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride)
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const complex a0 = amps[i0], a1 = amps[i1];
      amps[i0] = u(0, 0) * a0 + u(0, 1) * a1;
      amps[i1] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

/// Tensor product of per-qubit rotations applied to an n-qubit state.
inline PureState local_transform(const PureState& psi, std::span<const double> omegas) {
  if (omegas.size() != psi.qubit_count())
    throw usage_error("local_transform: need one angle per qubit");
  ComplexVector amps = psi.amplitudes();
  for (std::size_t q = 0; q < omegas.size(); ++q)
    apply_single_qubit(amps, psi.qubit_count(), q, wigner_unitary(omegas[q]));
  return PureState(std::move(amps));
}

/// (D(omega1) x D(omega2) x D(omega3)) |psi> for a three-qubit state.
inline PureState product_transform(const PureState& psi, const WignerAngles& angles) {
  if (psi.qubit_count() != 3)
    throw usage_error("product_transform: expected 3 qubits, got " +
                      std::to_string(psi.qubit_count()));
  const std::array<double, 3> om{angles.omega1, angles.omega2, angles.omega3};
  return local_transform(psi, om);
}

/// Spin state after tracing out momentum: cos^2(a) rho(+) + sin^2(a) rho(-).
inline DensityOperator momentum_traced_channel(const PureState& psi, const WignerAngles& angles,
                                               const MomentumConfig& cfg) {
  if (!std::isfinite(cfg.alpha)) throw usage_error("momentum_traced_channel: non-finite alpha");
  const double wp = std::cos(cfg.alpha) * std::cos(cfg.alpha);
  const double wm = std::sin(cfg.alpha) * std::sin(cfg.alpha);
  const WignerAngles minus = cfg.convention == BranchConvention::opposite ? -angles : angles;

  const PureState plus_state = product_transform(psi, angles);
  const PureState minus_state = product_transform(psi, minus);
  ComplexMatrix rho = outer(plus_state.amplitudes(), plus_state.amplitudes()) * complex(wp);
  rho += outer(minus_state.amplitudes(), minus_state.amplitudes()) * complex(wm);
  return DensityOperator(std::move(rho));
}

namespace detail {
struct HalfAngles {
  double c1, c2, c3, s1, s2, s3;
  explicit HalfAngles(const WignerAngles& a)
      : c1(std::cos(a.omega1 / 2)), c2(std::cos(a.omega2 / 2)), c3(std::cos(a.omega3 / 2)),
        s1(std::sin(a.omega1 / 2)), s2(std::sin(a.omega2 / 2)), s3(std::sin(a.omega3 / 2)) {}
};
}  // namespace detail

/// Closed-form amplitudes of the transformed GHZ+ state, |000> ... |111>.
inline ComplexVector printed_coefficients_ghz(const WignerAngles& angles) {
  const detail::HalfAngles h(angles);
  const double r = 1.0 / std::sqrt(2.0);
  return {
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.s2 * h.s3),
      r * (h.c1 * h.c2 * h.s3 + h.s1 * h.s2 * h.c3),
      r * (h.c1 * h.s2 * h.c3 + h.s1 * h.c2 * h.s3),
      r * (h.c1 * h.s2 * h.s3 - h.s1 * h.c2 * h.c3),
      r * (h.s1 * h.c2 * h.c3 + h.c1 * h.s2 * h.s3),
      r * (h.s1 * h.c2 * h.s3 - h.c1 * h.s2 * h.c3),
      r * (h.s1 * h.s2 * h.c3 - h.c1 * h.c2 * h.s3),
      r * (h.c1 * h.c2 * h.c3 + h.s1 * h.s2 * h.s3),
  };
}

/// Closed-form amplitudes of the transformed W state, |000> ... |111>.
inline ComplexVector printed_coefficients_w(const WignerAngles& angles) {
  const detail::HalfAngles h(angles);
  const double r = 1.0 / std::sqrt(3.0);
  return {
      -r * (h.s1 * h.c2 * h.c3 + h.c1 * h.s2 * h.c3 + h.c1 * h.c2 * h.s3),
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.c2 * h.s3 - h.c1 * h.s2 * h.s3),
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.s2 * h.c3 - h.c1 * h.s2 * h.s3),
      r * (h.c1 * h.c2 * h.s3 + h.c1 * h.s2 * h.c3 - h.s1 * h.s2 * h.s3),
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.s2 * h.c3 - h.s1 * h.c2 * h.s3),
      r * (h.c1 * h.c2 * h.s3 + h.s1 * h.c2 * h.c3 - h.s1 * h.s2 * h.s3),
      r * (h.c1 * h.s2 * h.c3 + h.s1 * h.c2 * h.c3 - h.s1 * h.s2 * h.s3),
      r * (h.c1 * h.s2 * h.s3 + h.s1 * h.c2 * h.s3 + h.s1 * h.s2 * h.c3),
  };
}

// Literature coefficient tables, transcribed verbatim including their errors.
// The malformed A5 token "C1 S2 CS3" is read as the product C1*S2*C3*S3.

inline ComplexVector published_table_ghz(const WignerAngles& angles) {
  const detail::HalfAngles h(angles);
  const double r = 1.0 / std::sqrt(2.0);
  return {
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.s2 * h.s3),
      r * (h.c1 * h.c2 * h.s3 + h.s1 * h.s2 * h.c3),
      r * (h.c1 * h.s2 * h.c3 + h.s1 * h.c2 * h.s3),
      r * (h.c1 * h.s2 * h.s3 - h.s1 * h.c2 * h.c3),
      r * (h.s1 * h.c2 * h.s3 + h.c1 * h.s2 * h.c3 * h.s3),
      r * (h.s1 * h.c2 * h.s3 - h.c1 * h.s2 * h.c3),
      r * (h.s1 * h.s2 * h.c3 - h.c1 * h.c2 * h.s3),
      r * (h.c1 * h.c2 * h.c3 + h.s1 * h.s2 * h.s3),
  };
}

inline ComplexVector published_table_w(const WignerAngles& angles) {
  const detail::HalfAngles h(angles);
  const double r = 1.0 / std::sqrt(3.0);
  return {
      r * (h.s1 * h.c2 * h.s3 + h.s1 * h.s2 * h.c3 + h.c1 * h.s2 * h.s3),
      r * (h.s1 * h.s2 * h.s3 - h.s1 * h.c2 * h.c3 - h.s1 * h.c2 * h.c3),
      r * (h.s1 * h.s2 * h.s3 - h.s1 * h.c2 * h.c3 - h.s1 * h.c2 * h.c3),
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.s2 * h.c3 - h.s1 * h.c2 * h.s3),
      r * (h.s1 * h.s2 * h.s3 - h.c1 * h.s2 * h.c3 - h.c1 * h.c2 * h.c3),
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.s2 * h.c3 - h.c1 * h.s2 * h.s3),
      r * (h.c1 * h.c2 * h.c3 - h.s1 * h.c2 * h.s3 - h.c1 * h.s2 * h.s3),
      r * (h.s1 * h.c2 * h.c3 + h.c1 * h.s2 * h.c3 + h.c1 * h.c2 * h.s3),
  };
}

/// Per-coefficient agreement between a published table and the amplitudes of
/// product_transform(reference, angles), over a fixed set of probe angles.
struct TableComparison {
  StateId reference;
  std::array<double, 8> max_deviation{};  // over all probe angles
  std::vector<int> mismatches;            // 1-based coefficient labels
};

inline constexpr double kTableTolerance = 1e-12;

/// Deterministic, generic probe angles (no coincidental zeros of C or S).
inline const std::vector<WignerAngles>& table_probe_angles() {
  static const std::vector<WignerAngles> probes{
      {0.3, 0.5, 0.7},   {1.1, 2.3, 0.4},  {2.9, 0.8, 5.1},
      {4.2, 3.7, 1.9},   {5.5, 1.3, 2.6},  {0.9, 4.8, 3.3},
  };
  return probes;
}

template <class Table>
TableComparison compare_table(Table&& table, StateId reference) {
  TableComparison out{reference, {}, {}};
  const PureState initial = make_state(reference);
  for (const WignerAngles& a : table_probe_angles()) {
    const ComplexVector printed = table(a);
    const PureState derived = product_transform(initial, a);
    for (std::size_t k = 0; k < 8; ++k)
      out.max_deviation[k] = std::max(out.max_deviation[k], std::abs(printed[k] - derived[k]));
  }
  for (std::size_t k = 0; k < 8; ++k)
    if (out.max_deviation[k] > kTableTolerance) out.mismatches.push_back(static_cast<int>(k) + 1);
  return out;
}

/// Published A table against the transformed GHZ+ state.
inline TableComparison compare_published_ghz() {
  return compare_table(published_table_ghz, StateId::ghz_plus);
}

/// Published B table against the transformed `reference` state. Against w
/// every coefficient disagrees; the table is the image of w_prime, with
/// B2, B3 and B5 misprinted.
inline TableComparison compare_published_w(StateId reference = StateId::w_prime) {
  return compare_table(published_table_w, reference);
}

inline const std::vector<int> kKnownGhzTableErrata{5};
inline const std::vector<int> kKnownWTableErrata{2, 3, 5};

}  // namespace lorentzqi
