#pragma once

// Fidelity, channel capacity and entanglement measures. Logarithms are base 2.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lorentzqi/errors.hpp"
#include "lorentzqi/qmath.hpp"
#include "lorentzqi/states.hpp"

namespace lorentzqi {

/// |<a|b>|^2.
inline double fidelity_pure(const PureState& a, const PureState& b) {
  if (a.qubit_count() != b.qubit_count())
    throw usage_error("fidelity_pure: qubit counts differ");
  return std::clamp(std::norm(inner(a.amplitudes(), b.amplitudes())), 0.0, 1.0);
}

/// <target|rho|target>.
inline double fidelity_vs_target(const DensityOperator& rho, const PureState& target) {
  if (rho.qubit_count() != target.qubit_count())
    throw usage_error("fidelity_vs_target: qubit counts differ");
  const ComplexVector& t = target.amplitudes();
  return std::clamp(inner(t, rho.matrix() * t).real(), 0.0, 1.0);
}

/// -sum lambda log2 lambda over the spectrum, 0 log 0 = 0.
inline double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (const double raw : eigvals_hermitian(rho.matrix())) {
    const double l = clamp_nonnegative(raw);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return std::max(s, 0.0);
}

inline constexpr double kCapacityFloor = 0.0;
inline constexpr double kCapacityCeiling = 2.0;

struct CapacityValue {
  double bits = 0.0;
  double raw = 0.0;      // before clamping to [0, 2]
  bool clamped = false;  // raw left [0, 2] by more than rounding
};

/// Which qubit of a pair is traced out to form the marginal rho_i.
enum class PairSide { first, second };

/// 1 + S(rho_i) - S(rho_ij), with log2(D) = 1 for a qubit marginal.
/// `trace_out` names the qubit removed to obtain rho_i.
inline CapacityValue pair_capacity(const DensityOperator& rho_ij,
                                   PairSide trace_out = PairSide::second) {
  if (rho_ij.qubit_count() != 2)
    throw usage_error("pair_capacity: expected a two-qubit operator");
  const DensityOperator marginal =
      reduce(rho_ij, {trace_out == PairSide::second ? std::size_t{0} : std::size_t{1}});
  CapacityValue out;
  out.raw = 1.0 + von_neumann_entropy(marginal) - von_neumann_entropy(rho_ij);
  out.bits = std::clamp(out.raw, kCapacityFloor, kCapacityCeiling);
  out.clamped = out.raw < kCapacityFloor - 1e-9 || out.raw > kCapacityCeiling + 1e-9;
  return out;
}

struct CapacityBreakdown {
  double pair_ab = 0.0;
  double pair_ac = 0.0;
  double pair_bc = 0.0;
  double average = 0.0;
  bool clamped = false;
};

/// Pair capacities of the three two-party reductions and their mean. The
/// marginal for pair ij is rho_i (first listed party).
inline CapacityBreakdown average_capacity(const DensityOperator& rho_abc) {
  if (rho_abc.qubit_count() != 3)
    throw usage_error("average_capacity: expected a three-qubit operator");
  const CapacityValue ab = pair_capacity(reduce(rho_abc, {0, 1}));
  const CapacityValue ac = pair_capacity(reduce(rho_abc, {0, 2}));
  const CapacityValue bc = pair_capacity(reduce(rho_abc, {1, 2}));
  CapacityBreakdown out;
  out.pair_ab = ab.bits;
  out.pair_ac = ac.bits;
  out.pair_bc = bc.bits;
  out.average = (ab.bits + ac.bits + bc.bits) / 3.0;
  out.clamped = ab.clamped || ac.clamped || bc.clamped;
  return out;
}

/// rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
inline ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  static const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  return yy * conjugate(rho) * yy;
}

inline constexpr double kRankTolerance = 1e-14;

namespace detail {

/// Concurrence and its square from a weighted eigen-decomposition
/// rho = W W^dagger: the lambdas of Wootters' formula are the singular values
/// of the complex symmetric matrix tau = W^T (sigma_y x sigma_y) W. Weights
/// below kRankTolerance are rounding noise and are dropped, which keeps
/// rank-deficient inputs free of square roots of tiny eigenvalues.
inline std::pair<double, double> concurrence_parts(const DensityOperator& rho) {
  if (rho.qubit_count() != 2) throw usage_error("concurrence: expected a two-qubit operator");
  const EigenSystem es = eig_hermitian(rho.matrix());
  std::vector<ComplexVector> w;
  for (std::size_t k = 0; k < 4; ++k) {
    if (es.values[k] <= kRankTolerance) continue;
    const double scale = std::sqrt(es.values[k]);
    ComplexVector col(4);
    for (std::size_t i = 0; i < 4; ++i) col[i] = scale * es.vectors(i, k);
    w.push_back(std::move(col));
  }
  const std::size_t r = w.size();
  // sigma_y x sigma_y maps |00>,|01>,|10>,|11> to -|11>,|10>,|01>,-|00>.
  auto flip_product = [](const ComplexVector& a, const ComplexVector& b) {
    return -a[0] * b[3] + a[1] * b[2] + a[2] * b[1] - a[3] * b[0];
  };
  ComplexMatrix tau(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) tau(i, j) = flip_product(w[i], w[j]);

  double c = 0.0, c_sq = 0.0;
  if (r == 1) {
    c = std::abs(tau(0, 0));
    c_sq = c * c;
  } else if (r == 2) {
    // (s1 - s2)^2 = s1^2 + s2^2 - 2 s1 s2 = ||tau||_F^2 - 2 |det tau|.
    double frob = 0.0;
    for (const complex& x : tau.data()) frob += std::norm(x);
    c_sq = std::max(0.0, frob - 2.0 * std::abs(det2(tau)));
    c = std::sqrt(c_sq);
  } else if (r > 2) {
    const auto s2 = eigvals_hermitian(hermitian_part(adjoint(tau) * tau));
    c = std::sqrt(clamp_nonnegative(s2[0]));
    for (std::size_t k = 1; k < s2.size(); ++k) c -= std::sqrt(clamp_nonnegative(s2[k]));
    c = std::max(c, 0.0);
    c_sq = c * c;
  }
  return {std::min(c, 1.0), std::min(c_sq, 1.0)};
}

}  // namespace detail

/// Wootters concurrence.
inline double concurrence(const DensityOperator& rho) { return detail::concurrence_parts(rho).first; }

inline double concurrence_squared(const DensityOperator& rho) {
  return detail::concurrence_parts(rho).second;
}

/// 4 det rho_pivot for a three-qubit pure state.
inline double one_tangle_squared(const PureState& psi, std::size_t pivot = 0) {
  if (psi.qubit_count() != 3) throw usage_error("one_tangle: expected 3 qubits");
  if (pivot > 2) throw usage_error("one_tangle: pivot out of range");
  const ComplexMatrix rho = outer(psi.amplitudes(), psi.amplitudes());
  const std::size_t keep[] = {pivot};
  return std::clamp(4.0 * det2(partial_trace(rho, 3, keep)).real(), 0.0, 1.0);
}

inline double one_tangle(const PureState& psi, std::size_t pivot = 0) {
  return std::sqrt(one_tangle_squared(psi, pivot));
}

struct TangleBreakdown {
  double one_tangle_sq = 0.0;  // C^2 between pivot and the other two
  double c12_sq = 0.0;         // pivot with the lower-indexed remaining qubit
  double c13_sq = 0.0;         // pivot with the higher-indexed remaining qubit
  double three_tangle = 0.0;
};

/// C^2_{p(jk)} - C^2_{pj} - C^2_{pk} with p = pivot.
inline TangleBreakdown three_tangle(const PureState& psi, std::size_t pivot = 0) {
  if (psi.qubit_count() != 3) throw usage_error("three_tangle: expected 3 qubits");
  if (pivot > 2) throw usage_error("three_tangle: pivot out of range");
  std::array<std::size_t, 2> others{};
  for (std::size_t q = 0, k = 0; q < 3; ++q)
    if (q != pivot) others[k++] = q;

  const DensityOperator rho = to_density(psi);
  auto pair = [&](std::size_t a, std::size_t b) {
    return reduce(rho, {std::min(a, b), std::max(a, b)});
  };
  TangleBreakdown t;
  t.one_tangle_sq = one_tangle_squared(psi, pivot);
  t.c12_sq = concurrence_squared(pair(pivot, others[0]));
  t.c13_sq = concurrence_squared(pair(pivot, others[1]));
  t.three_tangle = t.one_tangle_sq - t.c12_sq - t.c13_sq;
  return t;
}

}  // namespace lorentzqi
