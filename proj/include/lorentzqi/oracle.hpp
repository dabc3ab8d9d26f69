#pragma once

// Slow reference computations for tests. Everything here works straight from
// the definitions (explicit matrix entries, index sums, the amplitude
// hyperdeterminant) and deliberately avoids the fast paths in qmath.hpp,
// lorentz.hpp and measures.hpp.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lorentzqi/angles.hpp"
#include "lorentzqi/errors.hpp"
#include "lorentzqi/states.hpp"

namespace lorentzqi::oracle {

/// Explicit 8x8 matrix of D(omega1) x D(omega2) x D(omega3), one entry at a
/// time, times the amplitude vector.
inline PureState oracle_transform(const PureState& psi, const WignerAngles& angles) {
  if (psi.qubit_count() != 3) throw usage_error("oracle_transform: expected 3 qubits");
  auto entry = [](int out_bit, int in_bit, double omega) {
    const double c = std::cos(omega / 2.0), s = std::sin(omega / 2.0);
    if (out_bit == in_bit) return c;
    return out_bit == 1 ? s : -s;  // <1|D|0> = S, <0|D|1> = -S
  };
  double m[8][8];
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      m[r][c] = entry((r >> 2) & 1, (c >> 2) & 1, angles.omega1) *
                entry((r >> 1) & 1, (c >> 1) & 1, angles.omega2) *
                entry(r & 1, c & 1, angles.omega3);
  ComplexVector out(8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) out[r] += m[r][c] * psi[c];
  return PureState(std::move(out));
}

/// Reduced operator by summing rho(r, c) over every pair of full indices
/// whose traced-out bits agree.
inline DensityOperator oracle_partial_trace(const DensityOperator& rho,
                                            const std::vector<std::size_t>& keep) {
  const std::size_t n = rho.qubit_count();
  const std::size_t dim = rho.dim();
  std::vector<bool> kept(n, false);
  for (const std::size_t q : keep) {
    if (q >= n) throw usage_error("oracle_partial_trace: qubit out of range");
    kept[q] = true;
  }
  auto bit = [n](std::size_t index, std::size_t q) { return (index >> (n - 1 - q)) & 1U; };
  auto reduced_index = [&](std::size_t index) {
    std::size_t r = 0;
    for (const std::size_t q : keep) r = 2 * r + bit(index, q);
    return r;
  };

  const std::size_t out_dim = std::size_t{1} << keep.size();
  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      bool traced_match = true;
      for (std::size_t q = 0; q < n && traced_match; ++q)
        if (!kept[q] && bit(r, q) != bit(c, q)) traced_match = false;
      if (traced_match) out(reduced_index(r), reduced_index(c)) += rho.matrix()(r, c);
    }
  return DensityOperator(std::move(out));
}

/// Three-tangle as 4 |d1 - 2 d2 + 4 d3| over the amplitudes a_ijk.
inline double oracle_three_tangle(const PureState& psi) {
  if (psi.qubit_count() != 3) throw usage_error("oracle_three_tangle: expected 3 qubits");
  auto a = [&](int i, int j, int k) { return psi[4 * i + 2 * j + k]; };
  const complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

/// Pure two-qubit concurrence |<psi| sigma_y x sigma_y |psi*>| = 2 |a00 a11 - a01 a10|.
inline double oracle_pure_concurrence(const PureState& psi) {
  if (psi.qubit_count() != 2) throw usage_error("oracle_pure_concurrence: expected 2 qubits");
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

// Random inputs for property tests.

inline constexpr std::uint64_t kDefaultSeed = 20131015;

/// Seed from LORENTZQI_SEED when set, otherwise a fixed default.
inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("LORENTZQI_SEED"); env != nullptr && *env != '\0')
    return std::stoull(env);
  return kDefaultSeed;
}

/// Haar-random pure state: i.i.d. standard complex Gaussians, normalized.
template <class Rng>
PureState random_pure_state(std::size_t qubits, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector a(std::size_t{1} << qubits);
  for (auto& x : a) x = complex(g(rng), g(rng));
  return PureState::normalized(std::move(a));
}

template <class Rng>
PureState random_product_state(std::size_t qubits, Rng& rng) {
  ComplexVector a{1.0};
  for (std::size_t q = 0; q < qubits; ++q) {
    const PureState one = random_pure_state(1, rng);
    ComplexVector next(a.size() * 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
      next[2 * i] = a[i] * one[0];
      next[2 * i + 1] = a[i] * one[1];
    }
    a = std::move(next);
  }
  return PureState::normalized(std::move(a));
}

template <class Rng>
WignerAngles random_angles(Rng& rng, double lo = 0.0, double hi = 2.0 * std::numbers::pi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double a = u(rng), b = u(rng), c = u(rng);
  return {a, b, c};
}

/// Random Hermitian n x n matrix with Gaussian entries.
template <class Rng>
ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Random density operator: convex mix of `rank` Haar-random pure states.
template <class Rng>
DensityOperator random_density(std::size_t qubits, std::size_t rank, Rng& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  const std::size_t dim = std::size_t{1} << qubits;
  ComplexMatrix m(dim, dim);
  std::vector<double> w(rank);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng));
  for (std::size_t k = 0; k < rank; ++k) {
    const PureState p = random_pure_state(qubits, rng);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) += (w[k] / total) * p[i] * std::conj(p[j]);
  }
  return DensityOperator(std::move(m));
}

}  // namespace lorentzqi::oracle
