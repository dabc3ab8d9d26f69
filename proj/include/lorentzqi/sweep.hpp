#pragma once

// Parameter sweeps over the Wigner angles and CSV output.

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "lorentzqi/angles.hpp"
#include "lorentzqi/errors.hpp"
#include "lorentzqi/lorentz.hpp"
#include "lorentzqi/measures.hpp"
#include "lorentzqi/states.hpp"

namespace lorentzqi {

inline constexpr std::size_t kDefaultGridPoints = 257;

/// Angle token: "<float>" in radians or "<float>pi" in units of pi ("pi"
/// alone means one pi).
inline double parse_angle(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> double {
    throw usage_error("malformed angle '" + std::string(original) + "'");
  };
  double scale = 1.0;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
    scale = std::numbers::pi;
    text.remove_suffix(2);
    if (text.empty() || text == "+") return scale;
    if (text == "-") return -scale;
  }
  if (text.empty()) return fail();
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) return fail();
  return v * scale;
}

/// Inclusive linear grid; count == 1 yields just `start`.
struct SweepGrid {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  static SweepGrid single(double v) { return {v, v, 1}; }

  void validate() const {
    if (count < 1) throw usage_error("grid count must be at least 1");
    if (!(stop >= start)) throw usage_error("grid stop must not be below start");
  }

  double at(std::size_t i) const {
    if (count == 1) return start;
    if (i + 1 == count) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
};

/// "start:stop:count", "start:stop" (257 points) or a single angle.
inline SweepGrid parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const std::size_t colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  SweepGrid g;
  switch (parts.size()) {
    case 1: g = SweepGrid::single(parse_angle(parts[0])); break;
    case 2: g = {parse_angle(parts[0]), parse_angle(parts[1]), kDefaultGridPoints}; break;
    case 3: {
      g.start = parse_angle(parts[0]);
      g.stop = parse_angle(parts[1]);
      std::size_t n = 0;
      const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
      if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size())
        throw usage_error("malformed grid count '" + std::string(parts[2]) + "'");
      g.count = n;
      break;
    }
    default: throw usage_error("malformed grid '" + std::string(text) + "'");
  }
  g.validate();
  return g;
}

enum class MeasureId {
  fidelity_gplus,
  fidelity_gminus,
  fidelity_w,
  fidelity_wprime,
  avg_capacity,
  three_tangle,
  concurrence_ab,
  concurrence_ac,
  concurrence_bc,
  entropy_a,
};

inline constexpr std::array<MeasureId, 10> kAllMeasures{
    MeasureId::fidelity_gplus, MeasureId::fidelity_gminus, MeasureId::fidelity_w,
    MeasureId::fidelity_wprime, MeasureId::avg_capacity,   MeasureId::three_tangle,
    MeasureId::concurrence_ab, MeasureId::concurrence_ac,  MeasureId::concurrence_bc,
    MeasureId::entropy_a};

inline std::string_view to_string(MeasureId m) {
  switch (m) {
    case MeasureId::fidelity_gplus: return "fidelity_gplus";
    case MeasureId::fidelity_gminus: return "fidelity_gminus";
    case MeasureId::fidelity_w: return "fidelity_w";
    case MeasureId::fidelity_wprime: return "fidelity_wprime";
    case MeasureId::avg_capacity: return "avg_capacity";
    case MeasureId::three_tangle: return "three_tangle";
    case MeasureId::concurrence_ab: return "concurrence_ab";
    case MeasureId::concurrence_ac: return "concurrence_ac";
    case MeasureId::concurrence_bc: return "concurrence_bc";
    case MeasureId::entropy_a: return "entropy_a";
  }
  return "?";
}

inline MeasureId parse_measure_id(std::string_view text) {
  for (const MeasureId m : kAllMeasures)
    if (to_string(m) == text) return m;
  throw usage_error("unknown measure '" + std::string(text) + "'");
}

/// Comma-separated measure list.
inline std::vector<MeasureId> parse_measure_list(std::string_view text) {
  std::vector<MeasureId> out;
  for (std::size_t pos = 0;;) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(parse_measure_id(
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

enum class SweepMode { pure, momentum_traced };

enum class Axis { omega1 = 0, omega2 = 1, omega3 = 2 };

inline std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::omega1: return "omega1";
    case Axis::omega2: return "omega2";
    case Axis::omega3: return "omega3";
  }
  return "?";
}

inline Axis parse_axis(std::string_view text) {
  for (const Axis a : {Axis::omega1, Axis::omega2, Axis::omega3})
    if (to_string(a) == text) return a;
  throw usage_error("unknown axis '" + std::string(text) + "'");
}

/// `source` drives `follower`: the follower takes the source's value at
/// every grid point.
struct AxisTie {
  Axis source;
  Axis follower;
};

/// "omega1=omega2" ties omega2 to omega1.
inline AxisTie parse_tie(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw usage_error("malformed tie '" + std::string(text) + "'");
  return {parse_axis(text.substr(0, eq)), parse_axis(text.substr(eq + 1))};
}

struct SweepConfig {
  StateId state = StateId::ghz_plus;
  SweepMode mode = SweepMode::pure;
  MomentumConfig momentum{};
  std::array<std::optional<SweepGrid>, 3> axes{};  // unset free axes sit at 0
  std::vector<AxisTie> ties;
  std::vector<MeasureId> measures;
  std::string label_suffix;  // appended to every measure label, e.g. ".pure"
};

struct MeasureRecord {
  StateId state = StateId::ghz_plus;
  double alpha = 0.0;
  WignerAngles angles{};
  std::string measure;
  double value = 0.0;
};

/// Evaluates one measure of a pure three-qubit spin state.
inline double evaluate(MeasureId m, const PureState& psi) {
  switch (m) {
    case MeasureId::fidelity_gplus: return fidelity_pure(make_state(StateId::ghz_plus), psi);
    case MeasureId::fidelity_gminus: return fidelity_pure(make_state(StateId::ghz_minus), psi);
    case MeasureId::fidelity_w: return fidelity_pure(make_state(StateId::w), psi);
    case MeasureId::fidelity_wprime: return fidelity_pure(make_state(StateId::w_prime), psi);
    case MeasureId::three_tangle: return three_tangle(psi).three_tangle;
    default: break;
  }
  const DensityOperator rho = to_density(psi);
  switch (m) {
    case MeasureId::avg_capacity: return average_capacity(rho).average;
    case MeasureId::concurrence_ab: return concurrence(reduce(rho, {0, 1}));
    case MeasureId::concurrence_ac: return concurrence(reduce(rho, {0, 2}));
    case MeasureId::concurrence_bc: return concurrence(reduce(rho, {1, 2}));
    case MeasureId::entropy_a: return von_neumann_entropy(reduce(rho, {0}));
    default: break;
  }
  throw usage_error("measure not available for pure states");
}

/// Evaluates one measure of a mixed three-qubit spin state. The three-tangle
/// is defined for pure states only.
inline double evaluate(MeasureId m, const DensityOperator& rho) {
  switch (m) {
    case MeasureId::fidelity_gplus: return fidelity_vs_target(rho, make_state(StateId::ghz_plus));
    case MeasureId::fidelity_gminus: return fidelity_vs_target(rho, make_state(StateId::ghz_minus));
    case MeasureId::fidelity_w: return fidelity_vs_target(rho, make_state(StateId::w));
    case MeasureId::fidelity_wprime: return fidelity_vs_target(rho, make_state(StateId::w_prime));
    case MeasureId::avg_capacity: return average_capacity(rho).average;
    case MeasureId::concurrence_ab: return concurrence(reduce(rho, {0, 1}));
    case MeasureId::concurrence_ac: return concurrence(reduce(rho, {0, 2}));
    case MeasureId::concurrence_bc: return concurrence(reduce(rho, {1, 2}));
    case MeasureId::entropy_a: return von_neumann_entropy(reduce(rho, {0}));
    case MeasureId::three_tangle: break;
  }
  throw usage_error("three_tangle is only defined in pure mode");
}

namespace detail {

/// For each axis, the free axis whose value it takes (itself when free).
inline std::array<std::size_t, 3> resolve_ties(const SweepConfig& cfg) {
  std::array<std::size_t, 3> parent{0, 1, 2};
  std::array<bool, 3> is_follower{};
  for (const AxisTie& t : cfg.ties) {
    const auto s = static_cast<std::size_t>(t.source), f = static_cast<std::size_t>(t.follower);
    if (s == f) throw usage_error("cannot tie " + std::string(to_string(t.follower)) + " to itself");
    if (is_follower[f])
      throw usage_error(std::string(to_string(t.follower)) + " is tied more than once");
    if (cfg.axes[f].has_value())
      throw usage_error(std::string(to_string(t.follower)) +
                        " is tied and must not be given its own grid");
    is_follower[f] = true;
    parent[f] = s;
  }
  std::array<std::size_t, 3> root{};
  for (std::size_t a = 0; a < 3; ++a) {
    std::size_t r = a;
    for (int hops = 0; parent[r] != r; ++hops) {
      if (hops > 3) throw usage_error("axis ties form a cycle");
      r = parent[r];
    }
    root[a] = r;
  }
  return root;
}

}  // namespace detail

/// Checks a configuration without evaluating anything.
inline void validate(const SweepConfig& cfg) {
  if (cfg.measures.empty()) throw usage_error("no measures requested");
  if (!std::isfinite(cfg.momentum.alpha)) throw usage_error("alpha must be finite");
  for (const auto& g : cfg.axes)
    if (g) g->validate();
  if (cfg.mode == SweepMode::momentum_traced)
    for (const MeasureId m : cfg.measures)
      if (m == MeasureId::three_tangle)
        throw usage_error("three_tangle is only defined in pure mode");
  detail::resolve_ties(cfg);
}

/// Number of grid points: product of the free axes' counts.
inline std::size_t grid_size(const SweepConfig& cfg) {
  const auto root = detail::resolve_ties(cfg);
  std::size_t n = 1;
  for (std::size_t a = 0; a < 3; ++a)
    if (root[a] == a && cfg.axes[a]) n *= cfg.axes[a]->count;
  return n;
}

/// Visits every record in row-major grid order (omega1 outermost, omega3
/// innermost; measures in requested order within a grid point).
inline void run_sweep(const SweepConfig& cfg, const std::function<void(MeasureRecord&&)>& sink) {
  validate(cfg);
  const auto root = detail::resolve_ties(cfg);
  std::vector<std::size_t> free_axes;
  for (std::size_t a = 0; a < 3; ++a)
    if (root[a] == a) free_axes.push_back(a);

  auto count_of = [&](std::size_t a) { return cfg.axes[a] ? cfg.axes[a]->count : std::size_t{1}; };
  auto value_of = [&](std::size_t a, std::size_t i) { return cfg.axes[a] ? cfg.axes[a]->at(i) : 0.0; };

  const PureState initial = make_state(cfg.state);
  const std::size_t total = grid_size(cfg);
  std::array<std::size_t, 3> idx{};
  for (std::size_t point = 0; point < total; ++point) {
    std::size_t rem = point;
    for (auto it = free_axes.rbegin(); it != free_axes.rend(); ++it) {
      idx[*it] = rem % count_of(*it);
      rem /= count_of(*it);
    }
    std::array<double, 3> om{};
    for (std::size_t a = 0; a < 3; ++a) om[a] = value_of(root[a], idx[root[a]]);
    const WignerAngles angles{om[0], om[1], om[2]};

    std::optional<PureState> pure;
    std::optional<DensityOperator> mixed;
    if (cfg.mode == SweepMode::pure) {
      pure = product_transform(initial, angles);
    } else {
      mixed = momentum_traced_channel(initial, angles, cfg.momentum);
    }
    for (const MeasureId m : cfg.measures) {
      const double v = pure ? evaluate(m, *pure) : evaluate(m, *mixed);
      if (!std::isfinite(v))
        throw numeric_error("non-finite " + std::string(to_string(m)) + " at grid point " +
                            std::to_string(point));
      sink(MeasureRecord{cfg.state, cfg.mode == SweepMode::pure ? 0.0 : cfg.momentum.alpha, angles,
                         std::string(to_string(m)) + cfg.label_suffix, v});
    }
  }
}

inline std::vector<MeasureRecord> run_sweep(const SweepConfig& cfg) {
  std::vector<MeasureRecord> out;
  out.reserve(grid_size(cfg) * cfg.measures.size());
  run_sweep(cfg, [&](MeasureRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

inline constexpr std::string_view kCsvHeader = "state,alpha,omega1,omega2,omega3,measure,value";

/// 12 significant digits, shortest general form, '.' separator regardless of
/// locale. Negative zero prints as 0.
inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc{}) throw numeric_error("cannot format number");
  return std::string(buf, ptr);
}

inline std::string csv_row(const MeasureRecord& r) {
  std::string s;
  s.reserve(96);
  s += to_string(r.state);
  for (const double v : {r.alpha, r.angles.omega1, r.angles.omega2, r.angles.omega3}) {
    s += ',';
    s += format_number(v);
  }
  s += ',';
  s += r.measure;
  s += ',';
  s += format_number(r.value);
  return s;
}

/// Header plus one LF-terminated row per record; returns the row count.
inline std::size_t write_csv(const std::vector<MeasureRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const MeasureRecord& r : records) out << csv_row(r) << '\n';
  return records.size();
}

inline std::size_t write_csv(const std::vector<MeasureRecord>& records, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw io_error("cannot open '" + path + "' for writing");
  const std::size_t n = write_csv(records, f);
  f.flush();
  if (!f) throw io_error("write to '" + path + "' failed");
  return n;
}

// Figure presets.

inline constexpr std::array<std::string_view, 10> kFigureIds{"1a", "1b", "1c", "2a", "2b",
                                                            "2c", "3a", "3b", "4a", "4b"};

/// Third-particle angles of the curve families in figures 3 and 4.
inline const std::array<double, 4>& observer_angles() {
  static const std::array<double, 4> v{0.0, std::numbers::pi / 3, std::numbers::pi / 4,
                                       std::numbers::pi / 6};
  return v;
}

inline constexpr double kFigureTracedAlpha = std::numbers::pi / 4;

/// Sweep configurations reproducing one figure's data; `points` is the grid
/// resolution of every swept axis.
inline std::vector<SweepConfig> figure_configs(std::string_view id,
                                               std::size_t points = kDefaultGridPoints) {
  const SweepGrid full{0.0, 2.0 * std::numbers::pi, points};
  auto surface = [&](StateId s, MeasureId m) {
    SweepConfig c;
    c.state = s;
    c.axes[0] = full;
    c.axes[2] = full;
    c.ties = {{Axis::omega1, Axis::omega2}};
    c.measures = {m};
    return std::vector<SweepConfig>{c};
  };
  auto equal_angles = [&](StateId s, MeasureId m) {
    SweepConfig c;
    c.state = s;
    c.axes[0] = full;
    c.ties = {{Axis::omega1, Axis::omega2}, {Axis::omega1, Axis::omega3}};
    c.measures = {m};
    return std::vector<SweepConfig>{c};
  };
  auto families = [&](StateId s, std::vector<MeasureId> pure_measures,
                      std::vector<MeasureId> traced_measures) {
    std::vector<SweepConfig> out;
    for (const double o3 : observer_angles()) {
      SweepConfig c;
      c.state = s;
      c.axes[0] = full;
      c.axes[2] = SweepGrid::single(o3);
      c.ties = {{Axis::omega1, Axis::omega2}};
      c.measures = pure_measures;
      c.label_suffix = ".pure";
      out.push_back(c);
      c.mode = SweepMode::momentum_traced;
      c.momentum = {kFigureTracedAlpha, BranchConvention::opposite};
      c.measures = traced_measures;
      c.label_suffix = ".traced";
      out.push_back(c);
    }
    return out;
  };

  if (id == "1a") return surface(StateId::ghz_plus, MeasureId::fidelity_gplus);
  if (id == "1b") return surface(StateId::ghz_plus, MeasureId::fidelity_gminus);
  if (id == "1c") return equal_angles(StateId::ghz_plus, MeasureId::fidelity_gplus);
  if (id == "2a") return surface(StateId::w, MeasureId::fidelity_w);
  if (id == "2b") return surface(StateId::w, MeasureId::fidelity_wprime);
  if (id == "2c") return equal_angles(StateId::w, MeasureId::fidelity_w);
  if (id == "3a")
    return families(StateId::ghz_plus, {MeasureId::avg_capacity}, {MeasureId::avg_capacity});
  if (id == "3b") return families(StateId::w, {MeasureId::avg_capacity}, {MeasureId::avg_capacity});
  if (id == "4a")
    return families(StateId::ghz_plus, {MeasureId::three_tangle},
                    {MeasureId::concurrence_ab, MeasureId::concurrence_ac});
  if (id == "4b")
    return families(StateId::w, {MeasureId::three_tangle},
                    {MeasureId::concurrence_ab, MeasureId::concurrence_ac});
  throw usage_error("unknown figure '" + std::string(id) + "'");
}

inline std::vector<MeasureRecord> run_figure(std::string_view id,
                                             std::size_t points = kDefaultGridPoints) {
  std::vector<MeasureRecord> out;
  for (const SweepConfig& c : figure_configs(id, points))
    run_sweep(c, [&](MeasureRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

}  // namespace lorentzqi
