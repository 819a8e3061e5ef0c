#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "isingdyn/errors.hpp"
#include "isingdyn/format.hpp"
#include "isingdyn/graph.hpp"
#include "isingdyn/phase.hpp"
#include "isingdyn/rng.hpp"

namespace isingdyn {

enum class ModelKind { OIM, DIM };

inline const char* model_name(ModelKind m) { return m == ModelKind::DIM ? "dim" : "oim"; }

inline ModelKind model_from_name(const std::string& s) {
  if (s == "dim" || s == "DIM") return ModelKind::DIM;
  if (s == "oim" || s == "OIM") return ModelKind::OIM;
  throw input_error("unknown model \"" + s + "\", expected dim or oim");
}

/// Oscillator phases in radians, wrapped to [0, 2pi).
struct PhaseState {
  std::vector<double> phi;
  double t = 0.0;

  PhaseState() = default;
  PhaseState(std::vector<double> p, double time = 0.0) : phi(std::move(p)), t(time) {}
  int size() const { return static_cast<int>(phi.size()); }
};

/// Coupling strength K (constant) plus a piecewise-linear SHI ramp K_s(t).
/// K_s holds its boundary value outside the breakpoint range.
struct AnnealSchedule {
  double K = 1.0;
  std::vector<std::pair<double, double>> ks_points;  // (t, K_s), t strictly increasing
  double total_time = 0.0;

  static AnnealSchedule linear_ramp(double k, double ks_max, double t_end, double hold = 0.0) {
    AnnealSchedule s;
    s.K = k;
    s.total_time = t_end;
    if (hold > 0.0) {
      if (hold >= t_end) throw input_error("schedule hold time must be shorter than the horizon");
      s.ks_points = {{0.0, 0.0}, {hold, 0.0}, {t_end, ks_max}};
    } else {
      s.ks_points = {{0.0, 0.0}, {t_end, ks_max}};
    }
    s.validate();
    return s;
  }

  static AnnealSchedule constant(double k, double ks, double t_end) {
    AnnealSchedule s;
    s.K = k;
    s.total_time = t_end;
    s.ks_points = {{0.0, ks}};
    s.validate();
    return s;
  }

  void validate() const {
    if (!(K > 0.0)) throw input_error("schedule: K must be positive");
    if (!(total_time > 0.0)) throw input_error("schedule: total_time must be positive");
    if (ks_points.empty()) throw input_error("schedule: at least one K_s breakpoint required");
    for (std::size_t i = 0; i < ks_points.size(); ++i) {
      if (ks_points[i].second < 0.0) throw input_error("schedule: K_s must be nonnegative");
      if (i > 0 && !(ks_points[i].first > ks_points[i - 1].first))
        throw input_error("schedule: breakpoint times must be strictly increasing");
    }
  }

  double ks_at(double t) const {
    if (t <= ks_points.front().first) return ks_points.front().second;
    if (t >= ks_points.back().first) return ks_points.back().second;
    for (std::size_t i = 1; i < ks_points.size(); ++i) {
      if (t <= ks_points[i].first) {
        const auto [t0, v0] = ks_points[i - 1];
        const auto [t1, v1] = ks_points[i];
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
      }
    }
    return ks_points.back().second;
  }
};

struct IntegratorConfig {
  double dt = 0.01;
  double noise_amplitude = 0.05;  // rad per sqrt(time)
  std::uint64_t seed = 0;
  int record_stride = 1;

  void validate() const {
    if (!(dt > 0.0)) throw input_error("integrator: dt must be positive");
    if (noise_amplitude < 0.0) throw input_error("integrator: noise amplitude must be nonnegative");
    if (record_stride < 1) throw input_error("integrator: record stride must be >= 1");
  }
};

struct Trajectory {
  ModelKind model{};
  std::vector<double> times;
  std::vector<std::vector<double>> phases;
  std::vector<double> ks_values;
  std::vector<double> energies;
  PhaseState final_state;
};

/// Phase velocities. OIM couples through sin(phi_i - phi_j), DIM through
/// sin(phi_i + phi_j); both carry the -K_s sin(2 phi_i) SHI term. The sum
/// runs over graph edges only.
inline std::vector<double> model_rhs(ModelKind model, const CouplingMatrix& J,
                                     const std::vector<double>& phi, double K, double Ks) {
  const int n = J.n;
  if (static_cast<int>(phi.size()) != n)
    throw input_error("model_rhs: phase vector has " + std::to_string(phi.size()) +
                      " entries, couplings expect " + std::to_string(n));
  const int sign = (model == ModelKind::DIM) ? +1 : -1;
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = detail::quarter_index(phi[static_cast<std::size_t>(i)]);

  std::vector<double> dphi(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const auto& [j, jij] : J.adj[static_cast<std::size_t>(i)])
      acc += jij * detail::pair_sin(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)],
                                    q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)], sign);
    dphi[static_cast<std::size_t>(i)] =
        -K * acc - Ks * detail::double_sin(phi[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(i)]);
  }
  return dphi;
}

inline std::vector<double> model_rhs(ModelKind model, const CouplingMatrix& J,
                                     const PhaseState& state, double K, double Ks) {
  return model_rhs(model, J, state.phi, K, Ks);
}

/// E = -K sum_{i,j != i} J_ij cos(phi_i -/+ phi_j) - K_s sum_i cos(2 phi_i);
/// the double sum counts each edge twice.
inline double model_energy(ModelKind model, const CouplingMatrix& J,
                           const std::vector<double>& phi, double K, double Ks) {
  const int n = J.n;
  if (static_cast<int>(phi.size()) != n)
    throw input_error("model_energy: phase vector has " + std::to_string(phi.size()) +
                      " entries, couplings expect " + std::to_string(n));
  const int sign = (model == ModelKind::DIM) ? +1 : -1;
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = detail::quarter_index(phi[static_cast<std::size_t>(i)]);

  double pair_term = 0.0;
  double shi_term = 0.0;
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, jij] : J.adj[static_cast<std::size_t>(i)])
      if (j > i)
        pair_term += jij * detail::pair_cos(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)],
                                            q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)], sign);
    shi_term += detail::double_cos(phi[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(i)]);
  }
  return -2.0 * K * pair_term - Ks * shi_term;
}

inline double model_energy(ModelKind model, const CouplingMatrix& J, const PhaseState& state,
                           double K, double Ks) {
  return model_energy(model, J, state.phi, K, Ks);
}

/// Model energy of the {0,pi} embedding of a spin configuration:
/// 2K*H(s) - N*K_s. With K = 1/2 this is the Ising energy shifted by -N*K_s.
inline double fixed_point_energy(const CouplingMatrix& J, const SpinConfig& s, double K, double Ks) {
  return 2.0 * K * ising_energy(J, s) - static_cast<double>(J.n) * Ks;
}

/// dE/dt along the noise-free flow: -2 sum_k (dphi_k/dt)^2, never positive.
inline double energy_rate(ModelKind model, const CouplingMatrix& J, const std::vector<double>& phi,
                          double K, double Ks) {
  const std::vector<double> rhs = model_rhs(model, J, phi, K, Ks);
  double s = 0.0;
  for (double v : rhs) s += v * v;
  return -2.0 * s;
}

/// sigma_i = +1 when the wrapped phase lies within pi/2 of 0 (mod 2pi),
/// else -1. A distance of exactly pi/2 resolves to +1.
inline SpinConfig round_to_spins(const std::vector<double>& phi) {
  SpinConfig s;
  s.spins.reserve(phi.size());
  for (double p : phi) {
    const double w = wrap_phase(p);
    s.spins.push_back((w <= kHalfPi || w >= 3.0 * kHalfPi) ? +1 : -1);
  }
  return s;
}

inline SpinConfig round_to_spins(const PhaseState& state) { return round_to_spins(state.phi); }

/// Euler-Maruyama: phi <- wrap(phi + rhs*dt + sigma*sqrt(dt)*zeta) with the
/// seeded noise stream owned by this call. Snapshots every record_stride
/// steps plus the final state.
inline Trajectory integrate(ModelKind model, const CouplingMatrix& J, const PhaseState& phi0,
                            const AnnealSchedule& sched, const IntegratorConfig& cfg) {
  sched.validate();
  cfg.validate();
  if (phi0.size() != J.n)
    throw input_error("integrate: initial state has " + std::to_string(phi0.size()) +
                      " phases, couplings expect " + std::to_string(J.n));
  const long long n_steps = std::llround(sched.total_time / cfg.dt);
  if (n_steps < 1) throw input_error("integrate: horizon shorter than one step");

  std::vector<double> phi = phi0.phi;
  for (double& p : phi) p = wrap_phase(p);

  NormalStream noise(cfg.seed);
  const double sig = cfg.noise_amplitude * std::sqrt(cfg.dt);

  Trajectory traj;
  traj.model = model;
  const std::size_t reserve = static_cast<std::size_t>(n_steps / cfg.record_stride) + 2;
  traj.times.reserve(reserve);
  traj.phases.reserve(reserve);
  traj.ks_values.reserve(reserve);
  traj.energies.reserve(reserve);

  auto record = [&](long long step) {
    const double t = static_cast<double>(step) * cfg.dt;
    const double ks = sched.ks_at(t);
    traj.times.push_back(t);
    traj.ks_values.push_back(ks);
    traj.energies.push_back(model_energy(model, J, phi, sched.K, ks));
    traj.phases.push_back(phi);
  };

  for (long long step = 0; step < n_steps; ++step) {
    if (step % cfg.record_stride == 0) record(step);
    const double t = static_cast<double>(step) * cfg.dt;
    const double ks = sched.ks_at(t);
    const std::vector<double> rhs = model_rhs(model, J, phi, sched.K, ks);
    for (int i = 0; i < J.n; ++i) {
      double next = phi[static_cast<std::size_t>(i)] + rhs[static_cast<std::size_t>(i)] * cfg.dt;
      if (sig > 0.0) next += sig * noise.next();
      if (!std::isfinite(next))
        throw numerical_error("integrate: non-finite phase for oscillator " + std::to_string(i) +
                              " at step " + std::to_string(step) + "; reduce dt");
      phi[static_cast<std::size_t>(i)] = wrap_phase(next);
    }
  }
  record(n_steps);
  traj.final_state = PhaseState{phi, static_cast<double>(n_steps) * cfg.dt};
  return traj;
}

/// CSV columns: t, Ks, E, phi_0 ... phi_{n-1}.
inline void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
  os << "t,Ks,E";
  const std::size_t n = traj.phases.empty() ? 0 : traj.phases.front().size();
  for (std::size_t i = 0; i < n; ++i) os << ",phi_" << i;
  os << "\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    os << format_number(traj.times[k]) << "," << format_number(traj.ks_values[k]) << ","
       << format_number(traj.energies[k]);
    for (double p : traj.phases[k]) os << "," << format_number(p);
    os << "\n";
  }
}

}  // namespace isingdyn
