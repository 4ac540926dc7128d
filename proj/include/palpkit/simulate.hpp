// Copyright 2026 The palpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "palpkit/contact.hpp"
#include "palpkit/errors.hpp"
#include "palpkit/phantom.hpp"
#include "palpkit/rng.hpp"

namespace palpkit {

enum class TrajectoryKind { QuasiStaticRamp, SinusoidPoint, SinusoidScan };

/// Commanded end-effector motion. All trajectories begin slightly above
/// the surface and drive the tip in along z; scans add lateral motion
/// after a point-palpation dwell. The robot tracks the command exactly
/// (tracking error is far below the sensing noise on the real rig), so
/// the commanded path doubles as the kinematic ground truth.
struct Trajectory {
  TrajectoryKind kind = TrajectoryKind::SinusoidPoint;
  double sample_period = 2e-3;  // [s]

  // QuasiStaticRamp: symmetric load/unload triangle.
  double ramp_speed = 50.0 / 60.0 * 1e-3;  // [m/s], 50 mm/min
  double max_depth = 2.2e-3;               // [m]

  // SinusoidPoint / SinusoidScan: d(t) = bias + amplitude sin(2 pi f t).
  double bias_depth = 4e-3;   // z_0 [m]
  double amplitude = 1e-3;    // z_a [m]
  double frequency = 2.0;     // omega [Hz]
  double duration = 20.0;     // palpation time after the approach [s]

  // Approach segment shared by the sinusoid trajectories.
  double approach_speed = 2e-3;     // [m/s]
  double approach_clearance = 1e-3; // start height above the surface [m]

  // SinusoidScan only.
  double dwell = 10.0;                       // point palpation before moving [s]
  std::array<double, 2> scan_direction{1.0, 0.0};
  double scan_speed = 4e-3;                  // [m/s]
  double scan_length = 60e-3;                // [m]

  std::array<double, 2> start_xy{0.0, 0.0};

  void validate() const {
    if (!(sample_period > 0.0)) throw ConfigError("trajectory: sample_period must be > 0");
    switch (kind) {
      case TrajectoryKind::QuasiStaticRamp:
        if (!(ramp_speed > 0.0) || !(max_depth > 0.0))
          throw ConfigError("trajectory: ramp_speed and max_depth must be > 0");
        break;
      case TrajectoryKind::SinusoidScan:
        if (!(scan_speed > 0.0) || !(scan_length > 0.0))
          throw ConfigError("trajectory: scan_speed and scan_length must be > 0");
        [[fallthrough]];
      case TrajectoryKind::SinusoidPoint:
        if (!(frequency > 0.0)) throw ConfigError("trajectory: frequency must be > 0");
        if (!(amplitude < bias_depth))
          throw ConfigError("trajectory: amplitude must stay below bias_depth (contact would be lost)");
        if (!(duration > 0.0)) throw ConfigError("trajectory: duration must be > 0");
        break;
    }
  }

  double approach_time() const {
    return (approach_clearance + bias_depth) / approach_speed;
  }

  /// Total commanded time span.
  double total_time() const {
    switch (kind) {
      case TrajectoryKind::QuasiStaticRamp:
        return 2.0 * (approach_clearance + max_depth) / ramp_speed;
      case TrajectoryKind::SinusoidPoint:
        return approach_time() + duration;
      case TrajectoryKind::SinusoidScan:
        return approach_time() + dwell + scan_length / scan_speed;
    }
    return 0.0;
  }

  /// Commanded penetration and rate at time t (negative depth = above surface).
  struct DepthCommand {
    double depth;
    double rate;
  };
  DepthCommand depth_at(double t) const {
    switch (kind) {
      case TrajectoryKind::QuasiStaticRamp: {
        const double t_peak = (approach_clearance + max_depth) / ramp_speed;
        if (t <= t_peak) return {-approach_clearance + ramp_speed * t, ramp_speed};
        return {max_depth - ramp_speed * (t - t_peak), -ramp_speed};
      }
      case TrajectoryKind::SinusoidPoint:
      case TrajectoryKind::SinusoidScan: {
        const double ta = approach_time();
        if (t <= ta) return {-approach_clearance + approach_speed * t, approach_speed};
        const double w = 2.0 * std::numbers::pi * frequency;
        const double ph = w * (t - ta);
        return {bias_depth + amplitude * std::sin(ph), amplitude * w * std::cos(ph)};
      }
    }
    return {0.0, 0.0};
  }

  /// Surface position of the contact point at time t.
  std::array<double, 2> xy_at(double t) const {
    if (kind != TrajectoryKind::SinusoidScan) return start_xy;
    const double t_move = t - approach_time() - dwell;
    const double s = t_move > 0.0 ? std::min(t_move * scan_speed, scan_length) : 0.0;
    return {start_xy[0] + s * scan_direction[0], start_xy[1] + s * scan_direction[1]};
  }

  /// Arc length along the scan direction at time t (0 during dwell).
  double arc_length_at(double t) const {
    if (kind != TrajectoryKind::SinusoidScan) return 0.0;
    const double t_move = t - approach_time() - dwell;
    return t_move > 0.0 ? std::min(t_move * scan_speed, scan_length) : 0.0;
  }
};

/// Noise and rate model of the F/T sensor plus robot encoder chain.
struct SensorModel {
  double sigma_force = 0.05;     // [N]
  double sigma_vel_sq = 0.4489;  // [(mm/s)^2]
  double force_rate = 1000.0;    // [Hz]
  double robot_rate = 500.0;     // [Hz]
  std::uint64_t seed = 0;

  void validate() const {
    if (!(sigma_force >= 0.0) || !(sigma_vel_sq >= 0.0))
      throw ConfigError("sensor: noise levels must be >= 0");
    if (!(force_rate > 0.0) || !(robot_rate > 0.0))
      throw ConfigError("sensor: channel rates must be > 0");
  }
};

struct SampleRecord {
  double t = 0.0;
  double z_ee = 0.0;        // commanded/true end-effector height [m]
  double v_meas = 0.0;      // measured penetration rate [m/s]
  double f_meas = 0.0;      // measured normal force [N]
  double d_true = 0.0;      // [m]
  double ddot_true = 0.0;   // [m/s]
  double kappa_true = 0.0;  // SI reduced elasticity at the contact point
  double lambda_true = 0.0; // SI reduced viscosity at the contact point
  double x = 0.0, y = 0.0;  // contact point (not serialized)
};

struct SampleStream {
  double dt = 2e-3;
  std::vector<SampleRecord> samples;

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
};

namespace detail {

// Reduced force-law coefficients of the local material for any tip; for
// spheres these are exactly (kappa, lambda).
inline std::pair<double, double> reduced_coefficients(const IndenterProfile& tip,
                                                      const MaterialParams& m) {
  if (tip.shape == TipShape::Sphere) {
    const auto rp = reduce_params(tip, m);
    return {rp.kappa, rp.lambda};
  }
  const auto law = elastic_law(tip, effective_modulus(m));
  double lam;
  switch (tip.shape) {
    case TipShape::Flat:
      lam = 4.0 / (1.0 - m.poisson_ratio) * m.viscosity * tip.half_width;
      break;
    default: {  // PowerLaw
      const double c_tilde = hess_factor_impl(tip.exponent) * tip.shape_coeff;
      lam = 4.0 / (1.0 - m.poisson_ratio) * m.viscosity *
            std::pow(c_tilde, -1.0 / tip.exponent);
    }
  }
  return {law.coeff, lam};
}

}  // namespace detail

/// Run a palpation experiment: track the commanded trajectory over the
/// phantom, evaluate the viscoelastic contact force from the local
/// ground-truth material, and corrupt the sensed channels with seeded
/// Gaussian noise. Bit-reproducible for a fixed seed.
inline SampleStream simulate(const PhantomSpec& phantom, const IndenterProfile& tip,
                             const Trajectory& traj, const SensorModel& sensor) {
  phantom.validate();
  traj.validate();
  sensor.validate();

  // Footprint check at the extremes of the path.
  (void)local_params(phantom, traj.start_xy[0], traj.start_xy[1]);
  const auto end_xy = traj.xy_at(traj.total_time());
  (void)local_params(phantom, end_xy[0], end_xy[1]);

  GaussianRng rng(sensor.seed);
  SampleStream out;
  out.dt = traj.sample_period;
  const std::size_t n = static_cast<std::size_t>(traj.total_time() / traj.sample_period) + 1;
  out.samples.reserve(n);

  // Zero-order-hold refresh counters for channels slower than the stream.
  long f_tick = -1, v_tick = -1;
  double f_noise = 0.0, v_noise = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * traj.sample_period;
    const auto cmd = traj.depth_at(t);
    const auto xy = traj.xy_at(t);
    const auto mat = local_params(phantom, xy[0], xy[1]);

    SampleRecord rec;
    rec.t = t;
    rec.x = xy[0];
    rec.y = xy[1];
    rec.d_true = cmd.depth;
    rec.ddot_true = cmd.rate;
    rec.z_ee = phantom.surface_z - cmd.depth;
    std::tie(rec.kappa_true, rec.lambda_true) = detail::reduced_coefficients(tip, mat);

    const double f_true = viscoelastic_force(tip, mat, cmd.depth, cmd.rate);

    // Channels refresh on their own clocks; force first, then velocity.
    const long ft = static_cast<long>(std::floor(t * sensor.force_rate + 1e-9));
    if (ft > f_tick) {
      f_tick = ft;
      f_noise = sensor.sigma_force * rng.normal();
    }
    const long vt = static_cast<long>(std::floor(t * sensor.robot_rate + 1e-9));
    if (vt > v_tick) {
      v_tick = vt;
      v_noise = std::sqrt(sensor.sigma_vel_sq) * 1e-3 * rng.normal();
    }
    rec.f_meas = f_true + f_noise;
    rec.v_meas = cmd.rate + v_noise;
    out.samples.push_back(rec);
  }
  return out;
}

/// Align a stream onto a slower filter clock with zero-order hold
/// (latest sample wins; no interpolation).
inline SampleStream resample_to_filter_rate(const SampleStream& in, double dt_filter) {
  if (in.empty()) throw std::invalid_argument("resample_to_filter_rate: empty stream");
  if (dt_filter < in.dt - 1e-12)
    throw std::invalid_argument("resample_to_filter_rate: target period below source period");

  SampleStream out;
  out.dt = dt_filter;
  const double t0 = in.samples.front().t;
  const double t_end = in.samples.back().t;
  for (std::size_t k = 0;; ++k) {
    const double t = t0 + static_cast<double>(k) * dt_filter;
    if (t > t_end + 1e-12) break;
    auto idx = static_cast<std::size_t>(std::floor((t - t0) / in.dt + 1e-9));
    idx = std::min(idx, in.samples.size() - 1);
    SampleRecord rec = in.samples[idx];
    rec.t = t;
    out.samples.push_back(rec);
  }
  return out;
}

}  // namespace palpkit
