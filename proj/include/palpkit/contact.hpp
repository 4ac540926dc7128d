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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace palpkit {

/// Viscoelastic half-space material: Young's modulus E_f [Pa], Poisson
/// ratio nu (0.5 for incompressible rubbers), viscosity eta [Pa s].
struct MaterialParams {
  double young_modulus = 0.0;  // E_f [Pa]
  double poisson_ratio = 0.5;  // nu
  double viscosity = 0.0;      // eta [Pa s]

  void validate() const {
    if (!(young_modulus > 0.0))
      throw std::invalid_argument("MaterialParams: young_modulus must be > 0");
    if (!(poisson_ratio >= 0.0 && poisson_ratio < 1.0))
      throw std::domain_error("MaterialParams: poisson_ratio must be in [0, 1)");
    if (!(viscosity >= 0.0))
      throw std::invalid_argument("MaterialParams: viscosity must be >= 0");
  }
};

/// Plane-corrected contact stiffness E* = E_f / (1 - nu^2).
inline double effective_modulus(const MaterialParams& m) {
  if (m.poisson_ratio >= 1.0)
    throw std::domain_error("effective_modulus: singular material (nu >= 1)");
  return m.young_modulus / (1.0 - m.poisson_ratio * m.poisson_ratio);
}

enum class TipShape { Flat, Sphere, PowerLaw };

/// Axially symmetric rigid tip. Flat tips are described by the punch
/// radius a, spheres by the radius R, and power-law tips by the 3-D
/// profile z = c_n r^n. `mass` is the portion of the end effector distal
/// to the force sensor.
struct IndenterProfile {
  TipShape shape = TipShape::Sphere;
  double half_width = 0.0;   // a [m], Flat only
  double radius = 0.0;       // R [m], Sphere only
  double exponent = 0.0;     // n, PowerLaw only
  double shape_coeff = 0.0;  // c_n [m^(1-n)], PowerLaw only
  double mass = 0.2;         // m_I [kg]

  static IndenterProfile flat(double a, double mass = 0.2) {
    if (!(a > 0.0)) throw std::invalid_argument("flat tip: half_width must be > 0");
    IndenterProfile p;
    p.shape = TipShape::Flat;
    p.half_width = a;
    p.mass = mass;
    return p;
  }
  static IndenterProfile sphere(double R, double mass = 0.2) {
    if (!(R > 0.0)) throw std::invalid_argument("sphere tip: radius must be > 0");
    IndenterProfile p;
    p.shape = TipShape::Sphere;
    p.radius = R;
    p.mass = mass;
    return p;
  }
  static IndenterProfile power_law(double n, double c_n, double mass = 0.2) {
    if (!(n > 0.0)) throw std::invalid_argument("power-law tip: exponent must be > 0");
    if (!(c_n > 0.0)) throw std::invalid_argument("power-law tip: shape_coeff must be > 0");
    IndenterProfile p;
    p.shape = TipShape::PowerLaw;
    p.exponent = n;
    p.shape_coeff = c_n;
    p.mass = mass;
    return p;
  }
};

namespace detail {

// sqrt(pi)/2 * n * Gamma(n/2) / Gamma((n+1)/2). Integer orders telescope
// to rational products (k_2 = 2, k_4 = 8/3, k_1 = pi/2, ...), which keeps
// the anchor values free of gamma-function rounding.
inline double hess_factor_impl(double n) {
  const double r = std::rint(n);
  if (r == n && r >= 1.0 && r <= 64.0) {
    const long m = static_cast<long>(r);
    double k = (m % 2 == 0) ? 1.0 : std::numbers::pi_v<double> / 2.0;
    for (long j = (m % 2 == 0) ? 2 : 3; j <= m; j += 2)
      k *= static_cast<double>(j) / static_cast<double>(j - 1);
    return k;
  }
  return 0.5 * std::sqrt(std::numbers::pi_v<double>) * n *
         std::tgamma(n / 2.0) / std::tgamma((n + 1.0) / 2.0);
}

}  // namespace detail

/// Scaling of the 1-D reduced profile g_n(x) = k_n c_n |x|^n for a 3-D
/// power-law tip z = c_n r^n. k_2 = 2 recovers the half-radius sphere
/// rule, k_4 = 8/3 the quartic tip.
inline double hess_factor(double n) {
  if (!(n > 0.0)) throw std::invalid_argument("hess_factor: n must be > 0");
  return detail::hess_factor_impl(n);
}

namespace detail {

// Reduced elastic prefactor so that F_el = coeff * d^exponent.
struct ElasticLaw {
  double coeff;
  double exponent;
};

inline ElasticLaw elastic_law(const IndenterProfile& tip, double e_star) {
  switch (tip.shape) {
    case TipShape::Flat:
      return {e_star * 2.0 * tip.half_width, 1.0};
    case TipShape::Sphere:
      return {4.0 / 3.0 * e_star * std::sqrt(tip.radius), 1.5};
    case TipShape::PowerLaw: {
      const double n = tip.exponent;
      const double c_tilde = hess_factor_impl(n) * tip.shape_coeff;
      return {2.0 * n / (n + 1.0) * e_star * std::pow(c_tilde, -1.0 / n),
              (n + 1.0) / n};
    }
  }
  throw std::logic_error("elastic_law: unreachable");
}

}  // namespace detail

/// Half width of the 1-D foundation contact at penetration d.
inline double contact_half_width(const IndenterProfile& tip, double depth) {
  if (depth <= 0.0) return 0.0;
  switch (tip.shape) {
    case TipShape::Flat:
      return tip.half_width;
    case TipShape::Sphere:
      return std::sqrt(tip.radius * depth);
    case TipShape::PowerLaw: {
      const double c_tilde = detail::hess_factor_impl(tip.exponent) * tip.shape_coeff;
      return std::pow(depth / c_tilde, 1.0 / tip.exponent);
    }
  }
  throw std::logic_error("contact_half_width: unreachable");
}

/// Elastic contact force [N] at penetration depth d [m]. Total function:
/// out of contact (d <= 0) the force is zero.
inline double elastic_force(const IndenterProfile& tip, const MaterialParams& m,
                            double depth) {
  if (depth <= 0.0) return 0.0;
  const auto law = detail::elastic_law(tip, effective_modulus(m));
  return law.coeff * std::pow(depth, law.exponent);
}

/// Unit system for the reduced parameters. The online filters work in
/// millimeters; forces stay in newtons in both systems.
enum class UnitSystem { SI, Millimeter };

/// kappa/lambda conversion factor between SI and millimeter scaling,
/// 1000^(3/2): F = kappa_SI d_m^(3/2) = kappa_mm d_mm^(3/2).
inline constexpr double kMillimeterScale = 31622.776601683792;

/// Lumped spherical-tip contact parameters: F = kappa d^(3/2) + lambda sqrt(d) d_dot.
struct ReducedParams {
  double kappa = 0.0;   // [N/m^(3/2)] (SI) or [N/mm^(3/2)]
  double lambda = 0.0;  // [N s/m^(3/2)] or [N s/mm^(3/2)]
  UnitSystem units = UnitSystem::SI;
};

inline ReducedParams convert_units(const ReducedParams& rp, UnitSystem to) {
  if (rp.units == to) return rp;
  const double f = (to == UnitSystem::Millimeter) ? 1.0 / kMillimeterScale
                                                  : kMillimeterScale;
  return {rp.kappa * f, rp.lambda * f, to};
}

/// kappa = 4/3 E* sqrt(R), lambda = 4/(1-nu) eta sqrt(R) for a spherical tip.
inline ReducedParams reduce_params(const IndenterProfile& tip, const MaterialParams& m,
                                   UnitSystem units = UnitSystem::SI) {
  if (tip.shape != TipShape::Sphere)
    throw std::invalid_argument("reduce_params: only spherical tips reduce to (kappa, lambda)");
  const double sqrt_r = std::sqrt(tip.radius);
  ReducedParams rp;
  rp.kappa = 4.0 / 3.0 * effective_modulus(m) * sqrt_r;
  rp.lambda = 4.0 / (1.0 - m.poisson_ratio) * m.viscosity * sqrt_r;
  rp.units = UnitSystem::SI;
  return convert_units(rp, units);
}

/// Inverse of reduce_params: recover E_f [Pa] from kappa (SI units).
inline double elasticity_from_kappa(double kappa_si, double poisson_ratio, double radius) {
  return 0.75 * kappa_si * (1.0 - poisson_ratio * poisson_ratio) / std::sqrt(radius);
}

/// Inverse of reduce_params: recover eta [Pa s] from lambda (SI units).
inline double viscosity_from_lambda(double lambda_si, double poisson_ratio, double radius) {
  return 0.25 * lambda_si * (1.0 - poisson_ratio) / std::sqrt(radius);
}

/// Spherical-tip viscoelastic contact force, piecewise in d:
/// F = kappa d^(3/2) + lambda sqrt(d) d_dot for d >= 0, else 0.
inline double dr_force(const IndenterProfile& tip, const MaterialParams& m,
                       double depth, double rate) {
  if (tip.shape != TipShape::Sphere)
    throw std::invalid_argument("dr_force: spherical tips only; see viscoelastic_force");
  if (depth <= 0.0) return 0.0;
  const ReducedParams rp = reduce_params(tip, m);
  const double sqrt_d = std::sqrt(depth);
  return rp.kappa * depth * sqrt_d + rp.lambda * sqrt_d * rate;
}

/// Viscoelastic contact force for any supported tip: elastic law plus the
/// damper bed contribution 2/(1-nu) eta d_dot integrated over the contact
/// width. Coincides with dr_force for spheres.
inline double viscoelastic_force(const IndenterProfile& tip, const MaterialParams& m,
                                 double depth, double rate) {
  if (tip.shape == TipShape::Sphere) return dr_force(tip, m, depth, rate);
  if (depth <= 0.0) return 0.0;
  const double viscous = 2.0 / (1.0 - m.poisson_ratio) * m.viscosity * rate *
                         2.0 * contact_half_width(tip, depth);
  return elastic_force(tip, m, depth) + viscous;
}

/// Kelvin-Voigt baseline: F = K d + B d_dot in contact, 0 otherwise.
inline double kv_force(double stiffness, double damping, double depth, double rate) {
  if (depth <= 0.0) return 0.0;
  return stiffness * depth + damping * rate;
}

/// Hunt-Crossley baseline: F = K_c d^n + B_c d^n d_dot in contact, 0 otherwise.
inline double hc_force(double stiffness, double damping, double exponent,
                       double depth, double rate) {
  if (!(exponent > 0.0)) throw std::invalid_argument("hc_force: exponent must be > 0");
  if (depth <= 0.0) return 0.0;
  const double dn = std::pow(depth, exponent);
  return stiffness * dn + damping * dn * rate;
}

}  // namespace palpkit
