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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "palpkit/contact.hpp"

using namespace palpkit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const MaterialParams kSoft{112.5e3, 0.5, 362.0};   // ECOFLEX-0030 class
const MaterialParams kHard{282.1e3, 0.5, 860.0};   // Dragonskin-10NV class
const IndenterProfile kSphere5 = IndenterProfile::sphere(5e-3);
}  // namespace

TEST_CASE("effective modulus") {
  CHECK_THAT(effective_modulus(kHard), WithinRel(376133.3333333333, 1e-12));
  CHECK(effective_modulus({100e3, 0.0, 0.0}) == 100e3);
  CHECK_THAT(effective_modulus(kSoft), WithinRel(150e3, 1e-12));
  CHECK_THROWS_AS(effective_modulus({100e3, 1.0, 0.0}), std::domain_error);
}

TEST_CASE("hess factor anchors") {
  CHECK(hess_factor(2.0) == 2.0);  // sphere: R1 = R/2
  CHECK_THAT(hess_factor(4.0), WithinAbs(2.667, 1e-3));
  // Cone: matching the 1-D foundation force E* d^2 / (k1 c) to the 3-D
  // axisymmetric solution gives k1 = 1/F3d(1; E*=1, c=1). Frozen: pi/2.
  const double f3d = oracle::cone3d(1.0).force_for_depth(1.0, 1.0, 1.0);
  const double k1_oracle = 1.0 / f3d;
  CHECK_THAT(k1_oracle, WithinAbs(1.570796326795, 1e-9));
  CHECK_THAT(hess_factor(1.0), WithinRel(k1_oracle, 1e-9));
  CHECK_THROWS_AS(hess_factor(0.0), std::invalid_argument);
  // Non-integer orders stay on the gamma branch and remain continuous.
  CHECK_THAT(hess_factor(2.0 + 1e-9), WithinRel(2.0, 1e-7));
}

TEST_CASE("elastic force closed forms vs spring-bed quadrature") {
  SECTION("sphere") {
    const double d = 1e-3;
    const double f = elastic_force(kSphere5, kHard, d);
    CHECK_THAT(f, WithinAbs(1.121412936, 1e-6));  // frozen quadrature value
    const double r1 = kSphere5.radius / 2.0;
    const double a = std::sqrt(2.0 * r1 * d);
    const double fq = oracle::spring_bed_force(
        [&](double x) { return x * x / (2.0 * r1); }, effective_modulus(kHard), d, a);
    CHECK_THAT(f, WithinRel(fq, 1e-9));
  }
  SECTION("flat") {
    const auto tip = IndenterProfile::flat(5e-3);
    CHECK_THAT(elastic_force(tip, kSoft, 1e-3), WithinRel(1.5, 1e-9));
    const double fq = oracle::spring_bed_force([](double) { return 0.0; },
                                               effective_modulus(kSoft), 1e-3, 5e-3);
    CHECK_THAT(elastic_force(tip, kSoft, 1e-3), WithinRel(fq, 1e-9));
  }
  SECTION("quartic") {
    const auto tip = IndenterProfile::power_law(4.0, 1e7);
    const double d = 1e-3;
    const double f = elastic_force(tip, kSoft, d);
    CHECK_THAT(f, WithinAbs(0.593907840, 1e-6));  // frozen quadrature value
    const double k4 = hess_factor(4.0);
    const double a = std::pow(d / (k4 * 1e7), 0.25);
    const double fq = oracle::spring_bed_force(
        [&](double x) { return k4 * 1e7 * std::pow(x, 4.0); }, effective_modulus(kSoft),
        d, a);
    CHECK_THAT(f, WithinRel(fq, 1e-9));
  }
  SECTION("zero and negative penetration") {
    CHECK(elastic_force(kSphere5, kHard, 0.0) == 0.0);
    CHECK(elastic_force(IndenterProfile::flat(5e-3), kSoft, -1e-3) == 0.0);
  }
}

TEST_CASE("sphere closed form matches 3-D contact theory") {
  // Independent route: Galin/Sneddon integrals for the parabolic profile.
  auto para = oracle::power3d(1.0 / (2.0 * kSphere5.radius), 2.0);
  for (double d : {0.1e-3, 0.5e-3, 1e-3, 2e-3, 3e-3}) {
    const double f3 = para.force_for_depth(d, effective_modulus(kHard),
                                           std::sqrt(kSphere5.radius * d));
    CHECK_THAT(elastic_force(kSphere5, kHard, d), WithinRel(f3, 1e-6));
  }
}

TEST_CASE("dr force") {
  SECTION("viscous term vs damper-bed sum") {
    const double d = 1e-3, rate = 5e-3;
    const double visc =
        dr_force(kSphere5, kSoft, d, rate) - elastic_force(kSphere5, kSoft, d);
    CHECK_THAT(visc, WithinAbs(0.032378264, 1e-6));  // frozen quadrature value
    const double a = std::sqrt(kSphere5.radius * d);
    CHECK_THAT(visc,
               WithinRel(oracle::damper_bed_force(kSoft.viscosity, kSoft.poisson_ratio,
                                                  rate, a),
                         1e-9));
  }
  SECTION("out of contact") {
    CHECK(dr_force(kSphere5, kSoft, -0.5e-3, 123.0) == 0.0);
  }
  SECTION("zero rate equals elastic force") {
    for (double d : {0.2e-3, 1e-3, 2.5e-3})
      CHECK(dr_force(kSphere5, kSoft, d, 0.0) == elastic_force(kSphere5, kSoft, d));
  }
  SECTION("linear in rate for fixed depth") {
    const double d = 1.3e-3;
    const double f0 = dr_force(kSphere5, kSoft, d, 0.0);
    const double f1 = dr_force(kSphere5, kSoft, d, 1e-3) - f0;
    for (double rate : {-3e-3, 2e-3, 7e-3}) {
      CHECK_THAT(dr_force(kSphere5, kSoft, d, rate) - f0,
                 WithinRel(f1 * rate / 1e-3, 1e-9));
    }
  }
  SECTION("non-spherical tips rejected") {
    CHECK_THROWS_AS(dr_force(IndenterProfile::flat(5e-3), kSoft, 1e-3, 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("reduce params") {
  const auto si = reduce_params(kSphere5, kSoft);
  CHECK_THAT(si.kappa, WithinAbs(14142.135624, 1e-4));
  CHECK_THAT(si.lambda, WithinAbs(204.778124, 1e-4));
  const auto mm = reduce_params(kSphere5, kSoft, UnitSystem::Millimeter);
  CHECK_THAT(mm.kappa, WithinAbs(0.447213595, 1e-7));
  CHECK_THAT(mm.lambda, WithinAbs(0.006475653, 1e-8));

  SECTION("matches dr_force at sampled states") {
    for (auto [d, rate] : {std::pair{0.4e-3, 2e-3}, {1.1e-3, -4e-3}, {2.7e-3, 0.5e-3}}) {
      const double f = si.kappa * std::pow(d, 1.5) + si.lambda * std::sqrt(d) * rate;
      CHECK_THAT(f, WithinRel(dr_force(kSphere5, kSoft, d, rate), 1e-12));
    }
  }
  SECTION("zero viscosity gives zero lambda") {
    CHECK(reduce_params(kSphere5, {100e3, 0.5, 0.0}).lambda == 0.0);
  }
  SECTION("round trip to material parameters") {
    CHECK_THAT(elasticity_from_kappa(si.kappa, 0.5, kSphere5.radius),
               WithinRel(kSoft.young_modulus, 1e-12));
    CHECK_THAT(viscosity_from_lambda(si.lambda, 0.5, kSphere5.radius),
               WithinRel(kSoft.viscosity, 1e-12));
  }
  SECTION("unit round trip is exact") {
    const auto back = convert_units(convert_units(si, UnitSystem::Millimeter), UnitSystem::SI);
    CHECK_THAT(back.kappa, WithinRel(si.kappa, 1e-12));
    CHECK_THAT(back.lambda, WithinRel(si.lambda, 1e-12));
  }
  SECTION("non-spherical tips rejected") {
    CHECK_THROWS_AS(reduce_params(IndenterProfile::power_law(4.0, 1e7), kSoft),
                    std::invalid_argument);
  }
}

TEST_CASE("kv and hc baselines") {
  CHECK(kv_force(1000.0, 0.0, 0.01, 0.0) == 10.0);
  CHECK(kv_force(1000.0, 50.0, -1e-3, 0.02) == 0.0);
  CHECK_THAT(kv_force(0.0, 50.0, 1e-3, 0.02), WithinRel(1.0, 1e-12));

  const auto rp = reduce_params(kSphere5, kSoft);
  for (double d : {0.3e-3, 1e-3, 2e-3}) {
    CHECK_THAT(hc_force(rp.kappa, 0.0, 1.5, d, 0.0),
               WithinRel(elastic_force(kSphere5, kSoft, d), 1e-12));
  }
  CHECK(hc_force(1e5, 10.0, 1.5, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(hc_force(1e5, 10.0, 0.0, 1e-3, 0.0), std::invalid_argument);
}

TEST_CASE("force laws are continuous at contact onset, KV jumps") {
  const double rate = 5e-3, eps = 1e-12;
  CHECK_THAT(dr_force(kSphere5, kSoft, eps, rate), WithinAbs(0.0, 1e-5));
  CHECK_THAT(hc_force(1e5, 10.0, 1.5, eps, rate), WithinAbs(0.0, 1e-5));
  // KV at onset carries the full damper force B*d_dot.
  const double B = 50.0;
  CHECK_THAT(kv_force(1e3, B, eps, rate), WithinAbs(B * rate, 1e-6));
}

TEST_CASE("elastic force monotone in depth for every profile") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> step(1e-5, 2e-4);
  for (const auto& tip :
       {kSphere5, IndenterProfile::flat(5e-3), IndenterProfile::power_law(4.0, 1e7),
        IndenterProfile::power_law(1.3, 5.0)}) {
    double d = 0.0, prev = 0.0;
    for (int i = 0; i < 40; ++i) {
      d += step(rng);
      const double f = elastic_force(tip, kSoft, d);
      CHECK(f > prev);
      prev = f;
    }
  }
}

TEST_CASE("viscoelastic force for generic tips") {
  // Sphere branch must coincide with dr_force bit for bit.
  for (auto [d, rate] : {std::pair{0.5e-3, 3e-3}, {1.5e-3, -2e-3}}) {
    CHECK(viscoelastic_force(kSphere5, kSoft, d, rate) ==
          dr_force(kSphere5, kSoft, d, rate));
  }
  // Damper-bed quadrature for flat and quartic tips.
  const double d = 1e-3, rate = 4e-3;
  for (const auto& tip : {IndenterProfile::flat(5e-3), IndenterProfile::power_law(4.0, 1e7)}) {
    const double visc = viscoelastic_force(tip, kSoft, d, rate) - elastic_force(tip, kSoft, d);
    const double a = contact_half_width(tip, d);
    CHECK_THAT(visc, WithinRel(oracle::damper_bed_force(kSoft.viscosity,
                                                        kSoft.poisson_ratio, rate, a),
                               1e-9));
  }
}
