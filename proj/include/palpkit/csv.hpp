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

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "palpkit/simulate.hpp"

namespace palpkit {

inline constexpr const char* kStreamSchema = "palpkit/stream v1";
inline constexpr const char* kTraceSchema = "palpkit/trace v1";
inline constexpr const char* kProfileSchema = "palpkit/profile v1";
inline constexpr const char* kSummarySchema = "palpkit/summary v1";

/// 9-significant-digit decimal form, locale independent.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline void write_schema_line(std::ostream& os, const char* schema) {
  os << "# schema: " << schema << "\n";
}

inline void write_stream_csv(std::ostream& os, const SampleStream& s) {
  write_schema_line(os, kStreamSchema);
  os << "t,z_ee,v_meas,F_meas,d_true,ddot_true,kappa_true,lambda_true\n";
  for (const auto& r : s.samples) {
    os << format_number(r.t) << ',' << format_number(r.z_ee) << ','
       << format_number(r.v_meas) << ',' << format_number(r.f_meas) << ','
       << format_number(r.d_true) << ',' << format_number(r.ddot_true) << ','
       << format_number(r.kappa_true) << ',' << format_number(r.lambda_true) << '\n';
  }
}

inline void write_stream_csv(const std::string& path, const SampleStream& s) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  write_stream_csv(f, s);
}

}  // namespace palpkit
