// Copyright 2026 The wptdock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace wptdock {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates type invariants; the message carries the validation report.
class InvalidNetwork : public Error {
 public:
  using Error::Error;
};

// Solver residual above tolerance. r_load() identifies the offending load
// when the failure surfaced inside a sweep.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& message, double r_load)
      : Error(message), r_load_(r_load) {}
  double r_load() const { return r_load_; }

 private:
  double r_load_;
};

// The diode-state enumeration found no complementarity-consistent
// assignment. Must not occur for valid inputs; signals a solver bug.
class NoConsistentState : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class EmptySweep : public Error {
 public:
  using Error::Error;
};

// Calibration targets unreachable within parameter bounds. Carries the best
// residual found so callers can report how close the search got.
class CalibrationInfeasible : public Error {
 public:
  CalibrationInfeasible(const std::string& message, double r_droop,
                        double eta_link, double p_out_peak, double eta_at_peak)
      : Error(message),
        r_droop_(r_droop),
        eta_link_(eta_link),
        p_out_peak_(p_out_peak),
        eta_at_peak_(eta_at_peak) {}

  double best_r_droop() const { return r_droop_; }
  double best_eta_link() const { return eta_link_; }
  double best_p_out_peak() const { return p_out_peak_; }
  double best_eta_at_peak() const { return eta_at_peak_; }

 private:
  double r_droop_;
  double eta_link_;
  double p_out_peak_;
  double eta_at_peak_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace wptdock
