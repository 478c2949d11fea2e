// Copyright 2026 The Severi Authors
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

// Nodal curves: certificates, synthesis, and the curve/configuration pairs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forms.hpp"
#include "grassmann.hpp"
#include "linear_systems.hpp"

namespace severi {

/// (n - 1)(n - 2)/2 - d; throws infeasible when d exceeds the arithmetic genus.
long genus(long n, long d);

enum class Irreducibility { certified, refuted, unknown };
std::string irreducibility_name(Irreducibility i);

struct NodeWitness {
  ProjPoint point;
  int chart = 2;
  std::array<Scalar, 3> gradient;
  Scalar a, b, c;
  Scalar discriminant;
};

struct PrimeScan {
  std::uint32_t p = 0;
  std::vector<ProjPoint> expected;  // reduced claimed nodes, sorted
  std::vector<ProjPoint> found;     // singular points of the reduced curve
  bool clean() const { return expected == found; }
};

struct CertifyOptions {
  std::uint32_t first_prime = 1009;
  std::uint32_t prime_limit = 5000;
  std::size_t primes = 2;
  long factor_bound = 2;  // trial factor coefficients lie in [-b, b]
};

struct NodalCertificate {
  Form curve;  // primitive integer representative
  PointConfig nodes;
  std::vector<NodeWitness> witnesses;
  bool squarefree = false;
  std::vector<PrimeScan> scans;
  std::vector<std::string> skipped_primes;  // "p: reason"
  Irreducibility irreducibility = Irreducibility::unknown;
  std::optional<Form> factor;  // found when refuted
  long genus = 0;
  bool certified = false;
  std::string failed_check;  // node, squarefree, genus, factor, scan; empty when certified
  std::string refutation;    // human-readable reason for failed_check
  std::string confidence;
};

NodalCertificate certify_member(const Form& f, const PointConfig& claimed,
                                const CertifyOptions& opts = {});

/// Recomputes every stored witness and scan; empty string when they all hold.
std::string verify_certificate(const NodalCertificate& cert);

struct SigmaPoint {
  Form curve;
  PointConfig nodes;  // unordered
  NodalCertificate cert;
};

struct SynthOptions {
  std::size_t max_attempts = 50;
  long coeff_bound = 20;
  long box_lo = -10;
  long box_hi = 10;
  unsigned jobs = 1;
  CertifyOptions certify;
};

struct SynthReport {
  unsigned n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  PointConfig config;
  std::size_t rank = 0;
  long proj_dim = -1;
  std::size_t attempts = 0;  // attempts examined, including the winner
  std::optional<SigmaPoint> point;
  std::size_t extra_singular = 0, degenerate_node = 0, not_squarefree = 0, reducible = 0,
              other = 0;
};

/// Throws infeasible when the genus would be negative or L_n(cfg) is empty.
SynthReport synth_nodal(unsigned n, std::size_t d, std::uint64_t seed,
                        const SynthOptions& opts = {});

struct EPoint {
  unsigned k = 0;
  Form curve;
  PluckerPoint plucker;
};

struct FPoint {
  unsigned k = 0;
  Form curve;
  FlagPoint flag;
  PointConfig ordering;  // ordered nodes
};

EPoint make_E_point(const SigmaPoint& sp, unsigned k);
/// `sigma` orders the sorted node list; empty means the identity.
FPoint make_F_point(const SigmaPoint& sp, const std::vector<std::size_t>& sigma, unsigned k);
EPoint project(const FPoint& f);

struct FiberReport {
  unsigned n = 0;
  std::size_t d = 0;
  unsigned k_hat = 0;
  bool below_critical = false;  // n < k_hat
  long expected_proj_dim = 0;   // N_n - 3d
  std::size_t samples = 0;
  bool constant = false;
  std::vector<Witness> violations;
};

FiberReport bundle_fiber_check(unsigned n, std::size_t d, unsigned k_hat,
                               const std::vector<StratumSpec>& strata, std::size_t samples,
                               unsigned jobs = 1);

}  // namespace severi
