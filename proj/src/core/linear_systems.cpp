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

#include "linear_systems.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "linalg.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace severi {

// --- PointConfig -------------------------------------------------------------

PointConfig::PointConfig(std::vector<ProjPoint> points, bool ordered)
    : points_(std::move(points)), ordered_(ordered) {
  if (points_.empty()) fail(ErrorCode::malformed_input, "a configuration needs at least one point");
  const Field f = points_.front().field();
  for (const auto& p : points_)
    if (!(p.field() == f)) fail(ErrorCode::malformed_input, "configuration points over different fields");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        fail(ErrorCode::diagonal_violation, "points " + std::to_string(i) + " and " +
                                                std::to_string(j) + " coincide at " +
                                                points_[i].to_string());
  if (!ordered_) std::sort(points_.begin(), points_.end());
}

PointConfig PointConfig::permuted(const std::vector<std::size_t>& sigma) const {
  if (sigma.size() != points_.size()) fail(ErrorCode::shape, "permutation of the wrong length");
  std::vector<bool> seen(sigma.size(), false);
  std::vector<ProjPoint> out;
  for (auto i : sigma) {
    if (i >= sigma.size() || seen[i]) fail(ErrorCode::malformed_input, "not a permutation");
    seen[i] = true;
    out.push_back(points_[i]);
  }
  return PointConfig(std::move(out), ordered_);
}

PointConfig PointConfig::prefix(std::size_t i) const {
  if (i == 0 || i > points_.size()) fail(ErrorCode::shape, "prefix length out of range");
  return PointConfig(std::vector<ProjPoint>(points_.begin(), points_.begin() + static_cast<long>(i)),
                     ordered_);
}

PointConfig PointConfig::reduced_mod(std::uint32_t p) const {
  std::vector<ProjPoint> out;
  for (const auto& q : points_) out.push_back(q.reduced_mod(p));
  return PointConfig(std::move(out), ordered_);
}

// --- condition matrices ------------------------------------------------------

namespace {

Matrix condition_rows(unsigned s, const std::vector<ProjPoint>& points, Field f) {
  if (s == 0) fail(ErrorCode::degree, "condition matrix in degree 0");
  if (f.is_prime() && s % f.modulus == 0)
    fail(ErrorCode::unsupported_characteristic,
         "characteristic " + std::to_string(f.modulus) + " divides the degree " + std::to_string(s));
  const auto& mons = monomials(s);
  Matrix m(3 * points.size(), mons.size(), f);
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::array<Scalar, 3> rep = points[i].coords();
    if (f.is_rational()) {
      auto z = points[i].primitive_integers();
      for (std::size_t v = 0; v < 3; ++v) rep[v] = Scalar(Rational(z[v]));
    }
    std::array<std::vector<Scalar>, 3> pw;
    for (std::size_t v = 0; v < 3; ++v) {
      pw[v].assign(s, Scalar::one(f));
      for (unsigned e = 1; e < s; ++e) pw[v][e] = pw[v][e - 1] * rep[v];
    }
    for (std::size_t col = 0; col < mons.size(); ++col) {
      const Monomial& mo = mons[col];
      const std::array<unsigned, 3> ex{mo.x, mo.y, mo.z};
      for (std::size_t c = 0; c < 3; ++c) {
        if (ex[c] == 0) continue;
        Scalar v = Scalar::from_int(f, static_cast<long>(ex[c]));
        for (std::size_t w = 0; w < 3; ++w) {
          unsigned e = ex[w] - (w == c ? 1 : 0);
          if (e) v = v * pw[w][e];
        }
        m(3 * i + c, col) = v;
      }
    }
  }
  return m;
}

void check_caps(std::size_t d, unsigned s) {
  if (d == 0) fail(ErrorCode::malformed_input, "d must be at least 1");
  if (d > kMaxPoints) fail(ErrorCode::too_large, "d above " + std::to_string(kMaxPoints));
  if (s > kMaxSystemDegree) fail(ErrorCode::too_large, "degree above " + std::to_string(kMaxSystemDegree));
}

}  // namespace

Matrix condition_matrix(unsigned s, const PointConfig& cfg) {
  return condition_rows(s, cfg.points(), cfg.field());
}

ExpectedDims expected_dims(unsigned s, std::size_t d) {
  const long n = projective_dim(s);
  const long dd = static_cast<long>(d);
  return {n, std::max(-1L, n - 3 * dd), n + 1 - 3 * dd};
}

LinearSystemResult linear_system(unsigned s, const PointConfig& cfg) {
  check_caps(cfg.size(), s);
  Matrix m = condition_matrix(s, cfg);
  LinearSystemResult r;
  r.s = s;
  r.config = cfg;
  r.rank = mat_rank(m);
  const auto e = expected_dims(s, cfg.size());
  r.proj_dim = e.n_s - static_cast<long>(r.rank);
  r.expected_proj_dim = e.expected_proj_dim;
  r.superabundance = std::max(0L, r.proj_dim - r.expected_proj_dim);
  r.dependent_conditions = 3 * static_cast<long>(cfg.size()) - static_cast<long>(r.rank);
  for (auto& v : kernel_basis(m)) r.basis.emplace_back(s, cfg.field(), std::move(v));
  return r;
}

// --- strata --------------------------------------------------------------------

std::string StratumSpec::name() const {
  switch (kind) {
    case StratumKind::generic: return "generic";
    case StratumKind::all_collinear: return "all-collinear";
    case StratumKind::j_collinear: return std::to_string(j) + "-collinear";
    case StratumKind::on_conic: return "on-conic";
    case StratumKind::custom: return "custom";
  }
  return "?";
}

StratumKind parse_stratum_kind(const std::string& text) {
  if (text == "generic") return StratumKind::generic;
  if (text == "all-collinear") return StratumKind::all_collinear;
  if (text == "j-collinear") return StratumKind::j_collinear;
  if (text == "on-conic") return StratumKind::on_conic;
  if (text == "custom") return StratumKind::custom;
  fail(ErrorCode::malformed_input, "unknown stratum '" + text + "'");
}

namespace {

using Triple = std::array<long, 3>;

constexpr int kRetriesPerPoint = 2000;

bool reduce_triple(Triple& t) {
  long g = std::gcd(std::gcd(t[0], t[1]), t[2]);
  if (g == 0) return false;
  for (auto& v : t) v /= g;
  return true;
}

bool in_box(const Triple& t, long lo, long hi) {
  for (auto v : t)
    if (v < lo || v > hi) return false;
  return true;
}

class Sampler {
 public:
  Sampler(std::size_t d, const StratumSpec& spec) : d_(d), spec_(spec), g_(spec.seed) {
    if (spec.box_lo > spec.box_hi) fail(ErrorCode::malformed_input, "empty bounding box");
  }

  Triple random_triple(long lo, long hi) {
    Triple t;
    for (auto& v : t) v = g_.uniform(lo, hi);
    return t;
  }

  /// Appends p if it is a new projective point; returns whether it did.
  bool add(Triple t, std::vector<ProjPoint>& out) {
    if (!reduce_triple(t) || !in_box(t, spec_.box_lo, spec_.box_hi)) return false;
    ProjPoint p = ProjPoint::of_ints(t[0], t[1], t[2]);
    for (const auto& q : out)
      if (q == p) return false;
    out.push_back(p);
    return true;
  }

  void exhausted() const {
    fail(ErrorCode::exhaustion, "could not fit " + std::to_string(d_) + " distinct " +
                                    spec_.name() + " points in the box [" +
                                    std::to_string(spec_.box_lo) + ", " +
                                    std::to_string(spec_.box_hi) + "]");
  }

  void generic(std::size_t count, std::vector<ProjPoint>& out,
               const std::optional<Triple>& avoid_line = std::nullopt) {
    std::size_t target = out.size() + count;
    for (int tries = 0; out.size() < target; ++tries) {
      if (tries > kRetriesPerPoint * static_cast<int>(d_)) exhausted();
      Triple t = random_triple(spec_.box_lo, spec_.box_hi);
      if (avoid_line) {
        const auto& l = *avoid_line;
        if (l[0] * t[0] + l[1] * t[1] + l[2] * t[2] == 0) continue;
      }
      add(t, out);
    }
  }

  /// Points lam*A + mu*B on a random line; returns the line's equation.
  Triple collinear(std::size_t count, std::vector<ProjPoint>& out) {
    constexpr long kCoef = 3;
    // A narrower box for A and B keeps the combinations inside the full box.
    long lo = spec_.box_lo / (2 * kCoef), hi = spec_.box_hi / (2 * kCoef);
    if (hi - lo < 2) lo = spec_.box_lo, hi = spec_.box_hi;
    for (int attempt = 0; attempt < 200; ++attempt) {
      Triple a = random_triple(lo, hi), b = random_triple(lo, hi);
      Triple line{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      if (!reduce_triple(line)) continue;
      std::vector<ProjPoint> pts = out;
      for (int tries = 0; pts.size() < out.size() + count && tries < kRetriesPerPoint; ++tries) {
        long lam = g_.uniform(-kCoef, kCoef), mu = g_.uniform(-kCoef, kCoef);
        add({lam * a[0] + mu * b[0], lam * a[1] + mu * b[1], lam * a[2] + mu * b[2]}, pts);
      }
      if (pts.size() == out.size() + count) {
        out = std::move(pts);
        return line;
      }
    }
    exhausted();
    return {};
  }

  void on_conic(std::size_t count, std::vector<ProjPoint>& out) {
    constexpr long kEntry = 2, kParam = 3;
    for (int attempt = 0; attempt < 200; ++attempt) {
      std::array<Triple, 3> g;
      for (auto& row : g) row = random_triple(-kEntry, kEntry);
      long det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                 g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                 g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
      if (det == 0) continue;
      std::vector<ProjPoint> pts = out;
      for (int tries = 0; pts.size() < out.size() + count && tries < kRetriesPerPoint; ++tries) {
        long u = g_.uniform(-kParam, kParam), v = g_.uniform(-kParam, kParam);
        if (std::gcd(u, v) != 1) continue;
        Triple w{u * u, u * v, v * v};
        Triple p;
        for (std::size_t r = 0; r < 3; ++r) p[r] = g[r][0] * w[0] + g[r][1] * w[1] + g[r][2] * w[2];
        add(p, pts);
      }
      if (pts.size() == out.size() + count) {
        out = std::move(pts);
        return;
      }
    }
    exhausted();
  }

 private:
  std::size_t d_;
  const StratumSpec& spec_;
  SplitMix64 g_;
};

}  // namespace

PointConfig stratum_sample(std::size_t d, const StratumSpec& spec) {
  if (d == 0) fail(ErrorCode::malformed_input, "d must be at least 1");
  Sampler smp(d, spec);
  std::vector<ProjPoint> pts;
  switch (spec.kind) {
    case StratumKind::generic:
      smp.generic(d, pts);
      break;
    case StratumKind::all_collinear:
      smp.collinear(d, pts);
      break;
    case StratumKind::j_collinear: {
      if (spec.j < 3 || spec.j > d)
        fail(ErrorCode::malformed_input, "j-collinear needs 3 <= j <= d (j = " +
                                             std::to_string(spec.j) + ", d = " + std::to_string(d) + ")");
      Triple line = smp.collinear(spec.j, pts);
      smp.generic(d - spec.j, pts, line);
      break;
    }
    case StratumKind::on_conic:
      smp.on_conic(d, pts);
      break;
    case StratumKind::custom:
      if (spec.points.size() != d)
        fail(ErrorCode::shape, "custom stratum has " + std::to_string(spec.points.size()) +
                                   " points, expected " + std::to_string(d));
      pts = spec.points;
      break;
  }
  return PointConfig(std::move(pts), true);
}

std::vector<StratumSpec> default_strata(std::size_t d, std::uint64_t seed, long box_lo,
                                        long box_hi) {
  std::vector<StratumSpec> out;
  auto push = [&](StratumKind k, unsigned j) {
    StratumSpec s;
    s.kind = k;
    s.j = j;
    s.seed = derive_seed(seed, out.size());
    s.box_lo = box_lo;
    s.box_hi = box_hi;
    out.push_back(s);
  };
  push(StratumKind::generic, 0);
  push(StratumKind::all_collinear, 0);
  if (d >= 4)
    for (unsigned j = 3; j < d; ++j) push(StratumKind::j_collinear, j);
  else if (d == 3)
    push(StratumKind::j_collinear, 3);
  push(StratumKind::on_conic, 0);
  return out;
}

// --- critical degree -----------------------------------------------------------

std::vector<SampleRank> draw_samples(std::size_t d, const std::vector<StratumSpec>& strata,
                                     std::size_t samples_per_stratum) {
  std::vector<SampleRank> out;
  for (const auto& spec : strata) {
    const std::size_t n = spec.kind == StratumKind::custom ? 1 : samples_per_stratum;
    for (std::size_t t = 0; t < n; ++t) {
      StratumSpec local = spec;
      local.seed = derive_seed(spec.seed, t);
      SampleRank s;
      s.stratum = spec.name();
      s.index = t;
      s.config = stratum_sample(d, local);
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

void rank_samples(std::vector<SampleRank>& samples, unsigned s_lo, unsigned s_hi, unsigned jobs,
                  std::uint32_t modulus) {
  struct Ranks {
    std::vector<std::size_t> q, p;
  };
  auto ranks = parallel_map<Ranks>(jobs, samples.size(), [&](std::size_t i) {
    Ranks r;
    const PointConfig& cfg = samples[i].config;
    std::vector<ProjPoint> reduced;
    if (modulus)
      for (const auto& pt : cfg.points()) reduced.push_back(pt.reduced_mod(modulus));
    for (unsigned s = s_lo; s <= s_hi; ++s) {
      r.q.push_back(mat_rank(condition_matrix(s, cfg)));
      if (modulus && s % modulus != 0)
        r.p.push_back(mat_rank(condition_rows(s, reduced, Field::prime(modulus))));
      else
        r.p.push_back(0);
    }
    return r;
  });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i].rank = std::move(ranks[i].q);
    samples[i].prime_rank = std::move(ranks[i].p);
  }
}

}  // namespace

CriticalDegreeReport critical_degree(std::size_t d, unsigned s_max,
                                     const std::vector<StratumSpec>& strata,
                                     std::size_t samples_per_stratum, unsigned jobs,
                                     std::uint32_t modulus) {
  check_caps(d, s_max);
  if (s_max == 0) fail(ErrorCode::malformed_input, "s_max must be at least 1");
  if (strata.empty()) fail(ErrorCode::malformed_input, "no strata to scan");
  CriticalDegreeReport rep;
  rep.d = d;
  rep.s_max = s_max;
  rep.strata = strata;
  rep.samples_per_stratum = samples_per_stratum;
  rep.modulus = modulus;
  rep.samples = draw_samples(d, strata, samples_per_stratum);
  if (rep.samples.empty()) fail(ErrorCode::malformed_input, "no samples to scan");
  rank_samples(rep.samples, 1, s_max, jobs, modulus);

  const std::size_t full = 3 * d;
  std::vector<bool> all_full(s_max + 2, true), constant(s_max + 2, true);
  for (unsigned s = 1; s <= s_max; ++s) {
    for (const auto& smp : rep.samples) {
      if (smp.rank[s - 1] != full) all_full[s] = false;
      if (smp.rank[s - 1] != rep.samples.front().rank[s - 1]) constant[s] = false;
      if (smp.prime_rank[s - 1] && smp.prime_rank[s - 1] != smp.rank[s - 1]) ++rep.prime_mismatches;
    }
  }
  auto smallest_stable = [&](auto&& good) -> std::optional<unsigned> {
    std::optional<unsigned> best;
    for (unsigned s = s_max; s >= 1; --s) {
      if (!good(s)) break;
      best = s;
    }
    return best;
  };
  rep.k_hat = smallest_stable([&](unsigned s) { return bool(all_full[s]); });
  rep.k_hat_constant = smallest_stable([&](unsigned s) { return bool(constant[s]); });
  if (rep.k_hat) {
    for (unsigned s = *rep.k_hat; s <= s_max; ++s)
      if (expected_dims(s, d).bundle_rank > 0) {
        rep.k_hat_nonempty = s;
        break;
      }
    std::set<std::string> bad;
    for (const auto& smp : rep.samples)
      if (smp.rank[*rep.k_hat - 1] != full) bad.insert(smp.stratum);
    for (const auto& spec : strata)
      if (!bad.count(spec.name()) &&
          std::find(rep.certified_strata.begin(), rep.certified_strata.end(), spec.name()) ==
              rep.certified_strata.end())
        rep.certified_strata.push_back(spec.name());
    if (*rep.k_hat > 1) {
      const unsigned s = *rep.k_hat - 1;
      for (const auto& smp : rep.samples) {
        if (smp.rank[s - 1] == full) continue;
        const auto e = expected_dims(s, d);
        rep.witnesses.push_back({smp.stratum, smp.index, s, smp.config, smp.rank[s - 1],
                                 e.n_s - static_cast<long>(smp.rank[s - 1]), e.expected_proj_dim});
      }
    }
  }
  return rep;
}

MonotoneCheck monotone_independence_check(std::size_t d, unsigned k_hat, unsigned r_max,
                                          const std::vector<StratumSpec>& strata,
                                          std::size_t samples_per_stratum, unsigned jobs) {
  check_caps(d, r_max);
  if (k_hat == 0 || k_hat > r_max) fail(ErrorCode::malformed_input, "need 1 <= k_hat <= r_max");
  MonotoneCheck mc;
  mc.d = d;
  mc.r_min = k_hat;
  mc.r_max = r_max;
  mc.samples = draw_samples(d, strata, samples_per_stratum);
  rank_samples(mc.samples, k_hat, r_max, jobs, 0);
  for (const auto& smp : mc.samples)
    for (unsigned r = k_hat; r <= r_max; ++r) {
      std::size_t rank = smp.rank[r - k_hat];
      if (rank == 3 * d) continue;
      mc.ok = false;
      const auto e = expected_dims(r, d);
      mc.failures.push_back({smp.stratum, smp.index, r, smp.config, rank,
                             e.n_s - static_cast<long>(rank), e.expected_proj_dim});
    }
  return mc;
}

}  // namespace severi
