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

#include "severi.hpp"

#include <algorithm>

#include "linalg.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace severi {

long genus(long n, long d) {
  if (n < 1) fail(ErrorCode::degree, "curve degree must be at least 1");
  if (d < 0) fail(ErrorCode::malformed_input, "node count must be non-negative");
  const long pa = (n - 1) * (n - 2) / 2;
  if (d > pa)
    fail(ErrorCode::infeasible, std::to_string(d) + " nodes exceed the arithmetic genus " +
                                    std::to_string(pa) + " of a degree " + std::to_string(n) +
                                    " curve");
  return pa - d;
}

std::string irreducibility_name(Irreducibility i) {
  switch (i) {
    case Irreducibility::certified: return "certified";
    case Irreducibility::refuted: return "refuted";
    case Irreducibility::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

const char* kConfidence =
    "nodes verified exactly over Q; absence of other singular points checked only at the "
    "F_p-rational points of the listed primes";

bool collinear(const std::vector<ProjPoint>& pts) {
  if (pts.size() < 3) return true;
  auto det3 = [](const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
  };
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (!det3(pts[0], pts[1], pts[i]).is_zero()) return false;
  return true;
}

Form line_through(const ProjPoint& a, const ProjPoint& b) {
  Form l(1, Field::rational());
  l[0] = a[1] * b[2] - a[2] * b[1];
  l[1] = a[2] * b[0] - a[0] * b[2];
  l[2] = a[0] * b[1] - a[1] * b[0];
  return l.primitive();
}

// Factors of degree m <= n/2 with coefficients in [-b, b] and first nonzero
// coefficient positive, up to a fixed candidate budget per degree.
std::optional<Form> trial_factor(const Form& f, long b) {
  constexpr std::uint64_t kBudget = 200000;
  for (unsigned m = 1; 2 * m <= f.degree(); ++m) {
    const std::size_t len = monomial_count(m);
    std::uint64_t total = 1;
    bool over = false;
    for (std::size_t i = 0; i < len && !over; ++i) {
      total *= static_cast<std::uint64_t>(2 * b + 1);
      over = total > kBudget;
    }
    if (over) break;
    std::vector<long> c(len, -b);
    for (std::uint64_t it = 0; it < total; ++it) {
      auto first = std::find_if(c.begin(), c.end(), [](long v) { return v != 0; });
      if (first != c.end() && *first > 0) {
        Form g = Form::from_ints(m, c);
        if (divide_form(f, g)) return g.primitive();
      }
      for (std::size_t i = 0; i < len; ++i) {
        if (++c[i] <= b) break;
        c[i] = -b;
      }
    }
  }
  return std::nullopt;
}

std::vector<ProjPoint> reduced_sorted(const std::vector<ProjPoint>& pts, std::uint32_t p) {
  std::vector<ProjPoint> out;
  for (const auto& q : pts) out.push_back(q.reduced_mod(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::string scan_mismatch(const PrimeScan& s) {
  for (const auto& q : s.found)
    if (!std::binary_search(s.expected.begin(), s.expected.end(), q))
      return "singular point " + q.to_string() + " mod " + std::to_string(s.p) +
             " outside the claimed nodes";
  return "scan mod " + std::to_string(s.p) + " disagrees with the claimed nodes";
}

}  // namespace

NodalCertificate certify_member(const Form& f, const PointConfig& claimed,
                                const CertifyOptions& opts) {
  if (!f.field().is_rational()) fail(ErrorCode::mode, "certification needs a curve over Q");
  if (f.degree() < 1) fail(ErrorCode::degree, "curve degree must be at least 1");
  if (f.is_zero()) fail(ErrorCode::malformed_input, "the zero form is not a curve");
  if (!claimed.field().is_rational())
    fail(ErrorCode::mode, "claimed nodes must be rational points");
  NodalCertificate cert;
  cert.curve = f.primitive();
  cert.nodes = claimed.unordered();
  cert.confidence = kConfidence;
  const long n = f.degree();
  const long d = static_cast<long>(cert.nodes.size());
  cert.genus = (n - 1) * (n - 2) / 2 - d;
  auto refute = [&](const char* check, std::string why) {
    cert.failed_check = check;
    cert.refutation = std::move(why);
    return cert;
  };

  for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
    const ProjPoint& pt = cert.nodes[i];
    auto v = classify_point(cert.curve, pt);
    if (v.kind != SingularityVerdict::Kind::node)
      return refute("node", "claimed node " + std::to_string(i) + " " + pt.to_string() + " is " +
                                verdict_name(v.kind));
    cert.witnesses.push_back({pt, v.chart, v.gradient, v.a, v.b, v.c, v.discriminant});
  }

  cert.squarefree = is_squarefree(cert.curve);
  if (!cert.squarefree) return refute("squarefree", "curve is not squarefree");

  if (cert.genus < 0) {
    cert.irreducibility = Irreducibility::refuted;
    return refute("genus", std::to_string(d) + " nodes exceed the arithmetic genus");
  }

  for (std::uint32_t p = opts.first_prime; cert.scans.size() < opts.primes; ++p) {
    if (p > opts.prime_limit)
      fail(ErrorCode::inconclusive, "fewer than " + std::to_string(opts.primes) +
                                        " usable primes below " +
                                        std::to_string(opts.prime_limit));
    if (!is_prime(p)) continue;
    PrimeScan s;
    s.p = p;
    s.expected = reduced_sorted(cert.nodes.points(), p);
    if (std::adjacent_find(s.expected.begin(), s.expected.end()) != s.expected.end()) {
      cert.skipped_primes.push_back(std::to_string(p) + ": nodes collide");
      continue;
    }
    const Form fp = cert.curve.reduced_mod(p);
    bool nodal = true;
    for (const auto& q : s.expected)
      nodal = nodal && classify_point(fp, q).kind == SingularityVerdict::Kind::node;
    if (!nodal) {
      cert.skipped_primes.push_back(std::to_string(p) + ": a node degenerates");
      continue;
    }
    s.found = singular_scan_fp(fp);
    cert.scans.push_back(s);
    if (!s.clean()) return refute("scan", scan_mismatch(s));
  }

  // A squarefree curve whose only singularities are d nodes splits as a
  // product of degrees a + b = n only if ab <= d.
  if (n == 1 || d < n - 1) {
    cert.irreducibility = Irreducibility::certified;
  } else if (d == n - 1) {
    const auto& pts = cert.nodes.points();
    if (!collinear(pts)) {
      cert.irreducibility = Irreducibility::certified;
    } else {
      Form l = line_through(pts[0], pts.size() > 1 ? pts[1] : pts[0]);
      if (pts.size() > 1 && divide_form(cert.curve, l)) {
        cert.irreducibility = Irreducibility::refuted;
        cert.factor = l;
      } else if (pts.size() > 1) {
        cert.irreducibility = Irreducibility::certified;
      }
    }
  }
  if (cert.irreducibility == Irreducibility::unknown)
    if (auto g = trial_factor(cert.curve, opts.factor_bound)) {
      cert.irreducibility = Irreducibility::refuted;
      cert.factor = *g;
    }
  if (cert.irreducibility == Irreducibility::refuted)
    return refute("factor", "curve has the factor " + cert.factor->to_string());
  cert.certified = true;
  return cert;
}

std::string verify_certificate(const NodalCertificate& cert) {
  if (cert.witnesses.size() != cert.nodes.size() && cert.certified)
    return "witness count differs from node count";
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    const auto& w = cert.witnesses[i];
    if (w.point != cert.nodes[i]) return "witness " + std::to_string(i) + " names another point";
    auto v = classify_point(cert.curve, w.point, w.chart);
    if (v.kind != SingularityVerdict::Kind::node) return "witness " + std::to_string(i) + " is not a node";
    if (v.gradient != w.gradient || v.a != w.a || v.b != w.b || v.c != w.c ||
        v.discriminant != w.discriminant)
      return "witness " + std::to_string(i) + " values do not reproduce";
  }
  if (cert.witnesses.size() == cert.nodes.size() && is_squarefree(cert.curve) != cert.squarefree)
    return "squarefree flag does not reproduce";
  for (const auto& s : cert.scans) {
    if (reduced_sorted(cert.nodes.points(), s.p) != s.expected)
      return "reduced nodes mod " + std::to_string(s.p) + " do not reproduce";
    if (singular_scan_fp(cert.curve.reduced_mod(s.p)) != s.found)
      return "scan mod " + std::to_string(s.p) + " does not reproduce";
  }
  if (cert.factor && !divide_form(cert.curve, *cert.factor)) return "stored factor does not divide";
  if (cert.certified) {
    if (cert.scans.empty()) return "no scans recorded";
    for (const auto& s : cert.scans)
      if (!s.clean()) return "certified with an unclean scan";
    if (cert.irreducibility == Irreducibility::refuted) return "certified but reducible";
  }
  return {};
}

SynthReport synth_nodal(unsigned n, std::size_t d, std::uint64_t seed, const SynthOptions& opts) {
  (void)genus(n, static_cast<long>(d));
  if (d == 0) fail(ErrorCode::malformed_input, "synthesis needs at least one node");
  SynthReport rep;
  rep.n = n;
  rep.d = d;
  rep.seed = seed;
  StratumSpec spec;
  spec.seed = derive_seed(seed, 0);
  spec.box_lo = opts.box_lo;
  spec.box_hi = opts.box_hi;
  rep.config = stratum_sample(d, spec);
  auto ls = linear_system(n, rep.config);
  rep.rank = ls.rank;
  rep.proj_dim = ls.proj_dim;
  if (ls.basis.empty())
    fail(ErrorCode::infeasible, "L_" + std::to_string(n) + " is empty: rank " +
                                    std::to_string(ls.rank) + " with " +
                                    std::to_string(monomial_count(n)) + " monomials");

  struct Attempt {
    std::optional<NodalCertificate> cert;
    std::string failure;
  };
  auto run = [&](std::size_t a) {
    Attempt out;
    SplitMix64 g(derive_seed(seed, a + 1));
    Form f(n, Field::rational());
    bool any = false;
    for (const auto& b : ls.basis) {
      const long c = g.uniform(-opts.coeff_bound, opts.coeff_bound);
      if (c == 0) continue;
      any = true;
      f = f + b.scaled(Scalar(Rational(c)));
    }
    if (!any || f.is_zero()) {
      out.failure = "zero";
      return out;
    }
    try {
      auto cert = certify_member(f, rep.config, opts.certify);
      out.failure = cert.failed_check;
      out.cert = std::move(cert);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::inconclusive) throw;
      out.failure = "inconclusive";
    }
    return out;
  };

  const std::size_t batch = std::max<unsigned>(1, opts.jobs);
  for (std::size_t start = 0; start < opts.max_attempts && !rep.ok; start += batch) {
    const std::size_t count = std::min(batch, opts.max_attempts - start);
    auto results = parallel_map<Attempt>(opts.jobs, count, [&](std::size_t i) { return run(start + i); });
    for (std::size_t i = 0; i < count; ++i) {
      ++rep.attempts;
      auto& r = results[i];
      if (r.cert && r.cert->certified) {
        rep.ok = true;
        rep.point = SigmaPoint{r.cert->curve, r.cert->nodes, std::move(*r.cert)};
        break;
      }
      if (r.failure == "node") ++rep.degenerate_node;
      else if (r.failure == "scan") ++rep.extra_singular;
      else if (r.failure == "squarefree") ++rep.not_squarefree;
      else if (r.failure == "factor" || r.failure == "genus") ++rep.reducible;
      else ++rep.other;
    }
  }
  return rep;
}

EPoint make_E_point(const SigmaPoint& sp, unsigned k) {
  EPoint e;
  e.k = k;
  e.curve = sp.curve;
  e.plucker = gamma(sp.nodes.unordered(), k);
  if (sp.curve.degree() == k) {
    auto rec = reconstruct_subspace(e.plucker, false);
    for (const auto& v : rec.rows.multiply(sp.curve.coeffs()))
      if (!v.is_zero()) fail(ErrorCode::internal, "curve lies outside the annihilated space");
  } else {
    const auto grad = partials(sp.curve);
    for (const auto& p : sp.nodes.points())
      for (const auto& g : grad)
        if (!evaluate(g, p).is_zero())
          fail(ErrorCode::internal, "curve is not singular at " + p.to_string());
  }
  return e;
}

FPoint make_F_point(const SigmaPoint& sp, const std::vector<std::size_t>& sigma, unsigned k) {
  PointConfig sorted = sp.nodes.unordered();
  FPoint f;
  f.k = k;
  f.curve = sp.curve;
  const PointConfig identity(sorted.points(), true);
  f.ordering = sigma.empty() ? identity : identity.permuted(sigma);
  f.flag = flag(f.ordering, k);
  if (f.flag.chain.back() != make_E_point(sp, k).plucker)
    fail(ErrorCode::internal, "last flag element differs from the E-point");
  return f;
}

EPoint project(const FPoint& f) {
  return EPoint{f.k, f.curve, f.flag.chain.back()};
}

FiberReport bundle_fiber_check(unsigned n, std::size_t d, unsigned k_hat,
                               const std::vector<StratumSpec>& strata, std::size_t samples,
                               unsigned jobs) {
  if (n < 1) fail(ErrorCode::degree, "curve degree must be at least 1");
  if (n > kMaxSystemDegree || d > kMaxPoints)
    fail(ErrorCode::too_large, "fiber check beyond the desk-scale caps");
  FiberReport rep;
  rep.n = n;
  rep.d = d;
  rep.k_hat = k_hat;
  rep.below_critical = n < k_hat;
  rep.expected_proj_dim = projective_dim(n) - 3 * static_cast<long>(d);
  auto smp = draw_samples(d, strata, samples);
  rep.samples = smp.size();
  auto ranks = parallel_map<std::size_t>(
      jobs, smp.size(), [&](std::size_t i) { return mat_rank(condition_matrix(n, smp[i].config)); });
  for (std::size_t i = 0; i < smp.size(); ++i) {
    const long pd = projective_dim(n) - static_cast<long>(ranks[i]);
    if (pd != rep.expected_proj_dim)
      rep.violations.push_back({smp[i].stratum, smp[i].index, n, smp[i].config, ranks[i], pd,
                                rep.expected_proj_dim});
  }
  rep.constant = rep.violations.empty();
  return rep;
}

}  // namespace severi
