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

#include "json_io.hpp"

#include <algorithm>

namespace severi::io {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::malformed_input, std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::malformed_input, std::string("missing field \"") + key + "\"");
  return *it;
}

namespace {

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  fail(ErrorCode::malformed_input, "expected a number or a decimal string, got " + j.dump());
}

Json opt(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

template <class T, class Fn>
Json list(const std::vector<T>& v, Fn&& fn) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(fn(x));
  return a;
}

template <class T>
Json list(const std::vector<T>& v) {
  return list(v, [](const T& x) { return to_json(x); });
}

Json points(const std::vector<ProjPoint>& v) { return list(v); }

std::string tuple_key(const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

std::vector<std::size_t> parse_tuple(const std::string& s) {
  std::vector<std::size_t> t;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail(ErrorCode::malformed_input, "bad Plucker tuple key \"" + s + "\"");
    t.push_back(std::stoul(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return t;
}

Json sample_json(const SampleRank& s) {
  return Json{{"stratum", s.stratum},
              {"index", s.index},
              {"config", to_json(s.config)},
              {"rank", s.rank},
              {"prime_rank", s.prime_rank}};
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.is_poly()) return list(s.poly().coeffs(), [](const Rational& q) { return Json(to_string(q)); });
  return s.to_string();
}

Scalar scalar_from_json(const Json& j, Field field) {
  if (field.is_poly()) {
    if (!j.is_array()) fail(ErrorCode::malformed_input, "polynomial must be a coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(parse_rational(text_of(x)));
    return Scalar(Poly(std::move(c)));
  }
  return Scalar::from_rational(field, parse_rational(text_of(j)));
}

Json to_json(const Form& f) {
  return Json{{"degree", f.degree()}, {"field", f.field().to_string()}, {"coeffs", list(f.coeffs())}};
}

Form form_from_json(const Json& j) {
  const Json& deg = member(j, "degree");
  if (!deg.is_number_unsigned()) fail(ErrorCode::malformed_input, "degree must be a non-negative integer");
  const unsigned s = deg.get<unsigned>();
  Field field = j.contains("field") ? Field::parse(member(j, "field").get<std::string>()) : Field::rational();
  const Json& c = member(j, "coeffs");
  if (!c.is_array()) fail(ErrorCode::malformed_input, "coeffs must be an array");
  if (c.size() != monomial_count(s))
    fail(ErrorCode::shape, "degree " + std::to_string(s) + " needs " +
                               std::to_string(monomial_count(s)) + " coefficients, got " +
                               std::to_string(c.size()));
  std::vector<Scalar> v;
  for (const auto& x : c) v.push_back(scalar_from_json(x, field));
  return Form(s, field, std::move(v));
}

Json to_json(const ProjPoint& p) {
  return Json::array({p[0].to_string(), p[1].to_string(), p[2].to_string()});
}

ProjPoint point_from_json(const Json& j, Field field) {
  if (!j.is_array() || j.size() != 3) fail(ErrorCode::malformed_input, "a point is an array of three coordinates");
  return ProjPoint(scalar_from_json(j[0], field), scalar_from_json(j[1], field),
                   scalar_from_json(j[2], field));
}

Json to_json(const PointConfig& c) {
  return Json{{"field", c.field().to_string()}, {"ordered", c.ordered()}, {"points", points(c.points())}};
}

PointConfig config_from_json(const Json& j, bool default_ordered) {
  Field field = Field::rational();
  bool ordered = default_ordered;
  const Json* arr = &j;
  if (j.is_object()) {
    if (j.contains("field")) field = Field::parse(member(j, "field").get<std::string>());
    if (j.contains("ordered")) ordered = member(j, "ordered").get<bool>();
    arr = &member(j, "points");
  }
  if (!arr->is_array()) fail(ErrorCode::malformed_input, "points must be an array");
  std::vector<ProjPoint> pts;
  for (const auto& p : *arr) pts.push_back(point_from_json(p, field));
  return PointConfig(std::move(pts), ordered);
}

Json to_json(const PluckerPoint& p) {
  Json coords = Json::object();
  for (std::size_t i = 0; i < p.nnz(); ++i) coords[tuple_key(p.tuple(i))] = to_json(p.value(i));
  return Json{{"k", p.k},          {"d", p.d},
              {"rows", p.rows},    {"cols", p.cols},
              {"field", p.field.to_string()}, {"nnz", p.nnz()},
              {"coords", std::move(coords)}};
}

PluckerPoint plucker_from_json(const Json& j) {
  const std::size_t rows = member(j, "rows").get<std::size_t>();
  const std::size_t cols = member(j, "cols").get<std::size_t>();
  Field field = j.contains("field") ? Field::parse(member(j, "field").get<std::string>()) : Field::rational();
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> coords;
  for (const auto& [key, value] : member(j, "coords").items())
    coords.emplace_back(parse_tuple(key), scalar_from_json(value, field));
  PluckerPoint p = plucker_from_coords(rows, cols, coords);
  p.k = member(j, "k").get<unsigned>();
  p.d = member(j, "d").get<std::size_t>();
  return p;
}

Json to_json(const FlagPoint& f) { return list(f.chain); }

FlagPoint flag_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::malformed_input, "a flag is a non-empty array of Plucker points");
  FlagPoint f;
  for (const auto& x : j) f.chain.push_back(plucker_from_json(x));
  f.k = f.chain.front().k;
  return f;
}

Json to_json(const FamilyConfig& f) {
  Json paths = Json::array();
  for (const auto& p : f.paths()) {
    Json triple = Json::array();
    for (const auto& c : p) triple.push_back(to_json(Scalar(c)));
    paths.push_back(std::move(triple));
  }
  return Json{{"t_star", to_string(f.t_star())}, {"paths", std::move(paths)}};
}

FamilyConfig family_from_json(const Json& j) {
  const Json& paths = member(j, "paths");
  if (!paths.is_array()) fail(ErrorCode::malformed_input, "paths must be an array");
  std::vector<PolyPoint> out;
  for (const auto& p : paths) {
    if (!p.is_array() || p.size() != 3) fail(ErrorCode::malformed_input, "a path is three coefficient arrays");
    out.push_back({scalar_from_json(p[0], Field::poly()).poly(), scalar_from_json(p[1], Field::poly()).poly(),
                   scalar_from_json(p[2], Field::poly()).poly()});
  }
  Rational t = j.contains("t_star") ? parse_rational(text_of(member(j, "t_star"))) : Rational(0);
  return FamilyConfig(std::move(out), t);
}

Json to_json(const LinearSystemResult& r) {
  return Json{{"s", r.s},
              {"config", to_json(r.config)},
              {"rank", r.rank},
              {"proj_dim", r.proj_dim},
              {"expected_proj_dim", r.expected_proj_dim},
              {"superabundance", r.superabundance},
              {"dependent_conditions", r.dependent_conditions},
              {"basis", list(r.basis)}};
}

Json to_json(const StratumSpec& s) {
  Json j{{"name", s.name()}, {"seed", s.seed}, {"box", Json::array({s.box_lo, s.box_hi})}};
  if (s.kind == StratumKind::custom) j["points"] = points(s.points);
  return j;
}

Json to_json(const Witness& w) {
  return Json{{"stratum", w.stratum},   {"index", w.index},
              {"s", w.s},               {"config", to_json(w.config)},
              {"rank", w.rank},         {"proj_dim", w.proj_dim},
              {"expected_proj_dim", w.expected_proj_dim}};
}

Json to_json(const CriticalDegreeReport& r) {
  return Json{{"d", r.d},
              {"s_max", r.s_max},
              {"k_hat", opt(r.k_hat)},
              {"k_hat_constant", opt(r.k_hat_constant)},
              {"k_hat_nonempty", opt(r.k_hat_nonempty)},
              {"certified_strata", r.certified_strata},
              {"witnesses", list(r.witnesses)},
              {"prime_mismatches", r.prime_mismatches},
              {"samples", list(r.samples, sample_json)},
              {"reproducibility",
               Json{{"strata", list(r.strata)},
                    {"samples_per_stratum", r.samples_per_stratum},
                    {"modulus", r.modulus}}}};
}

Json to_json(const MonotoneCheck& m) {
  return Json{{"ok", m.ok},
              {"d", m.d},
              {"r_min", m.r_min},
              {"r_max", m.r_max},
              {"samples", m.samples.size()},
              {"failures", list(m.failures)}};
}

Json to_json(const LimitReport& r) {
  Json collisions = Json::array();
  for (const auto& c : r.collisions)
    collisions.push_back(Json{{"i", c.i}, {"j", c.j}, {"point", to_json(c.point)},
                              {"singular_at_point", c.singular_at_point}});
  return Json{{"k", r.k},
              {"valuation", r.valuation},
              {"decomposable", r.decomposable},
              {"interior", r.interior},
              {"matches_gamma", r.matches_gamma ? Json(*r.matches_gamma) : Json(nullptr)},
              {"limit_points", points(r.limit_points)},
              {"collisions", std::move(collisions)},
              {"kernel_dim", r.kernel_dim},
              {"generic_kernel_dim", r.generic_kernel_dim},
              {"limit", to_json(r.limit)}};
}

Json to_json(const FlagLimitReport& r) {
  Json prefixes = Json::array();
  for (const auto& p : r.prefixes)
    prefixes.push_back(Json{{"length", p.limit.d},
                            {"valuation", p.valuation},
                            {"decomposable", p.decomposable},
                            {"interior", p.interior},
                            {"kernel_dim", p.kernel_dim}});
  return Json{{"k", r.k},
              {"nested", r.nested},
              {"nesting_problem", r.nesting_problem},
              {"prefixes", std::move(prefixes)},
              {"flag", to_json(r.flag)}};
}

Json to_json(const NodalCertificate& c) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses)
    witnesses.push_back(Json{{"point", to_json(w.point)},
                             {"chart", w.chart},
                             {"gradient", Json::array({to_json(w.gradient[0]), to_json(w.gradient[1]),
                                                       to_json(w.gradient[2])})},
                             {"quadratic", Json::array({to_json(w.a), to_json(w.b), to_json(w.c)})},
                             {"discriminant", to_json(w.discriminant)}});
  Json scans = Json::array();
  for (const auto& s : c.scans)
    scans.push_back(Json{{"p", s.p}, {"expected", points(s.expected)}, {"found", points(s.found)},
                         {"clean", s.clean()}});
  return Json{{"certified", c.certified},
              {"failed_check", c.failed_check},
              {"refutation", c.refutation},
              {"curve", to_json(c.curve)},
              {"nodes", to_json(c.nodes)},
              {"genus", c.genus},
              {"witnesses", std::move(witnesses)},
              {"squarefree", c.squarefree},
              {"scans", std::move(scans)},
              {"skipped_primes", c.skipped_primes},
              {"irreducibility", irreducibility_name(c.irreducibility)},
              {"factor", c.factor ? to_json(*c.factor) : Json(nullptr)},
              {"confidence", c.confidence}};
}

NodalCertificate certificate_from_json(const Json& j) {
  NodalCertificate c;
  c.certified = member(j, "certified").get<bool>();
  c.failed_check = member(j, "failed_check").get<std::string>();
  c.refutation = member(j, "refutation").get<std::string>();
  c.curve = form_from_json(member(j, "curve"));
  c.nodes = config_from_json(member(j, "nodes"));
  c.genus = member(j, "genus").get<long>();
  const Field q = Field::rational();
  for (const auto& w : member(j, "witnesses")) {
    NodeWitness nw;
    nw.point = point_from_json(member(w, "point"), q);
    nw.chart = member(w, "chart").get<int>();
    const Json& g = member(w, "gradient");
    const Json& quad = member(w, "quadratic");
    if (g.size() != 3 || quad.size() != 3) fail(ErrorCode::malformed_input, "witness needs three gradient and three quadratic entries");
    for (std::size_t i = 0; i < 3; ++i) nw.gradient[i] = scalar_from_json(g[i], q);
    nw.a = scalar_from_json(quad[0], q);
    nw.b = scalar_from_json(quad[1], q);
    nw.c = scalar_from_json(quad[2], q);
    nw.discriminant = scalar_from_json(member(w, "discriminant"), q);
    c.witnesses.push_back(std::move(nw));
  }
  c.squarefree = member(j, "squarefree").get<bool>();
  for (const auto& s : member(j, "scans")) {
    PrimeScan ps;
    ps.p = member(s, "p").get<std::uint32_t>();
    const Field fp = Field::prime(ps.p);
    for (const auto& x : member(s, "expected")) ps.expected.push_back(point_from_json(x, fp));
    for (const auto& x : member(s, "found")) ps.found.push_back(point_from_json(x, fp));
    c.scans.push_back(std::move(ps));
  }
  c.skipped_primes = member(j, "skipped_primes").get<std::vector<std::string>>();
  const std::string irr = member(j, "irreducibility").get<std::string>();
  c.irreducibility = irr == "certified" ? Irreducibility::certified
                     : irr == "refuted" ? Irreducibility::refuted
                                        : Irreducibility::unknown;
  if (!member(j, "factor").is_null()) c.factor = form_from_json(member(j, "factor"));
  c.confidence = member(j, "confidence").get<std::string>();
  return c;
}

Json to_json(const SigmaPoint& s) {
  return Json{{"curve", to_json(s.curve)}, {"nodes", to_json(s.nodes)}, {"certificate", to_json(s.cert)}};
}

SigmaPoint sigma_from_json(const Json& j) {
  SigmaPoint s;
  s.curve = form_from_json(member(j, "curve"));
  s.nodes = config_from_json(member(j, "nodes"));
  s.cert = certificate_from_json(member(j, "certificate"));
  return s;
}

Json to_json(const SynthReport& r) {
  return Json{{"ok", r.ok},
              {"n", r.n},
              {"d", r.d},
              {"seed", r.seed},
              {"config", to_json(r.config)},
              {"rank", r.rank},
              {"proj_dim", r.proj_dim},
              {"attempts", r.attempts},
              {"failures",
               Json{{"extra_singular", r.extra_singular},
                    {"degenerate_node", r.degenerate_node},
                    {"not_squarefree", r.not_squarefree},
                    {"reducible", r.reducible},
                    {"other", r.other}}},
              {"point", r.point ? to_json(*r.point) : Json(nullptr)}};
}

Json to_json(const EPoint& e) {
  return Json{{"k", e.k}, {"curve", to_json(e.curve)}, {"plucker", to_json(e.plucker)}};
}

Json to_json(const FPoint& f) {
  return Json{{"k", f.k}, {"curve", to_json(f.curve)}, {"ordering", to_json(f.ordering)},
              {"flag", to_json(f.flag)}};
}

Json to_json(const FiberReport& r) {
  return Json{{"n", r.n},
              {"d", r.d},
              {"k_hat", r.k_hat},
              {"below_critical", r.below_critical},
              {"expected_proj_dim", r.expected_proj_dim},
              {"samples", r.samples},
              {"constant", r.constant},
              {"violations", list(r.violations)}};
}

}  // namespace severi::io
