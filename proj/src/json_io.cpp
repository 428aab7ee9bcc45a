#include "radii/json_io.hpp"

#include "radii/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace radii {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  fail(ErrorKind::InvalidInput, "field '" + field + "': " + why);
}

const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object()) bad_field(name, "enclosing value is not an object");
  auto it = j.find(name);
  if (it == j.end()) bad_field(name, "missing");
  return *it;
}

double number_at(const Json& j, const std::string& name) {
  if (!j.is_number()) bad_field(name, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad_field(name, "not finite");
  return v;
}

int int_at(const Json& j, const std::string& name) {
  if (!j.is_number_integer()) bad_field(name, "expected an integer");
  return j.get<int>();
}

Vector vector_at(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) bad_field(name, "expected a nonempty array of numbers");
  if (j.size() > static_cast<std::size_t>(kMaxDim)) bad_field(name, "dimension exceeds 5");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = number_at(j[k], name + "[" + std::to_string(k) + "]");
  return v;
}

Matrix matrix_at(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) bad_field(name, "expected an array of rows");
  Matrix m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Vector row = vector_at(j[r], name + "[" + std::to_string(r) + "]");
    if (r == 0) m.resize(static_cast<Eigen::Index>(j.size()), row.size());
    if (row.size() != m.cols()) bad_field(name, "rows differ in length");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

CanonicalKind canonical_kind(const std::string& s) {
  if (s == "cube") return CanonicalKind::Cube;
  if (s == "ball") return CanonicalKind::Ball;
  if (s == "crosspolytope") return CanonicalKind::Crosspolytope;
  if (s == "regular_simplex") return CanonicalKind::RegularSimplex;
  bad_field("kind", "expected cube, ball, crosspolytope or regular_simplex");
}

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += sep;
        write(out, it.value(), indent, depth + 1);
      }
      out += close;
      out += '}';
      return;
    }
    case Json::value_t::array: {
      // Short numeric arrays stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat && indent > 0 ? ", " : ",";
        first = false;
        if (!flat) out += pad;
        write(out, e, indent, depth + 1);
      }
      if (!flat) out += close;
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

Json vectors(std::span<const Vector> vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json motion_json(const RigidMotion& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rotation.rows(); ++r) rows.push_back(to_json(Vector(m.rotation.row(r).transpose())));
  return Json{{"rotation", rows}, {"translation", to_json(m.translation)}};
}

}  // namespace

Body parse_body(const Json& j) {
  const Json& type_field = field(j, "type");
  if (!type_field.is_string()) bad_field("type", "expected a string");
  const std::string type = type_field.get<std::string>();
  if (type == "vpolytope") {
    const Json& verts = field(j, "vertices");
    if (!verts.is_array() || verts.empty()) bad_field("vertices", "expected a nonempty array of points");
    VPolytope p;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      p.vertices.push_back(vector_at(verts[k], "vertices[" + std::to_string(k) + "]"));
      if (p.vertices.back().size() != p.vertices.front().size()) bad_field("vertices", "points differ in dimension");
    }
    if (auto it = j.find("symmetric"); it != j.end()) {
      if (!it->is_boolean()) bad_field("symmetric", "expected a boolean");
      p.symmetric = it->get<bool>();
    }
    return Body(std::move(p));
  }
  if (type == "ellipsoid") {
    const Vector axes = vector_at(field(j, "semiaxes"), "semiaxes");
    const int n = static_cast<int>(axes.size());
    Matrix rot = Matrix::Identity(n, n);
    if (auto it = j.find("rotation"); it != j.end()) rot = matrix_at(*it, "rotation");
    if (rot.rows() != n || rot.cols() != n) bad_field("rotation", "must be n x n for n semiaxes");
    Vector center = Vector::Zero(n);
    if (auto it = j.find("center"); it != j.end()) center = vector_at(*it, "center");
    if (center.size() != n) bad_field("center", "dimension differs from semiaxes");
    return Body(Ellipsoid::make(axes, rot, center));
  }
  if (type == "canonical") {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) bad_field("kind", "expected a string");
    const int n = int_at(field(j, "dim"), "dim");
    if (n < 1 || n > kMaxDim) bad_field("dim", "must lie in 1..5");
    return make_canonical(canonical_kind(kind.get<std::string>()), n);
  }
  if (type == "antiprism_P") return make_antiprism_P(number_at(field(j, "eps"), "eps"));
  if (type == "remark_simplex") return make_remark_simplex(number_at(field(j, "eps"), "eps"));
  bad_field("type", "unknown body type '" + type + "'");
}

Body load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open body file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return parse_body(j);
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v(k));
  return a;
}

Json to_json(const Frame& f) {
  Json cols = Json::array();
  for (int c = 0; c < f.sub_dim(); ++c) cols.push_back(to_json(Vector(f.columns().col(c))));
  return cols;
}

Json to_json(const RadiusEstimate& e) {
  Json j{{"value", e.value},         {"side", std::string(to_string(e.side))},
         {"lower", e.lower},         {"upper", e.upper},
         {"exact", e.exact},         {"starts_used", e.starts_used},
         {"converged", e.converged}, {"witness_frame", to_json(e.witness_frame)}};
  if (e.witness_offset.size() > 0) j["witness_offset"] = to_json(e.witness_offset);
  return j;
}

Json to_json(const RadiiProfile& p) {
  Json j{{"n", p.n}};
  for (const auto& [name, seq] : {std::pair{"outer", &p.outer}, {"inner_section", &p.inner_section}, {"inner_projection", &p.inner_projection}}) {
    Json a = Json::array();
    for (std::size_t k = 0; k < seq->size(); ++k) {
      Json e = to_json((*seq)[k]);
      e["i"] = k + 1;
      a.push_back(std::move(e));
    }
    j[name] = std::move(a);
  }
  return j;
}

Json to_json(const SearchConfig& c) {
  return Json{{"starts", c.starts},
              {"seed", c.seed},
              {"max_iterations", c.max_iterations},
              {"simplex_diameter", c.simplex_diameter},
              {"initial_step", c.initial_step},
              {"restarts", c.restarts}};
}

Json to_json(const CertifyConfig& c) {
  return Json{{"enabled", c.enabled}, {"relative_gap", c.relative_gap}, {"max_evaluations", c.max_evaluations}, {"initial_grid", c.initial_grid}};
}

Json to_json(const HexagonWitness& w) {
  return Json{{"p", vectors(w.p)},
              {"q", vectors(w.q)},
              {"plane_normal", to_json(w.plane_normal)},
              {"radius", w.radius},
              {"theta", w.theta},
              {"residual", w.residual},
              {"regularity", w.regularity},
              {"max_slack_violation", w.max_slack_violation},
              {"bisection_steps", w.bisection_steps}};
}

Json to_json(const SquareWitness& w) {
  return Json{{"p", vectors(w.p)},
              {"q_plus", vectors(w.q_plus)},
              {"q_minus", vectors(w.q_minus)},
              {"radius", w.radius},
              {"theta", w.theta},
              {"balance_residual", w.balance_residual},
              {"regularity", w.regularity},
              {"bisection_steps", w.bisection_steps}};
}

Json to_json(const SymmetricSectionBound& b) {
  return Json{{"projection_inradius", b.projection_inradius},
              {"projection_frame", to_json(b.projection_frame)},
              {"hexagon", to_json(b.hexagon)},
              {"section_frame", to_json(b.section_frame)},
              {"section_inradius", b.section_inradius},
              {"hexagon_inradius", b.hexagon_inradius},
              {"ratio", b.ratio}};
}

Json to_json(const ParallelogramWitness& w) {
  return Json{{"center", to_json(w.center)},
              {"p", to_json(w.p)},
              {"diameter_pair", w.diameter_pair},
              {"projected_pair", w.projected_pair},
              {"q", vectors(w.q)},
              {"vertices", vectors(w.vertices)},
              {"diameter", w.diameter},
              {"projected_diameter", w.projected_diameter},
              {"h", w.h},
              {"h_prime", w.h_prime},
              {"half_width", w.half_width},
              {"parallelogram_defect", w.parallelogram_defect},
              {"max_slack_violation", w.max_slack_violation},
              {"projection_circumradius", w.projection_circumradius},
              {"jung_bound", w.jung_bound},
              {"half_width_ok", w.half_width_ok},
              {"certified_chain_ok", w.certified_chain_ok},
              {"outer_estimate", w.outer_estimate},
              {"inner_estimate", w.inner_estimate},
              {"chain_bound", w.chain_bound},
              {"chain_ok", w.chain_ok}};
}

Json to_json(const TrapezoidWitness& w) {
  return Json{{"omega", w.omega},
              {"width_direction", to_json(w.width_direction)},
              {"chord_length", w.chord_length},
              {"omega_prime", w.omega_prime},
              {"a", w.a},
              {"b", w.b},
              {"box", w.box},
              {"box_excess", w.box_excess},
              {"plane_circumradius", w.plane_circumradius},
              {"box_circumradius", w.box_circumradius},
              {"section_inradius", w.section_inradius},
              {"motion", motion_json(w.motion)},
              {"width_ok", w.width_ok},
              {"box_ok", w.box_ok},
              {"outer_ok", w.outer_ok},
              {"certified_chain_ok", w.certified_chain_ok},
              {"outer_estimate", w.outer_estimate},
              {"inner_estimate", w.inner_estimate},
              {"chain_bound", w.chain_bound},
              {"chain_ok", w.chain_ok}};
}

Json to_json(const TouchingSet& t) {
  return Json{{"indices", t.indices}, {"lambda", t.lambda}, {"center", to_json(t.center)}, {"radius", t.radius}, {"residual", t.residual}};
}

Json to_json(const PerelmanConstant& c) { return Json{{"t_star", c.t_star}, {"bound", c.bound}}; }

Json to_json(const PerelmanPipeline& p) {
  return Json{{"diameter_direction", to_json(p.diameter_direction)},
              {"projected_diameter", p.projected_diameter},
              {"touching", to_json(p.touching)},
              {"triangle_circumradius", p.triangle_circumradius},
              {"triangle_diameter", p.triangle_diameter},
              {"triangle_inradius", p.triangle_inradius},
              {"lifted_inradius", p.lifted_inradius},
              {"santalo", p.santalo},
              {"lift_ok", p.lift_ok},
              {"diameter_ok", p.diameter_ok},
              {"outer_estimate", p.outer_estimate},
              {"inner_estimate", p.inner_estimate},
              {"ratio", p.ratio},
              {"bound", p.bound},
              {"pass", p.pass}};
}

Json to_json(const CheckResult& c) {
  return Json{{"check_id", c.check_id},
              {"i", c.i},
              {"numeric_ratio", c.numeric_ratio},
              {"estimate_ratio", c.estimate_ratio},
              {"bound", c.bound},
              {"slack", c.slack},
              {"verdict", std::string(to_string(c.verdict))}};
}

Json to_json(const AuditReport& r, bool timing) {
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.body_hash));
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j{{"body", r.body},
         {"n", r.n},
         {"symmetric", r.symmetric},
         {"body_hash", hash},
         {"config", Json{{"search", to_json(r.config.search)}, {"certify", to_json(r.config.certify)}, {"verdict_slack", r.config.tol.verdict_slack}}},
         {"profile", to_json(r.profile)},
         {"checks", checks}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

Json to_json(const CampaignReport& r, bool timing) {
  Json bodies = Json::array();
  for (const auto& e : r.entries) {
    Json checks = Json::array();
    for (const auto& c : e.report.checks) checks.push_back(to_json(c));
    Json b{{"body_id", e.body_id}, {"n", e.report.n}, {"symmetric", e.report.symmetric}, {"checks", checks}};
    if (timing) b["seconds"] = e.report.seconds;
    bodies.push_back(std::move(b));
  }
  Json summary = Json::array();
  for (const auto& s : r.summary) {
    summary.push_back(Json{{"check_id", s.check_id},
                           {"pass", s.pass},
                           {"inconclusive", s.inconclusive},
                           {"pass_rate", s.pass_rate()},
                           {"max_numeric_ratio", s.max_numeric_ratio},
                           {"max_estimate_ratio", s.max_estimate_ratio},
                           {"max_relative_ratio", s.max_relative_ratio},
                           {"extremal_body", s.extremal_body},
                           {"extremal_i", s.extremal_i}});
  }
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"body_id", f.body_id}, {"error", f.error}});
  const CampaignConfig& c = r.config;
  Json j{{"config",
          Json{{"dims", c.dims},
               {"symmetric_count", c.symmetric_count},
               {"general_count", c.general_count},
               {"include_canonical", c.include_canonical},
               {"vertices", c.vertices},
               {"body_seed", c.body_seed},
               {"search", to_json(c.audit.search)},
               {"certify", to_json(c.audit.certify)}}},
         {"summary", summary},
         {"failures", failures},
         {"bodies", bodies}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  out += '\n';
  return out;
}

}  // namespace radii
