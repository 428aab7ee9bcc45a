#include "radii/audit.hpp"
#include "radii/campaign.hpp"
#include "radii/constructions.hpp"
#include "radii/errors.hpp"
#include "radii/json_io.hpp"
#include "radii/successive_radii.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

using namespace radii;

namespace {

struct Options {
  int starts = 64;
  std::uint64_t seed = 0;
  int jobs = 0;
  bool timing = false;
  bool no_certify = false;
  std::vector<std::string> tol;
  std::string body;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("radii");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("RADII_LOG");
  const std::string level = env ? env : "quiet";
  if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else {
    spdlog::set_level(spdlog::level::off);
  }
}

Tolerances tolerances(const Options& o) {
  Tolerances t;
  for (const auto& kv : o.tol) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidInput, "--tol expects key=value, got " + kv);
    const std::string key = kv.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "--tol value for " + key + " is not a number");
    }
    if (key == "lp_feasibility") {
      t.lp_feasibility = value;
    } else if (key == "contact") {
      t.contact = value;
    } else if (key == "interior_shrink") {
      t.interior_shrink = value;
    } else if (key == "verdict_slack") {
      t.verdict_slack = value;
    } else {
      fail(ErrorKind::InvalidInput, "unknown tolerance " + key);
    }
  }
  return t;
}

SearchConfig search(const Options& o) {
  SearchConfig s;
  s.starts = o.starts;
  s.seed = o.seed;
  return s;
}

CertifyConfig certify(const Options& o) {
  CertifyConfig c;
  c.enabled = !o.no_certify;
  return c;
}

Json config_echo(const Options& o) {
  return Json{{"search", to_json(search(o))}, {"certify", to_json(certify(o))}};
}

void emit(const Json& j) { std::cout << dump_json(j); }

Frame plane_from(const std::vector<double>& normal, int n) {
  if (normal.empty()) return Frame::coordinate(n, std::vector<int>{0, 1});
  if (static_cast<int>(normal.size()) != n) fail(ErrorKind::DimensionMismatch, "--normal must have one entry per coordinate");
  Vector v(n);
  for (int k = 0; k < n; ++k) v(k) = normal[static_cast<std::size_t>(k)];
  return orthogonal_complement_frame(v);
}

// Largest origin-centered disc inside the shadow K|L.
double default_disc(const Body& body, const Frame& plane) {
  const HPolytope shadow = polygon_hrep(project_points(polytope_model(body).vertices, plane));
  return *std::min_element(shadow.offsets.begin(), shadow.offsets.end());
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--starts", o.starts, "multi-start budget")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "search seed");
  cmd->add_option("--tol", o.tol, "tolerance override key=value");
  cmd->add_flag("--timing", o.timing, "include wall-clock timings in the output");
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Successive inner and outer radii of convex bodies"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "radii profile of a body");
  int index = 0;
  add_common(compute, o);
  compute->add_option("--body", o.body, "body JSON file")->required();
  compute->add_option("--i", index, "only this index");
  compute->add_flag("--no-certify", o.no_certify, "skip the branch-and-bound brackets");

  auto* audit = app.add_subcommand("audit", "run the inequality catalog on a body");
  add_common(audit, o);
  audit->add_option("--body", o.body, "body JSON file")->required();
  audit->add_flag("--no-certify", o.no_certify, "skip the branch-and-bound brackets");

  auto* campaign = app.add_subcommand("campaign", "audit canonical and random bodies");
  CampaignConfig cc;
  std::string out_dir;
  bool no_canonical = false;
  add_common(campaign, o);
  campaign->add_option("--out", out_dir, "output directory")->required();
  campaign->add_option("--dims", cc.dims, "dimensions")->delimiter(',');
  campaign->add_option("--symmetric", cc.symmetric_count, "random symmetric bodies per dimension");
  campaign->add_option("--general", cc.general_count, "random general bodies per dimension");
  campaign->add_option("--vertices", cc.vertices, "vertices per random body");
  campaign->add_option("--body-seed", cc.body_seed, "seed of the first random body");
  campaign->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
  campaign->add_flag("--no-canonical", no_canonical, "skip cube, crosspolytope, simplex and ball");
  campaign->add_flag("--no-certify", o.no_certify, "skip the branch-and-bound brackets");

  auto* construct = app.add_subcommand("construct", "constructive witnesses");
  std::string what;
  std::vector<double> normal;
  double radius = 0.0;
  bool bound = false;
  add_common(construct, o);
  construct->add_option("what", what, "hexagon | square | parallelogram | trapezoid | touching")
      ->required()
      ->check(CLI::IsMember({"hexagon", "square", "parallelogram", "trapezoid", "touching"}));
  construct->add_option("--body", o.body, "body JSON file")->required();
  construct->add_option("--normal", normal, "plane normal for hexagon / square (default e3)")->delimiter(',');
  construct->add_option("--r", radius, "disc radius (default: largest centered disc in the shadow)");
  construct->add_flag("--bound", bound, "hexagon: run it on the r~_2 witness plane and certify r_2");

  auto* perelman = app.add_subcommand("perelman-constant", "the constant of the R_2/r_2 bound in R^3");
  std::string pipeline_body;
  add_common(perelman, o);
  perelman->add_option("--body", pipeline_body, "also run the proof pipeline on this body");

  auto* santalo = app.add_subcommand("santalo", "slack of the planar (R, D, r) inequality");
  double big_r = -1.0;
  double diam = -1.0;
  double small_r = -1.0;
  santalo->add_option("--R", big_r, "circumradius");
  santalo->add_option("--D", diam, "diameter");
  santalo->add_option("--r", small_r, "inradius");
  santalo->add_option("--body", o.body, "planar body JSON file");

  auto* oracle = app.add_subcommand("oracle", "closed-form R_{n-i+1}/r_i for canonical bodies");
  std::string kind;
  int on = 0;
  int oi = 0;
  oracle->add_option("--kind", kind, "cube | crosspolytope | simplex")->required();
  oracle->add_option("--n", on, "dimension")->required();
  oracle->add_option("--i", oi, "index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Tolerances tol = tolerances(o);
    if (*compute) {
      const Body body = load_body(o.body);
      spdlog::info("compute: {} (n = {}), {} starts", body.label(), body.dim(), o.starts);
      const RadiiProfile p = radii_profile(body, search(o), certify(o));
      Json j = to_json(p);
      if (index != 0) {
        if (index < 1 || index > p.n) fail(ErrorKind::InvalidInput, "--i must lie in 1..n");
        const auto k = static_cast<std::size_t>(index - 1);
        j = Json{{"n", p.n}, {"i", index}, {"outer", to_json(p.outer[k])}};
        if (!p.inner_section.empty()) {
          j["inner_section"] = to_json(p.inner_section[k]);
          j["inner_projection"] = to_json(p.inner_projection[k]);
        }
      }
      j["body"] = body.label();
      j["config"] = config_echo(o);
      emit(j);
    } else if (*audit) {
      const Body body = load_body(o.body);
      AuditConfig ac;
      ac.search = search(o);
      ac.certify = certify(o);
      ac.tol = tol;
      emit(to_json(audit_body(body, ac), o.timing));
    } else if (*campaign) {
      cc.include_canonical = !no_canonical;
      cc.audit.search = search(o);
      cc.audit.certify = certify(o);
      cc.audit.tol = tol;
      cc.jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      std::filesystem::create_directories(out_dir);
      const auto dir = std::filesystem::path(out_dir);
      std::ofstream csv(dir / "campaign.csv");
      if (!csv) fail(ErrorKind::InvalidInput, "cannot write to " + out_dir);
      write_campaign_csv_header(csv);
      const CampaignReport rep = run_campaign(cc, [&](const CampaignEntry& e) {
        spdlog::info("audited {}", e.body_id);
        write_campaign_csv_rows(csv, e, o.timing);
        csv.flush();
      });
      for (const auto& f : rep.failures) spdlog::warn("{} failed: {}", f.body_id, f.error);
      std::ofstream(dir / "campaign.json") << dump_json(to_json(rep, o.timing));
      Json summary = Json::array();
      for (const auto& s : rep.summary) summary.push_back(Json{{"check_id", s.check_id}, {"pass", s.pass}, {"inconclusive", s.inconclusive}});
      emit(Json{{"bodies", rep.entries.size()}, {"failures", rep.failures.size()}, {"summary", summary}});
    } else if (*construct) {
      const Body body = load_body(o.body);
      const SearchConfig s = search(o);
      if (what == "hexagon" && bound) {
        emit(to_json(symmetric_section_bound(body, s)));
      } else if (what == "hexagon" || what == "square") {
        const Frame plane = plane_from(normal, body.dim());
        const double r = radius > 0 ? radius : default_disc(body, plane);
        emit(what == "hexagon" ? to_json(hexagon_section(body, plane, r, tol)) : to_json(square_section(body, plane, r, tol)));
      } else if (what == "parallelogram") {
        emit(to_json(parallelogram_diameter_bound(body, s)));
      } else if (what == "trapezoid") {
        emit(to_json(trapezoid_width_bound(body, s)));
      } else {
        emit(to_json(touching_points(body, tol)));
      }
    } else if (*perelman) {
      Json j = to_json(perelman_constant());
      if (!pipeline_body.empty()) j["pipeline"] = to_json(perelman_pipeline(load_body(pipeline_body), search(o)));
      emit(j);
    } else if (*santalo) {
      if (!o.body.empty()) {
        const Body body = load_body(o.body);
        if (body.dim() != 2) fail(ErrorKind::BadDimension, "santalo needs a planar body");
        const auto [rr, dd, ri] = planar_radii(polytope_model(body).vertices);
        big_r = rr;
        diam = dd;
        small_r = ri;
      } else if (big_r < 0 || diam < 0 || small_r < 0) {
        fail(ErrorKind::InvalidInput, "santalo needs --R, --D and --r, or --body");
      }
      emit(Json{{"R", big_r}, {"D", diam}, {"r", small_r}, {"slack", santalo_slack(big_r, diam, small_r)}});
    } else if (*oracle) {
      const auto k = parse_oracle_kind(kind);
      if (!k) fail(ErrorKind::InvalidInput, "unknown oracle kind " + kind);
      emit(Json{{"kind", kind}, {"n", on}, {"i", oi}, {"ratio", known_ratio_oracle(*k, on, oi)}});
    }
  } catch (const RadiiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::CertificateFailed ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
