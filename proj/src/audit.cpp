#include "radii/audit.hpp"

#include "radii/errors.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace radii {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool any(int, bool, int) { return true; }

std::vector<InequalityCheck> build_catalog() {
  const double sqrt2 = std::numbers::sqrt2;
  const double sqrt3 = std::numbers::sqrt3;
  auto n3_i2 = [](int n, bool, int i) { return n == 3 && i == 2; };
  auto sym_n3_i2 = [](int n, bool s, int i) { return s && n == 3 && i == 2; };
  auto sym = [](int, bool s, int) { return s; };
  auto one = [](int, int) { return 1.0; };
  return {
      {"PP", "R_{n-i+1}/r_i <= i+1", any, [](int, int i) { return i + 1.0; }},
      {"JUNG", "R_n/r_1 <= sqrt(2n/(n+1))", [](int n, bool, int i) { return n >= 2 && i == 1; },
       [](int n, int) { return std::sqrt(2.0 * n / (n + 1.0)); }},
      {"STEIN", "R_1/r_n <= sqrt(n) (n odd), (n+1)/sqrt(n+2) (n even)", [](int n, bool, int i) { return n >= 2 && i == n; },
       [](int n, int) { return n % 2 == 1 ? std::sqrt(static_cast<double>(n)) : (n + 1.0) / std::sqrt(n + 2.0); }},
      {"PP-SYM", "R_{n-i+1}/r_i <= sqrt(e) min{sqrt(i), sqrt(n-i+1)}, K = -K", sym,
       [](int n, int i) { return std::sqrt(std::exp(1.0)) * std::sqrt(std::min<double>(i, n - i + 1)); }},
      {"GO-TILDE", "R_{n-i+1}/r~_i <= sqrt(n-i+1), K = -K", sym, [](int n, int i) { return std::sqrt(n - i + 1.0); }},
      {"T11", "R_2/r_2 <= 2 sqrt2/sqrt3, K = -K, n = 3", sym_n3_i2, [=](int, int) { return 2.0 * sqrt2 / sqrt3; }},
      {"T12", "R_{n-1}/r_2 <= 2 sqrt2 sqrt((n-1)/n)", [](int n, bool, int i) { return n >= 2 && i == 2; },
       [=](int n, int) { return 2.0 * sqrt2 * std::sqrt((n - 1.0) / n); }},
      {"T13", "R_2/r_{n-1} <= 2 sqrt2 sqrt(n)", [](int n, bool, int i) { return n >= 3 && i == n - 1; },
       [=](int n, int) { return 2.0 * sqrt2 * std::sqrt(static_cast<double>(n)); }},
      {"T22", "r~_2/r_2 <= 2/sqrt3, K = -K, n = 3", sym_n3_i2, [=](int, int) { return 2.0 / sqrt3; }},
      {"T24", "r~_2/r_2 <= sqrt2, n = 3", n3_i2, [=](int, int) { return sqrt2; }},
      {"C44", "r~_i/r_i <= i", any, [](int, int i) { return static_cast<double>(i); }},
      {"P45", "R_2/r_2 <= 2.151, n = 3", n3_i2, [](int, int) { return 2.151; }},
      {"BH-REV", "r_i/R_{n-i+1} <= 1", any, one},
      {"MONO", "R_i <= R_{i+1}, r_i >= r_{i+1}, r~_i >= r~_{i+1}", [](int n, bool, int i) { return i < n; }, one},
      {"MINK", "R_{n-i+1}(K,E)/r_i(K,E) <= sqrt(n) (K = -K) or n, E an ellipsoid", any,
       [](int n, int) { return minkowski_bound(n, false, true); }},
  };
}

struct Bracketed {
  double certified = kInf;
  double estimate = kInf;
};

// Upper bound of the numerator over lower bound of the denominator.
Bracketed quotient(const RadiusEstimate& num, const RadiusEstimate& den) {
  Bracketed q;
  q.estimate = num.value / den.value;
  q.certified = den.lower > 0 ? num.upper / den.lower : kInf;
  return q;
}

Bracketed worst(Bracketed a, const Bracketed& b) {
  a.certified = std::max(a.certified, b.certified);
  a.estimate = std::max(a.estimate, b.estimate);
  return a;
}

Ellipsoid default_gauge(int n) {
  Vector axes(n);
  for (int k = 0; k < n; ++k) axes(k) = 1.0 + 0.5 * k;
  return Ellipsoid::make(axes, Matrix::Identity(n, n), Vector::Zero(n));
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "Pass" : "Inconclusive"; }

const std::vector<InequalityCheck>& catalog() {
  static const std::vector<InequalityCheck> checks = build_catalog();
  return checks;
}

const InequalityCheck& find_check(std::string_view id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return c;
  }
  fail(ErrorKind::InvalidInput, "unknown check id " + std::string(id));
}

AuditReport audit_body(const Body& body, const AuditConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  AuditReport rep;
  rep.body = body.label();
  rep.n = body.dim();
  rep.symmetric = body.symmetric();
  rep.body_hash = body.hash();
  rep.config = config;
  rep.profile = radii_profile(body, config.search, config.certify);
  const int n = rep.n;
  const RadiiProfile& p = rep.profile;
  const bool inner = !p.inner_section.empty();
  auto R = [&](int j) -> const RadiusEstimate& { return p.outer[static_cast<std::size_t>(j - 1)]; };
  auto r = [&](int j) -> const RadiusEstimate& { return p.inner_section[static_cast<std::size_t>(j - 1)]; };
  auto rt = [&](int j) -> const RadiusEstimate& { return p.inner_projection[static_cast<std::size_t>(j - 1)]; };

  // Generalized radii in the gauge: the Euclidean radii of f^{-1} K.
  std::optional<RadiiProfile> gauge_profile;
  if (inner) {
    const Ellipsoid gauge = config.gauge ? *config.gauge : default_gauge(n);
    if (gauge.dim() != n) fail(ErrorKind::DimensionMismatch, "gauge and body dimensions differ");
    if (!gauge.centered()) fail(ErrorKind::NotCentered, "gauge ellipsoid must be centered at the origin");
    const Body normalized = transform_body(body, gauge.shape().inverse(), Vector::Zero(n));
    CertifyConfig off = config.certify;
    off.enabled = false;
    gauge_profile = radii_profile(normalized, config.search, off);
  }

  for (const auto& check : catalog()) {
    for (int i = 1; i <= n; ++i) {
      if (!check.applies(n, rep.symmetric, i)) continue;
      const std::string& id = check.id;
      std::optional<Bracketed> q;
      if (id == "PP" || id == "PP-SYM") {
        if (inner) q = quotient(R(n - i + 1), r(i));
      } else if (id == "JUNG") {
        if (inner) q = quotient(R(n), r(1));
      } else if (id == "STEIN") {
        if (inner) q = quotient(R(1), r(n));
      } else if (id == "GO-TILDE") {
        if (inner) q = quotient(R(n - i + 1), rt(i));
      } else if (id == "T11" || id == "P45") {
        if (inner) q = quotient(R(2), r(2));
      } else if (id == "T12") {
        if (inner) q = quotient(R(n - 1), r(2));
      } else if (id == "T13") {
        if (inner) q = quotient(R(2), r(n - 1));
      } else if (id == "T22" || id == "T24") {
        if (inner) q = quotient(rt(2), r(2));
      } else if (id == "C44") {
        if (inner) q = quotient(rt(i), r(i));
      } else if (id == "BH-REV") {
        if (inner) q = quotient(r(i), R(n - i + 1));
      } else if (id == "MONO") {
        Bracketed b = quotient(R(i), R(i + 1));
        if (inner) b = worst(worst(b, quotient(r(i + 1), r(i))), quotient(rt(i + 1), rt(i)));
        q = b;
      } else if (id == "MINK") {
        if (gauge_profile) {
          q = quotient(gauge_profile->outer[static_cast<std::size_t>(n - i)], gauge_profile->inner_section[static_cast<std::size_t>(i - 1)]);
        }
      }
      if (!q) continue;
      CheckResult c;
      c.check_id = id;
      c.i = i;
      c.numeric_ratio = q->certified;
      c.estimate_ratio = q->estimate;
      c.bound = id == "MINK" ? minkowski_bound(n, rep.symmetric, true) : check.bound(n, i);
      c.slack = c.bound - c.numeric_ratio;
      c.verdict = c.numeric_ratio <= c.bound + config.tol.verdict_slack ? Verdict::Pass : Verdict::Inconclusive;
      rep.checks.push_back(std::move(c));
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::optional<OracleKind> parse_oracle_kind(std::string_view name) {
  if (name == "cube") return OracleKind::Cube;
  if (name == "crosspolytope") return OracleKind::Crosspolytope;
  if (name == "simplex" || name == "regular_simplex") return OracleKind::Simplex;
  return std::nullopt;
}

double known_ratio_oracle(OracleKind kind, int n, int i) {
  if (n < 1 || i < 1 || i > n) fail(ErrorKind::OutOfDomain, "oracle needs 1 <= i <= n");
  const double nn = n;
  const double ii = i;
  if (kind != OracleKind::Simplex) return std::sqrt((nn - ii + 1.0) * ii / nn);
  if (n % 2 == 0 && i == n) return (nn + 1.0) / std::sqrt(nn + 2.0);
  if (n % 2 == 0 && i == 2) return (2.0 * nn - 1.0) * std::sqrt(3.0) / std::sqrt(2.0 * nn * (nn + 1.0));
  return std::sqrt(1.0 - ii / (nn + 1.0)) * std::sqrt(ii * (ii + 1.0));
}

}  // namespace radii
