#pragma once

#include "radii/bodies.hpp"
#include "radii/config.hpp"
#include "radii/successive_radii.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radii {

/// There is deliberately no "violation" value: an estimate ratio above a bound
/// says nothing about the true ratio.
enum class Verdict { Pass, Inconclusive };
std::string_view to_string(Verdict v);

/// One catalog entry. `index` is the i of the check (the r-type index where
/// the check has one); `applies` and `bound` are total for 1 <= i <= n.
struct InequalityCheck {
  std::string id;
  std::string statement;
  std::function<bool(int n, bool symmetric, int i)> applies;
  std::function<double(int n, int i)> bound;
};

const std::vector<InequalityCheck>& catalog();
const InequalityCheck& find_check(std::string_view id);

struct AuditConfig {
  SearchConfig search;
  CertifyConfig certify;
  Tolerances tol;
  /// Gauge for MINK; when empty an axis-aligned ellipsoid with semiaxes
  /// 1, 1.5, 2, ... is used.
  std::optional<Ellipsoid> gauge;
};

struct CheckResult {
  std::string check_id;
  int i = 0;
  double numeric_ratio = 0.0;   // certified: numerator upper bound / denominator lower bound
  double estimate_ratio = 0.0;  // ratio of the raw estimates
  double bound = 0.0;
  double slack = 0.0;           // bound - numeric_ratio
  Verdict verdict = Verdict::Inconclusive;
};

struct AuditReport {
  std::string body;
  int n = 0;
  bool symmetric = false;
  std::uint64_t body_hash = 0;
  AuditConfig config;
  RadiiProfile profile;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
};

AuditReport audit_body(const Body& body, const AuditConfig& config = {});

enum class OracleKind { Cube, Crosspolytope, Simplex };
std::optional<OracleKind> parse_oracle_kind(std::string_view name);

/// Closed-form R_{n-i+1}/r_i for cube, crosspolytope and regular simplex.
/// Throws OutOfDomain.
double known_ratio_oracle(OracleKind kind, int n, int i);

}  // namespace radii
