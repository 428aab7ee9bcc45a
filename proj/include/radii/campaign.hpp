#pragma once

#include "radii/audit.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace radii {

struct CampaignConfig {
  std::vector<int> dims{3};
  int symmetric_count = 100;
  int general_count = 100;
  bool include_canonical = true;
  int vertices = 20;            // vertices per random polytope
  std::uint64_t body_seed = 0;  // random body k uses body_seed + k
  AuditConfig audit;
  int jobs = 1;
};

struct CampaignEntry {
  std::string body_id;
  AuditReport report;
};

struct CampaignFailure {
  std::string body_id;
  std::string error;
};

/// Per-check aggregate with the extremal observed ratios.
struct CheckSummary {
  std::string check_id;
  int pass = 0;
  int inconclusive = 0;
  double max_numeric_ratio = 0.0;
  double max_estimate_ratio = 0.0;
  std::string extremal_body;  // body attaining max_estimate_ratio / bound
  int extremal_i = 0;
  double max_relative_ratio = 0.0;  // estimate_ratio / bound

  double pass_rate() const { return pass + inconclusive == 0 ? 1.0 : static_cast<double>(pass) / (pass + inconclusive); }
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CampaignEntry> entries;   // in generation order, independent of jobs
  std::vector<CampaignFailure> failures;
  std::vector<CheckSummary> summary;    // catalog order, checks that ran at least once
  double seconds = 0.0;
};

/// The bodies a campaign audits, in order: canonical bodies per dimension, then
/// random symmetric, then random general polytopes.
std::vector<std::pair<std::string, Body>> campaign_bodies(const CampaignConfig& config);

/// Audits every body on a pool of config.jobs workers. A body that throws is
/// recorded as a failure and the rest still run. `on_done` (if set) is called
/// in generation order as soon as a prefix of the bodies is complete.
CampaignReport run_campaign(const CampaignConfig& config, const std::function<void(const CampaignEntry&)>& on_done = {});

/// Rows: body_id, check_id, n, i, numeric_ratio, bound, slack, verdict, starts, seconds.
void write_campaign_csv_header(std::ostream& out);
void write_campaign_csv_rows(std::ostream& out, const CampaignEntry& entry, bool timing);

}  // namespace radii
