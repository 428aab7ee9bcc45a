#include "radii/campaign.hpp"

#include "radii/errors.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

namespace radii {

namespace {

std::string padded(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", k);
  return buf;
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::pair<std::string, Body>> campaign_bodies(const CampaignConfig& config) {
  std::vector<std::pair<std::string, Body>> out;
  for (int n : config.dims) {
    if (n < 2 || n > kMaxDim) fail(ErrorKind::BadDimension, "campaign dimensions must lie in 2..5");
    const std::string dim = std::to_string(n);
    if (config.include_canonical) {
      out.emplace_back("cube-" + dim, make_canonical(CanonicalKind::Cube, n));
      out.emplace_back("crosspolytope-" + dim, make_canonical(CanonicalKind::Crosspolytope, n));
      out.emplace_back("simplex-" + dim, make_canonical(CanonicalKind::RegularSimplex, n));
      out.emplace_back("ball-" + dim, make_canonical(CanonicalKind::Ball, n));
    }
    for (int k = 0; k < config.symmetric_count; ++k) {
      out.emplace_back("sym-" + dim + "-" + padded(k), random_polytope(n, config.vertices + config.vertices % 2, true, config.body_seed + k));
    }
    for (int k = 0; k < config.general_count; ++k) {
      out.emplace_back("gen-" + dim + "-" + padded(k), random_polytope(n, config.vertices, false, config.body_seed + k));
    }
  }
  return out;
}

CampaignReport run_campaign(const CampaignConfig& config, const std::function<void(const CampaignEntry&)>& on_done) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.config = config;
  const auto bodies = campaign_bodies(config);
  const std::size_t count = bodies.size();
  std::vector<std::optional<CampaignEntry>> done(count);
  std::vector<std::optional<std::string>> errors(count);
  std::vector<char> finished(count, 0);

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t flushed = 0;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      std::optional<CampaignEntry> entry;
      std::optional<std::string> error;
      try {
        entry = CampaignEntry{bodies[k].first, audit_body(bodies[k].second, config.audit)};
      } catch (const std::exception& e) {
        error = e.what();
      }
      std::lock_guard<std::mutex> lock(mu);
      done[k] = std::move(entry);
      errors[k] = std::move(error);
      finished[k] = 1;
      // Report the completed prefix so partial results survive an abort.
      while (flushed < count && finished[flushed]) {
        if (on_done && done[flushed]) on_done(*done[flushed]);
        ++flushed;
      }
    }
  };
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1 || count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, CheckSummary> by_id;
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) {
      rep.failures.push_back({bodies[k].first, *errors[k]});
      continue;
    }
    for (const auto& c : done[k]->report.checks) {
      CheckSummary& s = by_id[c.check_id];
      s.check_id = c.check_id;
      (c.verdict == Verdict::Pass ? s.pass : s.inconclusive) += 1;
      s.max_numeric_ratio = std::max(s.max_numeric_ratio, c.numeric_ratio);
      s.max_estimate_ratio = std::max(s.max_estimate_ratio, c.estimate_ratio);
      const double rel = c.estimate_ratio / c.bound;
      if (rel > s.max_relative_ratio) {
        s.max_relative_ratio = rel;
        s.extremal_body = done[k]->body_id;
        s.extremal_i = c.i;
      }
    }
    rep.entries.push_back(std::move(*done[k]));
  }
  for (const auto& check : catalog()) {
    if (auto it = by_id.find(check.id); it != by_id.end()) rep.summary.push_back(it->second);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void write_campaign_csv_header(std::ostream& out) {
  out << "body_id,check_id,n,i,numeric_ratio,bound,slack,verdict,starts,seconds\n";
}

void write_campaign_csv_rows(std::ostream& out, const CampaignEntry& entry, bool timing) {
  const AuditReport& r = entry.report;
  for (const auto& c : r.checks) {
    out << entry.body_id << ',' << c.check_id << ',' << r.n << ',' << c.i << ',' << number(c.numeric_ratio) << ',' << number(c.bound)
        << ',' << number(c.slack) << ',' << to_string(c.verdict) << ',' << r.config.search.starts << ','
        << (timing ? number(r.seconds) : std::string()) << '\n';
  }
}

}  // namespace radii
