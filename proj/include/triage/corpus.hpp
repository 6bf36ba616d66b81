// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 triage-reduce contributors

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace triage {

enum class BugStatus { kFixed, kDuplicate, kOther };

std::string_view to_string(BugStatus status);
BugStatus bug_status_from_string(std::string_view text);

// One raw bug-tracker record.
struct BugReport {
  std::int64_t id = 0;
  std::string summary;
  std::string description;
  BugStatus status = BugStatus::kOther;
  std::optional<std::string> fixer;
  std::optional<std::int64_t> dup_of;
  std::optional<std::string> product;
  std::optional<std::string> component;
};

// A report assigned to the developer who should have handled it.
struct LabeledReport {
  std::int64_t report_id = 0;
  std::string label;
  std::string text;  // summary + description
};

// Ordered developer universe with per-developer labeled-report counts.
struct DeveloperSet {
  std::vector<std::string> names;        // sorted, unique
  std::vector<std::int64_t> fix_counts;  // parallel to names

  std::size_t size() const { return names.size(); }
  // Index of a developer name, or -1 when absent.
  std::int32_t index_of(std::string_view name) const;

  static DeveloperSet from_labels(const std::vector<LabeledReport>& labeled);
};

// Counters from the labeling pass. Unlabelable reports are dropped, not fatal.
struct LabelSummary {
  std::size_t input = 0;
  std::size_t labeled_fixed = 0;
  std::size_t labeled_via_master = 0;
  std::size_t dropped_other = 0;
  std::size_t dropped_unresolved = 0;  // chain exits the corpus or cycles
  std::size_t dropped_missing_fixer = 0;
  std::size_t duplicate_cycles = 0;
};

// Parses JSON Lines records: one object per line with keys id, summary,
// description, status ("fixed"|"duplicate"|"other"), fixer, dup_of, product,
// component. Malformed records raise ParseError with the line number;
// repeated ids raise IntegrityError.
std::vector<BugReport> parse_reports(std::istream& jsonl);
std::vector<BugReport> parse_reports_file(const std::string& path);

using ReportIndex = std::unordered_map<std::int64_t, BugReport>;
ReportIndex index_reports(const std::vector<BugReport>& reports);

// Follows dup_of links to the first non-duplicate report. A non-duplicate
// input resolves to itself, so resolving a master is idempotent. Chains that
// exit the corpus resolve to nothing; cycles resolve to nothing and bump
// *cycle_count when provided.
std::optional<BugReport> resolve_duplicate(const BugReport& report,
                                           const ReportIndex& corpus,
                                           std::size_t* cycle_count = nullptr);

// Labeling policy. The default (and only) policy labels fixed reports with
// their fixer and duplicates with the fixer of their resolved master;
// everything else is dropped and counted.
enum class LabelPolicy { kMasterFixer };

std::vector<LabeledReport> label_corpus(const std::vector<BugReport>& reports,
                                        LabelPolicy policy = LabelPolicy::kMasterFixer,
                                        LabelSummary* summary = nullptr);

// Unordered duplicate pair, stored as (smaller id, larger id).
using DupPair = std::pair<std::int64_t, std::int64_t>;

// Every dup_of edge present in the parsed reports, canonicalized.
std::set<DupPair> duplicate_pairs(const std::vector<BugReport>& reports);

// For each pair whose two members are both in the labeled set, removes the
// smaller (earlier) id and keeps the later one.
std::vector<LabeledReport> drop_early_duplicates(std::vector<LabeledReport> labeled,
                                                 const std::set<DupPair>& dup_pairs);

struct FilterResult {
  std::vector<LabeledReport> reports;
  DeveloperSet developers;  // post-filter names and counts
};

// Drops every developer with fewer than min_fixed labeled reports, along with
// their reports, in a single pass. Raises EmptyCorpusError when nothing is
// left.
FilterResult filter_inactive_developers(const std::vector<LabeledReport>& labeled,
                                        std::int64_t min_fixed);

// Provenance counters for one ingestion run.
struct IngestSummary {
  std::size_t parsed = 0;
  LabelSummary labeling;
  std::size_t dedup_removed = 0;
  std::size_t empty_text_dropped = 0;
  std::size_t inactive_reports_dropped = 0;
  std::size_t developers_before_filter = 0;
  std::size_t developers_after_filter = 0;
};

// Self-contained labeled corpus, the unit the experiment pipeline consumes.
struct CorpusArtifact {
  std::vector<LabeledReport> reports;
  DeveloperSet developers;
  std::int64_t min_fixed = 10;
  IngestSummary summary;
};

// parse -> label -> drop early duplicates -> drop empty-text reports ->
// filter inactive developers.
CorpusArtifact ingest_corpus(const std::vector<BugReport>& parsed, std::int64_t min_fixed);

void save_corpus(const CorpusArtifact& corpus, const std::string& path);
CorpusArtifact load_corpus(const std::string& path);

}  // namespace triage
