#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hess {

struct VerifyFailure {
  std::string w;
  std::string h;
  std::string detail;
};

/// Result of one theorem sweep. `pairs_checked` counts the units in the
/// statement's quantifier domain (see the catalog summary of each id); for
/// unrestricted per-(w,h) sweeps it equals sum over sizes of n! * Catalan(n).
struct VerificationReport {
  std::string theorem_id;
  std::string summary;
  int n_min = 1;
  int n_max = 1;
  std::uint64_t pairs_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<VerifyFailure> failures;  // sweep order; capped at failure_cap
  std::uint64_t skips = 0;
  std::string skip_reason;
  double wall_seconds = 0.0;
  bool complete = true;
  std::string note;

  bool pass() const { return failure_count == 0 && complete; }
};

struct VerifyOptions {
  int jobs = 1;                    // worker threads, partitioned by h
  std::uint64_t seed = 12345;      // randomized cross-checks only
  std::size_t failure_cap = 1000;  // stored failures; the count keeps going
};

/// (id, summary) for every verifiable statement, in canonical order.
std::vector<std::pair<std::string, std::string>> theorem_catalog();
bool is_theorem_id(std::string_view id);

/// Sweeps every (w, h) in scope of the statement for sizes 1..n. Sizes above
/// 8 are not swept and flag the report incomplete. Deterministic: identical
/// failure ordering regardless of the job count.
VerificationReport verify_theorem(std::string_view id, int n, const VerifyOptions& opt = {});

struct Counterexample {
  std::string w;
  std::string h;
  std::string detail;
};

/// `asserted` predicates are expected to have no counterexample; exploratory
/// ones record whatever the search finds.
struct PredicateResult {
  std::string predicate_id;
  std::string summary;
  int n_min = 1;
  int n_max = 1;
  bool asserted = true;
  std::uint64_t pairs_checked = 0;
  std::optional<Counterexample> counterexample;
  double wall_seconds = 0.0;
  bool complete = true;

  bool pass() const { return !asserted || !counterexample; }
};

std::vector<std::pair<std::string, std::string>> predicate_catalog();
bool is_predicate_id(std::string_view id);
PredicateResult find_counterexample(std::string_view predicate_id, int n,
                                    const VerifyOptions& opt = {});

/// One row per (w, h) at exactly size n: the canonical sweep table.
struct ScanRow {
  std::string w;
  std::string h;
  bool generator = false;
  bool regular = false;
  int min_deg = 0;
  int max_deg = 0;
  bool avoids_b = false;
  bool avoids_c = false;
  std::string first_witness;  // "pattern:(i,j,k,l[,m])" or empty
};

std::vector<ScanRow> scan_pairs(int n);

std::string report_json(const VerificationReport& r, bool timings = false);
std::string report_text(const VerificationReport& r, bool timings = false);
std::string predicate_json(const PredicateResult& r, bool timings = false);
std::string predicate_text(const PredicateResult& r, bool timings = false);

}  // namespace hess
