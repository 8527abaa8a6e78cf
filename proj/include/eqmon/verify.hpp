#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eqmon/collapsing.hpp"

namespace eqmon {

/// Parameters of a seeded corpus of coset G-sets.
struct CorpusSpec {
  std::uint64_t seed = 1;
  std::vector<GroupSpec> groups;
  std::size_t max_points = 16;
  std::uint64_t max_monoid = 5000;
  std::size_t count = 25;
  /// When non-empty, each subgroup is generated by one of these element
  /// index lists instead of a random subset.
  std::vector<std::vector<Element>> subgroup_generators;
};

/// Throws ParseError.
CorpusSpec parse_corpus_spec(nlohmann::json const& doc);

/// The i-th G-set of the corpus. Group i cycles through spec.groups; 1 to 4
/// subgroups are drawn and redrawn until the G-set fits max_points and
/// max_monoid. Deterministic in (seed, i).
GSet random_gset(CorpusSpec const& spec, std::size_t i);

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  /// Present iff status is Fail.
  std::optional<nlohmann::json> counterexample;
  double elapsed_ms = 0.0;
  std::string note;
};

struct CheckOptions {
  /// Assert the existential claims, which only hold on specific fixtures.
  bool existential = false;
  std::uint64_t max_monoid = kDefaultEnumerationCap;
  /// Replaces the kernel criterion for L in P7. Used to mutation-test the
  /// harness itself.
  std::function<bool(EquivMap const&, EquivMap const&)> l_criterion;
};

/// "P1" ... "P23"
std::vector<std::string> const& all_check_ids();
std::string_view check_description(std::string_view id);

/// "all" or a comma-separated list. Throws UnknownCheck.
std::vector<std::string> parse_check_list(std::string_view text);

/// One report per requested check, in the requested order. Throws
/// MonoidTooLarge if End_G(X) exceeds options.max_monoid.
std::vector<CheckReport> run_checks(GSet const& X, std::vector<std::string> const& which,
                                    CheckOptions const& options = {});

struct GSetReport {
  std::size_t index = 0;
  std::size_t points = 0;
  std::size_t orbits = 0;
  std::size_t group_order = 0;
  std::uint64_t monoid_size = 0;
  std::vector<CheckReport> checks;
};

std::vector<GSetReport> run_corpus(CorpusSpec const& spec, std::vector<std::string> const& which,
                                   CheckOptions const& options = {});

bool any_failed(std::vector<GSetReport> const& reports);

/// {"gsets":[...],"summary":{...}}; timings only when with_timing is set.
nlohmann::json reports_to_json(std::vector<GSetReport> const& reports, bool with_timing);

/// Re-evaluates a counterexample outside the harness. Returns true when the
/// violation reproduces, false when it does not, and nothing when the
/// counterexample kind has no replay rule.
std::optional<bool> replay_counterexample(GSet const& X, nlohmann::json const& counterexample);

}  // namespace eqmon
