// Command-line front end: validate, enumerate, count, green, collapsings, verify.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eqmon/error.hpp"
#include "eqmon/io.hpp"
#include "eqmon/verify.hpp"

using namespace eqmon;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Job {
  std::string input;
  std::string format = "ascii";
  std::uint64_t cap = kDefaultEnumerationCap;
  std::optional<std::uint64_t> seed;
  std::string checks = "all";
  std::string output;
  std::string corpus;
  std::string report;
  bool existential = false;
  std::string mutate;
};

void emit(Job const& job, std::string const& text) {
  if (job.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.output);
  if (!out) {
    throw Error(ErrorCode::ParseError, "cannot write " + job.output);
  }
  out << text;
}

int cmd_validate(Job const& job) {
  GSet const X = load_gset(job.input);
  std::ostringstream s;
  s << "valid; |G|=" << X.group().order() << ", |X|=" << X.size()
    << ", orbits=" << X.orbit_count() << "\n";
  emit(job, s.str());
  return kExitOk;
}

int cmd_enumerate(Job const& job) {
  GSet const X = load_gset(job.input);
  std::string text;
  for (EquivMap const& f : enumerate_endos(X, job.cap)) {
    text += format_word(X, f) + "\n";
  }
  emit(job, text);
  return kExitOk;
}

int cmd_count(Job const& job) {
  emit(job, std::to_string(count_endos(load_gset(job.input))) + "\n");
  return kExitOk;
}

int cmd_green(Job const& job) {
  EggboxFormat const format = parse_eggbox_format(job.format);
  MonoidTable const M(load_gset(job.input), job.cap);
  emit(job, emit_eggbox(M, green_structure(M, format == EggboxFormat::Json), format));
  return kExitOk;
}

int cmd_collapsings(Job const& job) {
  MonoidTable const M(load_gset(job.input), job.cap);
  auto const census = all_collapsings(M);
  std::string text = "[";
  for (std::size_t i = 0; i < census.size(); ++i) {
    auto const& e = census[i];
    text += (i ? ",\n  " : "\n  ") +
            witness_to_json(M.gset(), M.element(e.element), e.witness, e.fixing.has_value()).dump();
  }
  emit(job, text + (census.empty() ? "]\n" : "\n]\n"));
  return kExitOk;
}

int cmd_verify(Job const& job) {
  auto const which = parse_check_list(job.checks);
  CheckOptions options;
  options.existential = job.existential;
  options.max_monoid = job.cap;
  if (job.mutate == "l-by-image") {
    options.l_criterion = [](EquivMap const& f, EquivMap const& g) { return image(f) == image(g); };
  } else if (!job.mutate.empty()) {
    throw Error(ErrorCode::UnknownCheck, "unknown mutation '" + job.mutate + "'");
  }
  if (job.corpus.empty() == job.input.empty()) {
    throw Error(ErrorCode::ParseError, "verify needs exactly one of an input G-set or --corpus");
  }
  std::vector<GSetReport> reports;
  if (!job.corpus.empty()) {
    CorpusSpec spec = parse_corpus_spec(read_json_file(job.corpus));
    if (job.seed) {
      spec.seed = *job.seed;
    }
    reports = run_corpus(spec, which, options);
  } else {
    GSet X = load_gset(job.input);
    GSetReport r;
    r.points = X.size();
    r.orbits = X.orbit_count();
    r.group_order = X.group().order();
    r.monoid_size = count_endos(X);
    r.checks = run_checks(X, which, options);
    reports.push_back(std::move(r));
  }
  std::ostringstream s;
  for (auto const& r : reports) {
    for (auto const& c : r.checks) {
      s << "gset " << r.index << " " << c.check_id << " " << to_string(c.status);
      if (c.counterexample) {
        s << " " << c.counterexample->dump();
      }
      s << "\n";
    }
  }
  json const summary = reports_to_json(reports, false).at("summary");
  s << "summary: " << summary.at("pass") << " pass, " << summary.at("fail") << " fail, "
    << summary.at("skipped") << " skipped\n";
  emit(job, s.str());
  if (!job.report.empty()) {
    std::ofstream out(job.report);
    if (!out) {
      throw Error(ErrorCode::ParseError, "cannot write " + job.report);
    }
    out << reports_to_json(reports, true).dump(2) << "\n";
  }
  return any_failed(reports) ? kExitCheckFailed : kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooMany:
    case ErrorCode::MonoidTooLarge:
      return kExitCap;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant endomorphism monoids of finite G-sets"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", job.input, "G-set JSON file");
    if (input_required) {
      in->required();
    }
    sub->add_option("--output", job.output, "write to this file instead of stdout");
    sub->add_option("--cap", job.cap, "maximum monoid size")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "check group and action axioms");
  add_common(validate, true);
  auto* enumerate = app.add_subcommand("enumerate", "list End_G(X) in lexicographic order");
  add_common(enumerate, true);
  auto* count = app.add_subcommand("count", "size of End_G(X) from the closed form");
  add_common(count, true);
  auto* green = app.add_subcommand("green", "Green's relations as an eggbox diagram");
  add_common(green, true);
  green->add_option("--format", job.format, "ascii, dot or json");
  auto* collapsings = app.add_subcommand("collapsings", "census of elementary collapsings");
  add_common(collapsings, true);
  auto* verify = app.add_subcommand("verify", "run the property checks");
  add_common(verify, false);
  verify->add_option("--corpus", job.corpus, "corpus spec JSON file");
  verify->add_option("--checks", job.checks, "all, or a list such as P1,P7");
  verify->add_option("--report", job.report, "write a JSON report with timings");
  verify->add_option("--seed", job.seed, "override the corpus seed");
  verify->add_flag("--existential", job.existential,
                   "also assert the existential claims (meaningful on the example fixture)");
  verify->add_option("--mutate", job.mutate)->group("");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(job);
    if (*enumerate) return cmd_enumerate(job);
    if (*count) return cmd_count(job);
    if (*green) return cmd_green(job);
    if (*collapsings) return cmd_collapsings(job);
    if (*verify) return cmd_verify(job);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitInput;
}
