// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "eqmon/error.hpp"
#include "eqmon/io.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace eqmon;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Result {
  bool ok = false;
  std::string detail;
};

GSet example1() { return load_gset(std::string(EQMON_TEST_DATA) + "/example1.json"); }

ElementId id_of(MonoidTable const& M, std::vector<Point> w) {
  return M.id_of(make_map(M.gset(), std::move(w)));
}

Result criterion1() {
  auto const t = Clock::now();
  GSet const X = example1();
  std::uint64_t const count = count_endos(X);
  std::size_t const listed = enumerate_endos(X).size();
  double const s = seconds_since(t);
  std::ostringstream d;
  d << "count_endos=" << count << " enumerated=" << listed << " in " << s << "s";
  return {count == 16 && listed == 16 && s < 1.0, d.str()};
}

Result criterion2() {
  MonoidTable const M(example1());
  GreenStructure const S = green_structure(M);
  std::multiset<std::size_t> sizes;
  for (auto const& c : S.l.classes) {
    sizes.insert(c.size());
  }
  auto const a = oracle::action_of(M.gset());
  auto const brute = oracle::monoid(a);
  std::vector<std::set<oracle::Word>> ideals;
  for (auto const& f : brute) {
    ideals.push_back(oracle::left_ideal(brute, f));
  }
  std::size_t agree = 0, pairs = 0;
  for (ElementId i = 0; i < M.size(); ++i) {
    for (ElementId j = 0; j < M.size(); ++j) {
      ++pairs;
      agree += S.l.same(i, j) == (ideals[i] == ideals[j]) && M.element(i).word() == brute[i];
    }
  }
  std::ostringstream d;
  d << S.l.classes.size() << " L-classes; oracle agrees on " << agree << "/" << pairs << " pairs";
  return {S.l.classes.size() == 6 && sizes == std::multiset<std::size_t>{2, 2, 2, 2, 4, 4} &&
              pairs == 256 && agree == 256,
          d.str()};
}

Result criterion3() {
  GSet const X = example1();
  auto const w = is_elementary_collapsing(X, make_map(X, {3, 0, 0, 0}));
  bool const type_ok = w && w->type.h == trivial_subgroup() &&
                       w->type.k_class == std::vector<Subgroup>{whole_group(X.group())};
  bool const c0 = is_elementary_collapsing(X, make_map(X, {0, 0, 0, 0})).has_value();
  bool const c3 = is_elementary_collapsing(X, make_map(X, {3, 3, 3, 3})).has_value();
  std::ostringstream d;
  d << "(3000) collapsing=" << w.has_value() << " type_ok=" << type_ok << "; (0000) collapsing="
    << c0 << "; (3333) collapsing=" << c3 << "; orbits=" << X.orbit_count();
  return {type_ok && !c0 && !c3 && X.orbit_count() == 3, d.str()};
}

Result criterion4() {
  MonoidTable const M(example1());
  GSet const& X = M.gset();
  EquivMap const a = fixing_collapsing(X, 1, 0);
  EquivMap const b = fixing_collapsing(X, 1, 3);
  bool const words = format_word(X, a) == "(0003)" && format_word(X, b) == "(0333)";
  bool const same_type = collapsing_type(X, a) == collapsing_type(X, b);
  bool const l = l_related(M, M.id_of(a), M.id_of(b));
  bool const r = r_related(M, M.id_of(a), M.id_of(b));
  std::ostringstream d;
  d << "equal types=" << same_type << " L=" << l << " R=" << r;
  return {words && same_type && !l && r, d.str()};
}

Result criterion5() {
  MonoidTable const M(example1());
  GreenStructure const S = green_structure(M, false);
  auto const census = all_collapsings(M);
  std::size_t fixing = 0;
  std::vector<ElementId> fixing_ids;
  for (auto const& e : census) {
    if (e.fixing) {
      ++fixing;
      fixing_ids.push_back(e.element);
    }
  }
  std::size_t const unit_count = units(M.gset()).size();
  std::size_t constants = 0;
  for (Point p = 0; p < M.gset().size(); ++p) {
    constants += is_valid_constant(M.gset(), p);
  }
  bool pairwise_non_h = true;
  for (ElementId a : fixing_ids) {
    for (ElementId b : fixing_ids) {
      pairwise_non_h = pairwise_non_h && (a == b || !S.h.same(a, b));
    }
  }
  std::size_t const total = census.size() + unit_count + constants;
  std::ostringstream d;
  d << "collapsings=" << census.size() << " (expected 10) fixing=" << fixing
    << " units=" << unit_count << " constants=" << constants << " total=" << total
    << " of " << M.size() << "; fixing pairwise non-H=" << pairwise_non_h;
  return {census.size() == 10 && fixing == 4 && unit_count == 4 && constants == 2 &&
              total == 16 && pairwise_non_h,
          d.str()};
}

Result criterion6() {
  MonoidTable const M(example1());
  for (ElementId a = 0; a < M.size(); ++a) {
    for (ElementId b = 0; b < M.size(); ++b) {
      if (image(M.element(a)) == image(M.element(b)) && !r_related(M, a, b)) {
        return {true, format_word(M.gset(), M.element(a)) + " and " +
                          format_word(M.gset(), M.element(b)) + " share an image, not R-related"};
      }
    }
  }
  return {false, "no such pair"};
}

CorpusSpec acceptance_corpus() {
  CorpusSpec spec;
  spec.seed = 20261019;
  spec.groups = fixtures::all_families();
  spec.max_points = 16;
  spec.max_monoid = 5000;
  spec.count = 30;
  return spec;
}

Result criterion7() {
  auto const t = Clock::now();
  CorpusSpec const spec = acceptance_corpus();
  auto const reports = run_corpus(spec, all_check_ids());
  double const s = seconds_since(t);
  std::size_t pass = 0, total = 0;
  std::uint64_t largest = 0;
  std::set<std::size_t> orders;
  std::string first_failure;
  for (auto const& r : reports) {
    largest = std::max(largest, r.monoid_size);
    orders.insert(r.group_order);
    for (auto const& c : r.checks) {
      ++total;
      if (c.status == CheckStatus::Pass) {
        ++pass;
      } else if (first_failure.empty()) {
        first_failure = " first failure: gset " + std::to_string(r.index) + " " + c.check_id;
      }
    }
  }
  std::ostringstream d;
  d << reports.size() << " G-sets, " << pass << "/" << total << " checks pass, largest monoid "
    << largest << ", " << s << "s" << first_failure;
  bool const covered = orders == std::set<std::size_t>{2, 3, 4, 6, 8};
  return {reports.size() >= 25 && pass == total && total == reports.size() * 23 &&
              largest <= 5000 && covered && s <= 60.0,
          d.str()};
}

Result criterion8() {
  CorpusSpec const spec = acceptance_corpus();
  std::size_t cases = 0, good = 0;
  for (std::size_t i = 0; i < spec.count; ++i) {
    GSet const X = random_gset(spec, i);
    auto const all = enumerate_endos(X, spec.max_monoid);
    std::size_t const k = X.orbit_count();
    for (EquivMap const& f : all) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << std::min<std::size_t>(k, 6));
           ++mask) {
        PartialMap partial;
        std::set<Point> seen;
        bool injective = true;
        for (Point p = 0; p < X.size(); ++p) {
          if ((mask >> X.orbit_index(p)) & 1u) {
            partial[p] = f(p);
            injective = injective && seen.insert(f(p)).second;
          }
        }
        if (!injective) {
          continue;
        }
        ++cases;
        try {
          EquivMap const e = extend_to_bijection(X, partial);
          bool agrees = true;
          for (auto const& [p, q] : partial) {
            agrees = agrees && e(p) == q;
          }
          good += e.is_bijective() && !equivariance_violation(X, e.word()) && agrees;
        } catch (Error const&) {
        }
      }
    }
  }
  std::ostringstream d;
  d << good << "/" << cases << " sampled restrictions extend correctly";
  return {cases > 0 && good == cases, d.str()};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Result()>>> const criteria = {
      {"1 example 1 has 16 equivariant maps", criterion1},
      {"2 example 1 L-classes {4,4,2,2,2,2}, oracle agrees on 256 pairs", criterion2},
      {"3 (3000) collapsing of type (trivial, [Z2]); constants are not", criterion3},
      {"4 [1->0], [1->3]: equal types, not L-related, R-related", criterion4},
      {"5 census: 10 collapsings, 4 fixing, 4 units, 2 constants", criterion5},
      {"6 some pair shares an image without being R-related", criterion6},
      {"7 P1-P23 pass on a 30 G-set corpus within 60 s", criterion7},
      {"8 extension round-trip on all sampled restrictions", criterion8},
  };
  int failed = 0;
  for (auto const& [name, fn] : criteria) {
    Result r;
    try {
      r = fn();
    } catch (std::exception const& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << name << " -- " << r.detail
              << std::endl;
    failed += !r.ok;
  }
  return failed == 0 ? 0 : 1;
}
