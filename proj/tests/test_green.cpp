#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>

#include "eqmon/error.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace eqmon;

namespace {

std::multiset<std::size_t> class_sizes(ClassPartition const& p) {
  std::multiset<std::size_t> out;
  for (auto const& c : p.classes) {
    out.insert(c.size());
  }
  return out;
}

// Balanced braces, quoted strings closed, and a "graph <name> {" header.
bool looks_like_dot(std::string const& s) {
  if (s.rfind("graph ", 0) != 0) {
    return false;
  }
  int depth = 0;
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char const c = s[i];
    if (quoted) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        quoted = false;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth < 0) {
        return false;
      }
    }
  }
  return depth == 0 && !quoted;
}

}  // namespace

TEST_CASE("example 1 green structure") {
  MonoidTable const M(fixtures::example1());
  REQUIRE(M.size() == 16);
  GreenStructure const S = green_structure(M);
  CHECK(S.l.classes.size() == 6);
  CHECK(class_sizes(S.l) == std::multiset<std::size_t>{2, 2, 2, 2, 4, 4});
  CHECK(S.d.classes.size() == 5);
  CHECK(S.j == S.d);
  CHECK(l_r_commute(S));

  auto const id = [&](std::vector<Point> word) { return M.id_of(make_map(M.gset(), word)); };
  // constants: one L-class, each alone in its R-class
  CHECK(S.l.same(id({0, 0, 0, 0}), id({3, 3, 3, 3})));
  CHECK(S.r.classes[S.r.class_of[id({0, 0, 0, 0})]].size() == 1);
  CHECK(principal_right_ideal(M, id({0, 0, 0, 0})).ids() ==
        std::vector<ElementId>{id({0, 0, 0, 0})});
  // [1->0] and [1->3]: R-related, not L-related
  CHECK(r_related(M, id({0, 0, 0, 3}), id({0, 3, 3, 3})));
  CHECK_FALSE(l_related(M, id({0, 0, 0, 3}), id({0, 3, 3, 3})));
  // equal image, not R-related
  CHECK(image(M.element(id({0, 3, 3, 0}))) == image(M.element(id({0, 0, 0, 3}))));
  CHECK_FALSE(r_related(M, id({0, 3, 3, 0}), id({0, 0, 0, 3})));
  CHECK(d_related(M, id({0, 0, 0, 3}), id({3, 0, 0, 0})));
  CHECK(h_related(M, id({0, 0, 0, 3}), id({3, 3, 3, 0})));
  CHECK(j_related(M, id({0, 1, 2, 0}), id({3, 2, 1, 3})));
  CHECK(M.identity_id() == id({0, 1, 2, 3}));
  CHECK(two_sided_ideal(M, M.identity_id()).count() == 16);
}

TEST_CASE("kernel criterion agrees with ideals pairwise") {
  MonoidTable const M(fixtures::example1());
  std::size_t pairs = 0;
  for (ElementId a = 0; a < M.size(); ++a) {
    for (ElementId b = 0; b < M.size(); ++b) {
      CHECK(l_related(M, a, b) == l_related_by_ideals(M, a, b));
      ++pairs;
    }
  }
  CHECK(pairs == 256);
}

TEST_CASE("relations against brute-force ideals on the corpus") {
  for (GSet const& X : fixtures::small_corpus(30, 6)) {
    MonoidTable const M(X);
    auto const a = oracle::action_of(X);
    auto const S = oracle::monoid(a);
    REQUIRE(S.size() == M.size());
    std::vector<std::set<oracle::Word>> left, right;
    for (auto const& f : S) {
      left.push_back(oracle::left_ideal(S, f));
      right.push_back(oracle::right_ideal(S, f));
    }
    GreenStructure const G = green_structure(M);
    for (ElementId i = 0; i < M.size(); ++i) {
      for (ElementId j = 0; j < M.size(); ++j) {
        CHECK(G.l.same(i, j) == (left[i] == left[j]));
        CHECK(G.r.same(i, j) == (right[i] == right[j]));
        CHECK(G.h.same(i, j) == (left[i] == left[j] && right[i] == right[j]));
        CHECK(M.element(M.product(i, j)).word() == oracle::compose(S[i], S[j]));
      }
    }
    CHECK(G.j == G.d);
    CHECK(l_partition(M) == l_partition_by_ideals(M));
    CHECK(r_partition(M) == G.r);
  }
}

TEST_CASE("eggbox emitters") {
  MonoidTable const M(fixtures::example1());
  GreenStructure const S = green_structure(M);
  std::size_t cells = 0;
  for (auto const& b : S.eggbox) {
    for (auto const& row : b.cells) {
      for (auto const& c : row) {
        cells += c ? S.h.classes[*c].size() : 0;
      }
    }
  }
  CHECK(cells == 16);

  std::string const dot = emit_eggbox(M, S, EggboxFormat::Dot);
  CHECK(looks_like_dot(dot));
  CHECK(dot.find("(3000)") != std::string::npos);

  auto const doc = nlohmann::json::parse(emit_eggbox(M, S, EggboxFormat::Json));
  CHECK(doc.at("L").size() == 6);
  CHECK(doc.at("elements").size() == 16);

  std::string const ascii = emit_eggbox(M, S, EggboxFormat::Ascii);
  CHECK(ascii.find("| (0000) |") != std::string::npos);
  CHECK(ascii == emit_eggbox(M, green_structure(M), EggboxFormat::Ascii));

  CHECK(parse_eggbox_format("dot") == EggboxFormat::Dot);
  CHECK_THROWS_AS(parse_eggbox_format("svg"), Error);
}
