#include "eqmon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "eqmon/error.hpp"
#include "eqmon/io.hpp"

namespace eqmon {

using nlohmann::json;

namespace {

struct Check {
  char const* id;
  char const* description;
};

constexpr Check kChecks[] = {
    {"P1", "map / bijection sending x to y exists iff G_x <= G_y / G_x = G_y"},
    {"P2", "constant c is equivariant iff G_c = G; constant is a collapsing iff two orbits"},
    {"P3", "L-related maps have equal stabilizers of images pointwise"},
    {"P4", "all constants are L-related"},
    {"P5", "each constant is alone in its R-class"},
    {"P6", "injective maps on invariant subsets extend to bijections"},
    {"P7", "kernel criterion for L agrees with principal left ideals"},
    {"P8", "R-related maps have equal images"},
    {"P9", "kernels are closed under the action and under G_f(x)-cosets"},
    {"P10", "[x->y'] o [x->y] = [x->y]"},
    {"P11", "[x->y] o [y->x] = [x->y]"},
    {"P12", "[g.x->g.y] = [x->y]"},
    {"P13", "a collapsing absorbs [x->y] at its own witness pair"},
    {"P14", "[x->y] L [y->x]"},
    {"P15", "[x->y] and [y->x] are not R-related"},
    {"P16", "[x->y] R [x'->y'] iff x' in Gx"},
    {"P17", "L-classes of collapsings preserve the type"},
    {"P18", "collapsings are R-related to a fixing collapsing"},
    {"P19", "R-related collapsings miss the same orbit with conjugate H"},
    {"P20", "at most one fixing collapsing per H-class"},
    {"P21", "D-classes of collapsings contain only collapsings; detectors agree"},
    {"P22", "D = J and L o R = R o L"},
    {"P23", "count_endos matches the enumeration, which is a monoid"},
};

struct Outcome {
  std::optional<json> counterexample;
  bool skipped = false;
  std::string note;
};

Outcome pass(std::string note = {}) { return Outcome{std::nullopt, false, std::move(note)}; }
Outcome fail(json cx) { return Outcome{std::move(cx), false, {}}; }

struct Context {
  GSet const& X;
  MonoidTable const& M;
  GreenStructure const& S;
  CheckOptions const& options;
  std::vector<std::optional<CollapsingWitness>> witness;
  // fixing[x * n + y]: id of [x -> y] when x, y lie in different orbits and
  // G_x <= G_y
  std::vector<std::optional<ElementId>> fixing;

  std::string w(ElementId id) const { return format_word(X, M.element(id)); }
  std::string w(EquivMap const& f) const { return format_word(X, f); }
  std::optional<ElementId> fix(Point x, Point y) const { return fixing[x * X.size() + y]; }
};

bool same_orbit(GSet const& X, Point a, Point b) { return X.orbit_index(a) == X.orbit_index(b); }

Outcome check_p1(Context const& c) {
  GSet const& X = c.X;
  std::size_t const n = X.size();
  std::vector<bool> reach(n * n, false), reach_bij(n * n, false);
  for (EquivMap const& f : c.M.elements()) {
    bool const bij = f.is_bijective();
    for (Point x = 0; x < n; ++x) {
      reach[x * n + f(x)] = true;
      if (bij) {
        reach_bij[x * n + f(x)] = true;
      }
    }
  }
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      bool const leq = X.stabilizer(x).is_subset_of(X.stabilizer(y));
      auto const f = exists_map_sending(X, x, y);
      bool const f_ok = f && (*f)(x) == y && c.M.find(*f);
      if (reach[x * n + y] != leq || f.has_value() != leq || (f && !f_ok)) {
        return fail({{"kind", "reachability"}, {"part", "i"}, {"x", x}, {"y", y},
                     {"criterion", leq}, {"brute_force", bool(reach[x * n + y])}});
      }
      bool const eq = X.stabilizer(x) == X.stabilizer(y);
      auto const b = exists_bijection_sending(X, x, y);
      bool const b_ok = b && (*b)(x) == y && b->is_bijective() && c.M.find(*b);
      if (reach_bij[x * n + y] != eq || b.has_value() != eq || (b && !b_ok)) {
        return fail({{"kind", "reachability"}, {"part", "ii"}, {"x", x}, {"y", y},
                     {"criterion", eq}, {"brute_force", bool(reach_bij[x * n + y])}});
      }
    }
  }
  return pass();
}

std::vector<Point> constant_word(GSet const& X, Point p) { return std::vector<Point>(X.size(), p); }

Outcome check_p2(Context const& c) {
  GSet const& X = c.X;
  for (Point p = 0; p < X.size(); ++p) {
    auto const word = constant_word(X, p);
    bool const brute = !equivariance_violation(X, word);
    bool const criterion = X.stabilizer(p).size() == X.group().order();
    auto const id = c.M.find(EquivMap(word, EquivMap::Trusted{}));
    if (brute != criterion || is_valid_constant(X, p) != criterion || id.has_value() != criterion) {
      return fail({{"kind", "constant"}, {"c", p}, {"criterion", criterion}, {"brute_force", brute}});
    }
    if (id && c.witness[*id].has_value() != (X.orbit_count() == 2)) {
      return fail({{"kind", "constant_collapsing"}, {"f", c.w(*id)}, {"orbits", X.orbit_count()}});
    }
  }
  return pass();
}

Outcome check_p3(Context const& c) {
  for (auto const& cls : c.S.l.classes) {
    EquivMap const& f = c.M.element(cls.front());
    for (ElementId g : cls) {
      for (Point x = 0; x < c.X.size(); ++x) {
        if (c.X.stabilizer(f(x)) != c.X.stabilizer(c.M.element(g)(x))) {
          return fail({{"kind", "l_stabilizer"}, {"f", c.w(cls.front())}, {"g", c.w(g)}, {"x", x}});
        }
      }
    }
  }
  return pass();
}

std::vector<ElementId> constants(Context const& c) {
  std::vector<ElementId> out;
  for (Point p = 0; p < c.X.size(); ++p) {
    if (auto id = c.M.find(EquivMap(constant_word(c.X, p), EquivMap::Trusted{}))) {
      out.push_back(*id);
    }
  }
  return out;
}

Outcome check_p4(Context const& c) {
  auto const cs = constants(c);
  if (cs.empty()) {
    return pass("no constants");
  }
  for (ElementId k : cs) {
    if (!c.S.l.same(cs.front(), k) || !l_related_by_ideals(c.M, cs.front(), k)) {
      return fail({{"kind", "pair"}, {"relation", "L"}, {"f", c.w(cs.front())}, {"g", c.w(k)}});
    }
  }
  return pass();
}

Outcome check_p5(Context const& c) {
  for (ElementId k : constants(c)) {
    auto const& cls = c.S.r.classes[c.S.r.class_of[k]];
    if (cls.size() != 1) {
      ElementId const other = cls.front() == k ? cls[1] : cls.front();
      return fail({{"kind", "pair"}, {"relation", "R"}, {"f", c.w(k)}, {"g", c.w(other)}});
    }
    if (principal_right_ideal(c.M, k).count() != 1) {
      return fail({{"kind", "constant_right_ideal"}, {"f", c.w(k)}});
    }
  }
  return pass();
}

Outcome check_p6(Context const& c) {
  GSet const& X = c.X;
  std::size_t const k = X.orbit_count();
  std::vector<std::uint64_t> masks;
  if (k <= 6) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
      masks.push_back(m);
    }
  } else {
    std::mt19937_64 rng(k);
    for (int i = 0; i < 64; ++i) {
      masks.push_back((rng() & ((std::uint64_t{1} << k) - 1)) | 1u);
    }
  }
  std::size_t const stride = std::max<std::size_t>(1, c.M.size() / 256);
  std::size_t cases = 0;
  for (ElementId id = 0; id < c.M.size(); id += stride) {
    EquivMap const& f = c.M.element(id);
    for (std::uint64_t mask : masks) {
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
      json cx = {{"kind", "extension"}, {"f", c.w(f)}, {"orbit_mask", mask}};
      try {
        EquivMap const e = extend_to_bijection(X, partial);
        bool agrees = true;
        for (auto const& [p, q] : partial) {
          agrees = agrees && e(p) == q;
        }
        if (!e.is_bijective() || equivariance_violation(X, e.word()) || !agrees) {
          cx["extension"] = c.w(e);
          return fail(cx);
        }
      } catch (Error const& err) {
        cx["error"] = err.what();
        return fail(cx);
      }
    }
  }
  return pass(std::to_string(cases) + " sampled cases");
}

Outcome check_p7(Context const& c) {
  std::size_t const n = c.M.size();
  if (!c.options.l_criterion) {
    ClassPartition const oracle = l_partition_by_ideals(c.M);
    if (oracle == c.S.l) {
      return pass();
    }
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = a + 1; b < n; ++b) {
        if (oracle.same(a, b) != c.S.l.same(a, b)) {
          return fail({{"kind", "l_mismatch"}, {"f", c.w(a)}, {"g", c.w(b)},
                       {"primary", c.S.l.same(a, b)}});
        }
      }
    }
    return fail({{"kind", "internal"}, {"detail", "partitions differ with no differing pair"}});
  }
  std::vector<IdealSet> ideals;
  ideals.reserve(n);
  for (ElementId a = 0; a < n; ++a) {
    ideals.push_back(principal_left_ideal(c.M, a));
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      bool const primary = c.options.l_criterion(c.M.element(a), c.M.element(b));
      if (primary != (ideals[a] == ideals[b])) {
        return fail({{"kind", "l_mismatch"}, {"f", c.w(a)}, {"g", c.w(b)}, {"primary", primary}});
      }
    }
  }
  return pass();
}

Outcome check_p8(Context const& c) {
  for (auto const& cls : c.S.r.classes) {
    auto const im = image(c.M.element(cls.front()));
    for (ElementId g : cls) {
      if (image(c.M.element(g)) != im) {
        return fail({{"kind", "r_image"}, {"f", c.w(cls.front())}, {"g", c.w(g)}});
      }
    }
  }
  if (!c.options.existential) {
    return pass();
  }
  std::map<std::vector<Point>, std::vector<ElementId>> by_image;
  for (ElementId id = 0; id < c.M.size(); ++id) {
    by_image[image(c.M.element(id))].push_back(id);
  }
  for (auto const& [im, ids] : by_image) {
    for (ElementId g : ids) {
      if (!c.S.r.same(ids.front(), g)) {
        return pass("equal image, not R: " + c.w(ids.front()) + " " + c.w(g));
      }
    }
  }
  return fail({{"kind", "existential"}, {"claim", "some maps with equal image are not R-related"}});
}

Outcome check_p9(Context const& c) {
  GSet const& X = c.X;
  Group const& G = X.group();
  for (ElementId id = 0; id < c.M.size(); ++id) {
    EquivMap const& f = c.M.element(id);
    for (Point x = 0; x < X.size(); ++x) {
      for (Point y = 0; y < X.size(); ++y) {
        if (f(x) != f(y)) {
          continue;
        }
        for (Element g = 0; g < G.order(); ++g) {
          if (f(X.act(g, x)) != f(X.act(g, y))) {
            return fail({{"kind", "kernel"}, {"part", "i"}, {"f", c.w(f)}, {"x", x}, {"y", y},
                         {"g", G.name(g)}});
          }
        }
      }
      Subgroup const& stab = X.stabilizer(f(x));
      for (Element g = 0; g < G.order(); ++g) {
        for (Element h = 0; h < G.order(); ++h) {
          if (stab.contains(G.mul(G.inv(h), g)) && f(X.act(g, x)) != f(X.act(h, x))) {
            return fail({{"kind", "kernel"}, {"part", "ii"}, {"f", c.w(f)}, {"x", x},
                         {"g", G.name(g)}, {"h", G.name(h)}});
          }
        }
      }
    }
  }
  return pass();
}

json composition(Context const& c, ElementId a, ElementId b, ElementId expected) {
  return {{"kind", "composition"}, {"lhs", {c.w(a), c.w(b)}}, {"expected", c.w(expected)}};
}

Outcome check_p10(Context const& c) {
  std::size_t const n = c.X.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto const a = c.fix(x, y);
      if (!a) {
        continue;
      }
      for (Point y2 = 0; y2 < n; ++y2) {
        if (!c.X.stabilizer(x).is_subset_of(c.X.stabilizer(y2))) {
          continue;
        }
        EquivMap const b = fixing_collapsing(c.X, x, y2);
        if (compose(b, c.M.element(*a)) != c.M.element(*a)) {
          return fail(composition(c, c.M.id_of(b), *a, *a));
        }
      }
    }
  }
  return pass();
}

Outcome check_p11(Context const& c) {
  std::size_t const n = c.X.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto const a = c.fix(x, y);
      auto const b = c.fix(y, x);
      if (!a || !b) {
        continue;
      }
      if (c.M.product(*a, *b) != *a) {
        return fail(composition(c, *a, *b, *a));
      }
    }
  }
  return pass();
}

Outcome check_p12(Context const& c) {
  GSet const& X = c.X;
  for (Point x = 0; x < X.size(); ++x) {
    for (Point y = 0; y < X.size(); ++y) {
      if (!X.stabilizer(x).is_subset_of(X.stabilizer(y))) {
        continue;
      }
      EquivMap const f = fixing_collapsing(X, x, y);
      for (Element g = 0; g < X.group().order(); ++g) {
        EquivMap const h = fixing_collapsing(X, X.act(g, x), X.act(g, y));
        if (h != f) {
          return fail({{"kind", "translate"}, {"x", x}, {"y", y}, {"g", X.group().name(g)},
                       {"f", c.w(f)}, {"translated", c.w(h)}});
        }
      }
    }
  }
  return pass();
}

Outcome check_p13(Context const& c) {
  GSet const& X = c.X;
  std::size_t tested = 0;
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (!c.witness[id]) {
      continue;
    }
    EquivMap const& eta = c.M.element(id);
    for (Point x : X.orbit_points()[X.orbit_index(c.witness[id]->x)]) {
      for (Point y = 0; y < X.size(); ++y) {
        if (same_orbit(X, x, y) || eta(x) != eta(y)) {
          continue;
        }
        auto const tau = c.fix(x, y);
        if (!tau) {
          continue;
        }
        ++tested;
        if (c.M.product(id, *tau) != id) {
          return fail(composition(c, id, *tau, id));
        }
      }
    }
  }
  return pass(std::to_string(tested) + " pairs");
}

template <typename F>
void for_each_swap_pair(Context const& c, F&& body) {
  std::size_t const n = c.X.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto const a = c.fix(x, y);
      auto const b = c.fix(y, x);
      if (a && b) {
        body(*a, *b);
      }
    }
  }
}

Outcome check_p14(Context const& c) {
  std::optional<json> cx;
  for_each_swap_pair(c, [&](ElementId a, ElementId b) {
    if (!cx && !c.S.l.same(a, b)) {
      cx = json{{"kind", "pair"}, {"relation", "L"}, {"f", c.w(a)}, {"g", c.w(b)}};
    }
  });
  return cx ? fail(*cx) : pass();
}

Outcome check_p15(Context const& c) {
  std::optional<json> cx;
  for_each_swap_pair(c, [&](ElementId a, ElementId b) {
    if (!cx && c.S.r.same(a, b)) {
      cx = json{{"kind", "pair"}, {"relation", "not R"}, {"f", c.w(a)}, {"g", c.w(b)}};
    }
  });
  return cx ? fail(*cx) : pass();
}

Outcome check_p16(Context const& c) {
  std::size_t const n = c.X.size();
  std::vector<std::pair<Point, ElementId>> all;
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (auto id = c.fix(x, y)) {
        all.emplace_back(x, *id);
      }
    }
  }
  for (auto const& [x, a] : all) {
    for (auto const& [x2, b] : all) {
      bool const expected = same_orbit(c.X, x, x2);
      if (c.S.r.same(a, b) != expected) {
        return fail({{"kind", "pair"}, {"relation", expected ? "R" : "not R"}, {"f", c.w(a)},
                     {"g", c.w(b)}});
      }
    }
  }
  return pass();
}

Outcome check_p17(Context const& c) {
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (!c.witness[id]) {
      continue;
    }
    for (ElementId g : c.S.l.classes[c.S.l.class_of[id]]) {
      auto const t = collapsing_type_at(c.X, c.M.element(g), c.witness[id]->x);
      if (!t || *t != c.witness[id]->type) {
        return fail({{"kind", "l_type"}, {"f", c.w(id)}, {"g", c.w(g)}, {"x", c.witness[id]->x}});
      }
    }
  }
  if (!c.options.existential) {
    return pass();
  }
  for (ElementId a = 0; a < c.M.size(); ++a) {
    for (ElementId b = a + 1; b < c.M.size(); ++b) {
      if (c.witness[a] && c.witness[b] && c.witness[a]->type == c.witness[b]->type &&
          !c.S.l.same(a, b)) {
        return pass("equal type, not L: " + c.w(a) + " " + c.w(b));
      }
    }
  }
  return fail({{"kind", "existential"}, {"claim", "some collapsings of equal type are not L-related"}});
}

Outcome check_p18(Context const& c) {
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (!c.witness[id]) {
      continue;
    }
    EquivMap const& f = c.M.element(id);
    json cx = {{"kind", "r_factor"}, {"f", c.w(id)}};
    try {
      RFactorization const rf = r_factor_through_fixing(c.X, f);
      auto const fid = c.M.find(rf.fixing);
      cx["fixing"] = c.w(rf.fixing);
      cx["m"] = c.w(rf.m2);
      if (!fid || !is_fixing_collapsing(c.X, rf.fixing) || compose(rf.fixing, f) != f ||
          equivariance_violation(c.X, rf.m2.word()) || compose(f, rf.m2) != rf.fixing ||
          !c.S.r.same(id, *fid)) {
        return fail(cx);
      }
    } catch (Error const& err) {
      cx["error"] = err.what();
      return fail(cx);
    }
  }
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (!c.witness[id] || !is_fixing_collapsing(c.X, c.M.element(id))) {
      continue;
    }
    for (ElementId g : c.S.r.classes[c.S.r.class_of[id]]) {
      if (!c.witness[g]) {
        return fail({{"kind", "not_collapsing"}, {"relation", "R"}, {"f", c.w(id)}, {"g", c.w(g)}});
      }
    }
  }
  return pass();
}

Outcome check_p19(Context const& c) {
  GSet const& X = c.X;
  std::vector<ElementId> census;
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (c.witness[id]) {
      census.push_back(id);
    }
  }
  for (ElementId a : census) {
    for (ElementId g : c.S.r.classes[c.S.r.class_of[a]]) {
      if (!c.witness[g]) {
        return fail({{"kind", "not_collapsing"}, {"relation", "R"}, {"f", c.w(a)}, {"g", c.w(g)}});
      }
    }
  }
  for (ElementId a : census) {
    for (ElementId b : census) {
      auto const& wa = *c.witness[a];
      auto const& wb = *c.witness[b];
      bool const same_missing = same_orbit(X, wa.z, wb.z);
      if (c.S.r.same(a, b) != same_missing) {
        return fail({{"kind", "pair"}, {"relation", same_missing ? "R" : "not R"},
                     {"f", c.w(a)}, {"g", c.w(b)}});
      }
      if (c.S.r.same(a, b) &&
          !conjugacy_class_of_subgroup(X.group(), wa.type.h).contains(wb.type.h)) {
        return fail({{"kind", "r_conjugate"}, {"f", c.w(a)}, {"g", c.w(b)}});
      }
    }
  }
  return pass();
}

Outcome check_p20(Context const& c) {
  std::map<std::size_t, ElementId> seen;
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (!c.witness[id] || !is_fixing_collapsing(c.X, c.M.element(id))) {
      continue;
    }
    auto [it, fresh] = seen.emplace(c.S.h.class_of[id], id);
    if (!fresh) {
      return fail({{"kind", "pair"}, {"relation", "not H"}, {"f", c.w(it->second)},
                   {"g", c.w(id)}});
    }
  }
  return pass();
}

Outcome check_p21(Context const& c) {
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (!detectors_agree(c.X, c.M.element(id))) {
      return fail({{"kind", "detector"}, {"f", c.w(id)}});
    }
  }
  for (ElementId id = 0; id < c.M.size(); ++id) {
    if (!c.witness[id]) {
      continue;
    }
    for (ElementId g : c.S.d.classes[c.S.d.class_of[id]]) {
      if (!c.witness[g]) {
        return fail({{"kind", "not_collapsing"}, {"relation", "D"}, {"f", c.w(id)}, {"g", c.w(g)}});
      }
    }
  }
  return pass();
}

Outcome check_p22(Context const& c) {
  if (!c.S.j) {
    return fail({{"kind", "internal"}, {"detail", "J not computed"}});
  }
  if (!(*c.S.j == c.S.d)) {
    for (ElementId a = 0; a < c.M.size(); ++a) {
      for (ElementId b = a + 1; b < c.M.size(); ++b) {
        if (c.S.j->same(a, b) != c.S.d.same(a, b)) {
          return fail({{"kind", "d_vs_j"}, {"f", c.w(a)}, {"g", c.w(b)}, {"d", c.S.d.same(a, b)}});
        }
      }
    }
  }
  if (!l_r_commute(c.S)) {
    return fail({{"kind", "l_r_commute"}});
  }
  return pass();
}

Outcome check_p23(Context const& c) {
  GSet const& X = c.X;
  std::uint64_t const count = count_endos(X);
  if (count != c.M.size()) {
    return fail({{"kind", "count"}, {"count_endos", count}, {"enumerated", c.M.size()}});
  }
  if (c.M.element(c.M.identity_id()) != identity_map(X)) {
    return fail({{"kind", "identity"}});
  }
  for (ElementId id = 0; id < c.M.size(); ++id) {
    EquivMap const& f = c.M.element(id);
    try {
      make_map(X, f.word());
    } catch (Error const& err) {
      return fail({{"kind", "invalid_element"}, {"f", c.w(f)}, {"error", err.what()}});
    }
    if (id > 0 && !(c.M.element(id - 1) < f)) {
      return fail({{"kind", "order"}, {"f", c.w(id - 1)}, {"g", c.w(f)}});
    }
  }
  // closure by word composition; pairs are thinned on large monoids
  std::size_t const n = c.M.size();
  std::size_t const stride = std::max<std::size_t>(1, n * n / 2'000'000);
  std::size_t pairs = 0;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a % stride; b < n; b += stride) {
      EquivMap const h = compose(c.M.element(a), c.M.element(b));
      auto const id = c.M.find(h);
      if (!id || *id != c.M.product(a, b)) {
        return fail(json{{"kind", "closure"}, {"lhs", {c.w(a), c.w(b)}}});
      }
      ++pairs;
    }
  }
  return pass(std::to_string(pairs) + " products");
}

using CheckFn = Outcome (*)(Context const&);

constexpr CheckFn kFns[] = {check_p1,  check_p2,  check_p3,  check_p4,  check_p5,  check_p6,
                            check_p7,  check_p8,  check_p9,  check_p10, check_p11, check_p12,
                            check_p13, check_p14, check_p15, check_p16, check_p17, check_p18,
                            check_p19, check_p20, check_p21, check_p22, check_p23};

std::size_t check_index(std::string_view id) {
  for (std::size_t i = 0; i < std::size(kChecks); ++i) {
    if (id == kChecks[i].id) {
      return i;
    }
  }
  throw Error(ErrorCode::UnknownCheck, std::string(id));
}

std::uint64_t get_u64(json const& doc, char const* key, std::uint64_t fallback) {
  if (!doc.contains(key)) {
    return fallback;
  }
  auto const& v = doc.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw Error(ErrorCode::ParseError, std::string(key) + " must be a positive integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

std::vector<std::string> const& all_check_ids() {
  static std::vector<std::string> const ids = [] {
    std::vector<std::string> out;
    for (auto const& c : kChecks) {
      out.emplace_back(c.id);
    }
    return out;
  }();
  return ids;
}

std::string_view check_description(std::string_view id) {
  return kChecks[check_index(id)].description;
}

std::vector<std::string> parse_check_list(std::string_view text) {
  if (text == "all") {
    return all_check_ids();
  }
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view const item = text.substr(start, end - start);
    check_index(item);
    if (std::find(out.begin(), out.end(), item) == out.end()) {
      out.emplace_back(item);
    }
    start = end + 1;
  }
  return out;
}

CorpusSpec parse_corpus_spec(json const& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "corpus spec must be an object");
  }
  CorpusSpec spec;
  spec.seed = doc.contains("seed") ? doc.at("seed").get<std::uint64_t>() : spec.seed;
  spec.max_points = get_u64(doc, "max_points", spec.max_points);
  spec.max_monoid = get_u64(doc, "max_monoid", spec.max_monoid);
  spec.count = get_u64(doc, "count", spec.count);
  if (!doc.contains("groups") || !doc.at("groups").is_array() || doc.at("groups").empty()) {
    throw Error(ErrorCode::ParseError, "corpus spec needs a non-empty 'groups' list");
  }
  for (json const& g : doc.at("groups")) {
    spec.groups.push_back(parse_group_spec(g));
  }
  if (doc.contains("subgroup_generators")) {
    try {
      spec.subgroup_generators =
          doc.at("subgroup_generators").get<std::vector<std::vector<Element>>>();
    } catch (json::exception const& e) {
      throw Error(ErrorCode::ParseError, std::string("subgroup_generators: ") + e.what());
    }
  }
  return spec;
}

GSet random_gset(CorpusSpec const& spec, std::size_t i) {
  if (spec.groups.empty()) {
    throw Error(ErrorCode::ParseError, "corpus spec has no groups");
  }
  Group const G = build_named_group(spec.groups[i % spec.groups.size()]);
  std::mt19937_64 rng(spec.seed * 0x9E3779B97F4A7C15ull + i);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::size_t const k = 1 + rng() % 4;
    std::vector<Subgroup> subgroups;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Element> gens;
      if (!spec.subgroup_generators.empty()) {
        gens = spec.subgroup_generators[rng() % spec.subgroup_generators.size()];
        for (Element g : gens) {
          if (g >= G.order()) {
            throw Error(ErrorCode::ParseError, "subgroup generator out of range");
          }
        }
      } else {
        std::size_t const m = rng() % 3;
        for (std::size_t t = 0; t < m; ++t) {
          gens.push_back(static_cast<Element>(rng() % G.order()));
        }
      }
      subgroups.push_back(subgroup_generated(G, gens));
    }
    GSet X = build_coset_gset(G, subgroups);
    if (X.size() <= spec.max_points && count_endos(X) <= spec.max_monoid) {
      return X;
    }
  }
  // one fixed point always fits
  return build_coset_gset(G, {whole_group(G)});
}

std::vector<CheckReport> run_checks(GSet const& X, std::vector<std::string> const& which,
                                    CheckOptions const& options) {
  std::uint64_t const count = count_endos(X);
  if (count > options.max_monoid) {
    throw Error(ErrorCode::MonoidTooLarge, std::to_string(count) + " elements");
  }
  for (auto const& id : which) {
    check_index(id);
  }
  bool const need_j = std::find(which.begin(), which.end(), "P22") != which.end();
  MonoidTable const M(X, options.max_monoid);
  GreenStructure const S = green_structure(M, need_j);
  Context ctx{M.gset(), M, S, options, {}, {}};
  ctx.witness.reserve(M.size());
  for (EquivMap const& f : M.elements()) {
    ctx.witness.push_back(collapsing_by_characterization(ctx.X, f));
  }
  std::size_t const n = X.size();
  ctx.fixing.resize(n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (!same_orbit(X, x, y) && X.stabilizer(x).is_subset_of(X.stabilizer(y))) {
        ctx.fixing[x * n + y] = M.id_of(fixing_collapsing(ctx.X, x, y));
      }
    }
  }

  std::vector<CheckReport> out;
  for (auto const& id : which) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = kFns[check_index(id)](ctx);
    } catch (Error const& err) {
      o = fail({{"kind", "exception"}, {"error", err.what()}});
    }
    CheckReport r;
    r.check_id = id;
    r.status = o.counterexample ? CheckStatus::Fail
                                : (o.skipped ? CheckStatus::Skipped : CheckStatus::Pass);
    r.counterexample = std::move(o.counterexample);
    r.note = std::move(o.note);
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GSetReport> run_corpus(CorpusSpec const& spec, std::vector<std::string> const& which,
                                   CheckOptions const& options) {
  std::vector<GSetReport> out;
  for (std::size_t i = 0; i < spec.count; ++i) {
    GSet X = random_gset(spec, i);
    GSetReport r;
    r.index = i;
    r.points = X.size();
    r.orbits = X.orbit_count();
    r.group_order = X.group().order();
    r.monoid_size = count_endos(X);
    r.checks = run_checks(X, which, options);
    out.push_back(std::move(r));
  }
  return out;
}

bool any_failed(std::vector<GSetReport> const& reports) {
  for (auto const& r : reports) {
    for (auto const& c : r.checks) {
      if (c.status == CheckStatus::Fail) {
        return true;
      }
    }
  }
  return false;
}

json reports_to_json(std::vector<GSetReport> const& reports, bool with_timing) {
  json gsets = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (auto const& r : reports) {
    json checks = json::array();
    for (auto const& c : r.checks) {
      json j = {{"id", c.check_id}, {"status", to_string(c.status)}};
      if (c.counterexample) {
        j["counterexample"] = *c.counterexample;
      }
      if (!c.note.empty()) {
        j["note"] = c.note;
      }
      if (with_timing) {
        j["elapsed_ms"] = c.elapsed_ms;
      }
      checks.push_back(std::move(j));
      passed += c.status == CheckStatus::Pass;
      failed += c.status == CheckStatus::Fail;
      skipped += c.status == CheckStatus::Skipped;
    }
    gsets.push_back({{"index", r.index},
                     {"group_order", r.group_order},
                     {"points", r.points},
                     {"orbits", r.orbits},
                     {"monoid_size", r.monoid_size},
                     {"checks", std::move(checks)}});
  }
  return {{"gsets", std::move(gsets)},
          {"summary", {{"pass", passed}, {"fail", failed}, {"skipped", skipped}}}};
}

std::optional<bool> replay_counterexample(GSet const& X, json const& cx) {
  std::string const kind = cx.value("kind", "");
  auto word = [&](json const& v) { return make_map(X, parse_word(X, v.get<std::string>())); };
  if (kind == "composition") {
    return compose(word(cx.at("lhs")[0]), word(cx.at("lhs")[1])) != word(cx.at("expected"));
  }
  if (kind != "l_mismatch" && kind != "r_image" && kind != "l_stabilizer") {
    return std::nullopt;
  }
  MonoidTable const M(X);
  ElementId const f = M.id_of(word(cx.at("f")));
  ElementId const g = M.id_of(word(cx.at("g")));
  if (kind == "l_mismatch") {
    return l_related_by_ideals(M, f, g) != cx.at("primary").get<bool>();
  }
  if (kind == "r_image") {
    return r_related(M, f, g) && image(M.element(f)) != image(M.element(g));
  }
  Point const x = cx.at("x").get<Point>();
  return l_related_by_ideals(M, f, g) &&
         X.stabilizer(M.element(f)(x)) != X.stabilizer(M.element(g)(x));
}

}  // namespace eqmon
