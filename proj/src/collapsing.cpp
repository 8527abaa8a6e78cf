#include "eqmon/collapsing.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "eqmon/error.hpp"

namespace eqmon {

namespace {

/// The single orbit missing from Im(f), if the complement is exactly one orbit.
std::optional<std::size_t> missing_orbit(GSet const& X, EquivMap const& f) {
  std::vector<bool> hit(X.size(), false);
  for (Point y : f.word()) {
    hit[y] = true;
  }
  std::optional<std::size_t> orbit;
  for (Point p = 0; p < X.size(); ++p) {
    if (hit[p]) {
      continue;
    }
    if (orbit && *orbit != X.orbit_index(p)) {
      return std::nullopt;
    }
    orbit = X.orbit_index(p);
  }
  return orbit;
}

bool injective_off_orbit(GSet const& X, EquivMap const& f, std::size_t orbit) {
  std::vector<bool> hit(X.size(), false);
  for (Point p = 0; p < X.size(); ++p) {
    if (X.orbit_index(p) == orbit) {
      continue;
    }
    if (hit[f(p)]) {
      return false;
    }
    hit[f(p)] = true;
  }
  return true;
}

/// Least point of the orbit with the given stabilizer.
std::optional<Point> point_with_stabilizer(GSet const& X, std::size_t orbit, Subgroup const& H) {
  for (Point p : X.orbit_points()[orbit]) {
    if (X.stabilizer(p) == H) {
      return p;
    }
  }
  return std::nullopt;
}

/// ker(f) as an n x n matrix compared with the shape required for (x, y).
bool kernel_has_shape(GSet const& X, EquivMap const& f, Point x, Point y) {
  std::size_t const n = X.size();
  Group const& G = X.group();
  std::vector<bool> shape(n * n, false);
  for (Point a = 0; a < n; ++a) {
    shape[a * n + a] = true;
  }
  for (Element g = 0; g < G.order(); ++g) {
    Point const gx = X.act(g, x);
    Point const gy = X.act(g, y);
    shape[gx * n + gy] = shape[gy * n + gx] = true;
  }
  Subgroup const& Gy = X.stabilizer(y);
  for (Element g = 0; g < G.order(); ++g) {
    for (Element h = 0; h < G.order(); ++h) {
      if (Gy.contains(G.mul(G.inv(h), g))) {
        Point const gx = X.act(g, x);
        Point const hx = X.act(h, x);
        shape[gx * n + hx] = shape[hx * n + gx] = true;
      }
    }
  }
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) {
      if ((f(a) == f(b)) != shape[a * n + b]) {
        return false;
      }
    }
  }
  return true;
}

/// Partner y for collapsed x under the definition, least first.
std::optional<Point> definition_partner(GSet const& X, EquivMap const& f, Point x) {
  for (Point y = 0; y < X.size(); ++y) {
    if (X.orbit_index(y) == X.orbit_index(x) || f(y) != f(x)) {
      continue;
    }
    if (!kernel_has_shape(X, f, x, y)) {
      continue;
    }
    Group const& G = X.group();
    Subgroup const N = normalizer(G, X.stabilizer(x));
    if (n_conjugacy_class(G, X.stabilizer(y), N) != n_conjugacy_class(G, X.stabilizer(f(x)), N)) {
      continue;
    }
    return y;
  }
  return std::nullopt;
}

}  // namespace

CollapsingType make_collapsing_type(GSet const& X, Point x, Subgroup const& k) {
  Group const& G = X.group();
  Subgroup const& H = X.stabilizer(x);
  return CollapsingType{H, n_conjugacy_class(G, k, normalizer(G, H))};
}

std::optional<CollapsingWitness> collapsing_by_characterization(GSet const& X,
                                                                EquivMap const& f) {
  auto const missing = missing_orbit(X, f);
  if (!missing) {
    return std::nullopt;
  }
  Point const z0 = X.orbit_representatives()[*missing];
  for (std::size_t o = 0; o < X.orbit_count(); ++o) {
    if (!injective_off_orbit(X, f, o)) {
      continue;
    }
    auto const x = point_with_stabilizer(X, o, X.stabilizer(z0));
    if (!x) {
      continue;
    }
    std::optional<Point> y;
    for (Point p = 0; p < X.size(); ++p) {
      if (X.orbit_index(p) != o && f(p) == f(*x)) {
        y = p;
        break;
      }
    }
    if (!y) {
      throw Error(ErrorCode::Internal, "collapsed point without a partner");
    }
    if (X.stabilizer(*y) != X.stabilizer(f(*x))) {
      throw Error(ErrorCode::Internal, "partner stabilizer differs from G_f(x)");
    }
    return CollapsingWitness{*x, *y, z0, make_collapsing_type(X, *x, X.stabilizer(*y))};
  }
  return std::nullopt;
}

std::optional<CollapsingWitness> collapsing_by_definition(GSet const& X, EquivMap const& f) {
  for (Point x = 0; x < X.size(); ++x) {
    auto const y = definition_partner(X, f, x);
    if (!y) {
      continue;
    }
    auto const missing = missing_orbit(X, f);
    if (!missing) {
      throw Error(ErrorCode::Internal, "kernel shape without a single missing orbit");
    }
    auto const z = point_with_stabilizer(X, *missing, X.stabilizer(x));
    if (!z) {
      throw Error(ErrorCode::Internal, "missing orbit has no point with stabilizer G_x");
    }
    return CollapsingWitness{x, *y, *z, make_collapsing_type(X, x, X.stabilizer(*y))};
  }
  return std::nullopt;
}

bool detectors_agree(GSet const& X, EquivMap const& f) {
  auto const a = collapsing_by_characterization(X, f);
  auto const b = collapsing_by_definition(X, f);
  if (!a || !b) {
    return !a && !b;
  }
  return X.orbit_index(a->x) == X.orbit_index(b->x) &&
         X.orbit_index(a->y) == X.orbit_index(b->y) &&
         X.orbit_index(a->z) == X.orbit_index(b->z) &&
         conjugacy_class_of_subgroup(X.group(), a->type.h).contains(b->type.h);
}

std::optional<CollapsingWitness> is_elementary_collapsing(GSet const& X, EquivMap const& f) {
  assert(detectors_agree(X, f));
  return collapsing_by_characterization(X, f);
}

CollapsingType collapsing_type(GSet const& X, EquivMap const& f) {
  auto const w = is_elementary_collapsing(X, f);
  if (!w) {
    throw Error(ErrorCode::NotACollapsing, format_word(X, f));
  }
  return w->type;
}

std::optional<CollapsingType> collapsing_type_at(GSet const& X, EquivMap const& f, Point x) {
  auto const y = definition_partner(X, f, x);
  if (!y) {
    return std::nullopt;
  }
  return make_collapsing_type(X, x, X.stabilizer(*y));
}

EquivMap fixing_collapsing(GSet const& X, Point x, Point y) {
  std::map<Point, Point> assignment{{x, y}};
  for (Point r : X.orbit_representatives()) {
    if (X.orbit_index(r) != X.orbit_index(x)) {
      assignment.emplace(r, r);
    }
  }
  return from_representative_images(X, assignment);
}

EquivMap orbit_swap(GSet const& X, Point x, Point y) {
  if (X.stabilizer(x) != X.stabilizer(y)) {
    throw Error(ErrorCode::StabilizersNotEqual,
                "G_" + X.point_name(x) + " != G_" + X.point_name(y));
  }
  if (x == y) {
    return identity_map(X);
  }
  if (X.orbit_index(x) == X.orbit_index(y)) {
    throw Error(ErrorCode::SameOrbit, X.point_name(x) + " and " + X.point_name(y));
  }
  std::map<Point, Point> assignment{{x, y}, {y, x}};
  for (Point r : X.orbit_representatives()) {
    if (X.orbit_index(r) != X.orbit_index(x) && X.orbit_index(r) != X.orbit_index(y)) {
      assignment.emplace(r, r);
    }
  }
  return from_representative_images(X, assignment);
}

std::optional<std::pair<Point, Point>> is_fixing_collapsing(GSet const& X, EquivMap const& f) {
  std::optional<std::size_t> moved;
  for (Point p = 0; p < X.size(); ++p) {
    if (f(p) == p) {
      continue;
    }
    if (moved && *moved != X.orbit_index(p)) {
      return std::nullopt;
    }
    moved = X.orbit_index(p);
  }
  if (!moved) {
    return std::nullopt;
  }
  for (Point p : X.orbit_points()[*moved]) {
    if (f(p) == p) {
      return std::nullopt;
    }
  }
  Point const x = X.orbit_representatives()[*moved];
  Point const y = f(x);
  if (X.orbit_index(y) == *moved || fixing_collapsing(X, x, y) != f) {
    return std::nullopt;
  }
  if (!is_elementary_collapsing(X, f)) {
    throw Error(ErrorCode::Internal, "[x -> y] with distinct orbits is not a collapsing");
  }
  return std::pair{x, y};
}

EquivMap bijective_support(GSet const& X, EquivMap const& f) {
  auto const w = is_elementary_collapsing(X, f);
  if (!w) {
    throw Error(ErrorCode::NotACollapsing, format_word(X, f));
  }
  std::map<Point, Point> assignment{{w->x, w->z}};
  for (Point r : X.orbit_representatives()) {
    if (X.orbit_index(r) != X.orbit_index(w->x)) {
      assignment.emplace(r, f(r));
    }
  }
  EquivMap support = from_representative_images(X, assignment);
  if (!support.is_bijective()) {
    throw Error(ErrorCode::Internal, "bijective support is not bijective");
  }
  return support;
}

RFactorization r_factor_through_fixing(GSet const& X, EquivMap const& f) {
  auto const w = is_elementary_collapsing(X, f);
  if (!w) {
    throw Error(ErrorCode::NotACollapsing, format_word(X, f));
  }
  std::size_t const zo = X.orbit_index(w->z);
  std::size_t const xo = X.orbit_index(w->x);
  Point const target = X.orbit_index(w->y) != zo ? w->y : f(w->x);
  EquivMap fixing = fixing_collapsing(X, w->z, target);

  // inverse of f restricted to X \ Gx, which is a bijection onto X \ Gz
  std::vector<Point> inverse(X.size(), 0);
  for (Point p = 0; p < X.size(); ++p) {
    if (X.orbit_index(p) != xo) {
      inverse[f(p)] = p;
    }
  }
  std::vector<Point> m(X.size());
  for (Point t = 0; t < X.size(); ++t) {
    if (X.orbit_index(t) != zo) {
      m[t] = inverse[t];
      continue;
    }
    Element g = 0;
    while (X.act(g, w->z) != t) {
      ++g;
    }
    m[t] = inverse[X.act(g, target)];
  }
  if (equivariance_violation(X, m)) {
    throw Error(ErrorCode::Internal, "factor m is not equivariant");
  }
  EquivMap m2(std::move(m), EquivMap::Trusted{});
  if (compose(fixing, f) != f || compose(f, m2) != fixing) {
    throw Error(ErrorCode::Internal, "R-factorization identities fail");
  }
  return RFactorization{w->z, target, std::move(fixing), f, std::move(m2)};
}

std::vector<CensusEntry> all_collapsings(MonoidTable const& M) {
  std::vector<CensusEntry> out;
  for (ElementId id = 0; id < M.size(); ++id) {
    auto const& f = M.element(id);
    if (auto w = collapsing_by_characterization(M.gset(), f)) {
      out.push_back(CensusEntry{id, *w, is_fixing_collapsing(M.gset(), f)});
    }
  }
  return out;
}

}  // namespace eqmon
