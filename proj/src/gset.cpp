#include "eqmon/gset.hpp"

#include <algorithm>
#include <map>

#include "eqmon/error.hpp"

namespace eqmon {

GSet build_gset(Group G, std::vector<std::vector<Point>> const& action,
                std::vector<std::string> point_names) {
  if (action.size() != G.order()) {
    throw Error(ErrorCode::BadDimensions, "action has " + std::to_string(action.size()) +
                                              " rows for a group of order " +
                                              std::to_string(G.order()));
  }
  std::size_t const n = action.front().size();
  if (n == 0) {
    throw Error(ErrorCode::EmptyPointSet, "a G-set needs at least one point");
  }
  if (point_names.empty()) {
    for (std::size_t x = 0; x < n; ++x) {
      point_names.push_back(std::to_string(x));
    }
  }
  if (point_names.size() != n) {
    throw Error(ErrorCode::BadDimensions, "point name count does not match action width");
  }
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (action[g].size() != n) {
      throw Error(ErrorCode::BadDimensions, "action row " + G.name(static_cast<Element>(g)) +
                                                " has wrong length");
    }
    for (Point y : action[g]) {
      if (y >= n) {
        throw Error(ErrorCode::BadDimensions, "image " + std::to_string(y) + " out of range");
      }
    }
  }
  for (Point x = 0; x < n; ++x) {
    if (action[Group::identity()][x] != x) {
      throw Error(ErrorCode::IdentityAxiomViolated, "e . " + point_names[x] + " != " +
                                                        point_names[x]);
    }
  }
  for (Element g = 0; g < G.order(); ++g) {
    for (Element h = 0; h < G.order(); ++h) {
      for (Point x = 0; x < n; ++x) {
        if (action[G.mul(g, h)][x] != action[g][action[h][x]]) {
          throw Error(ErrorCode::CompatibilityViolated,
                      "g=" + G.name(g) + " h=" + G.name(h) + " x=" + point_names[x]);
        }
      }
    }
  }

  GSet X;
  X.names_ = std::move(point_names);
  X.action_.reserve(G.order() * n);
  for (auto const& row : action) {
    X.action_.insert(X.action_.end(), row.begin(), row.end());
  }
  X.group_ = std::move(G);
  Group const& group = X.group_;

  X.stabilizers_.reserve(n);
  for (Point x = 0; x < n; ++x) {
    std::vector<Element> members;
    for (Element g = 0; g < group.order(); ++g) {
      if (X.act(g, x) == x) {
        members.push_back(g);
      }
    }
    X.stabilizers_.push_back(make_subgroup(group, std::move(members)));
  }

  constexpr auto kUnset = static_cast<std::size_t>(-1);
  X.orbit_of_.assign(n, kUnset);
  for (Point x = 0; x < n; ++x) {
    if (X.orbit_of_[x] != kUnset) {
      continue;
    }
    std::vector<Point> pts;
    for (Element g = 0; g < group.order(); ++g) {
      pts.push_back(X.act(g, x));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (Point y : pts) {
      X.orbit_of_[y] = X.orbits_.size();
    }
    X.reps_.push_back(x);
    X.orbits_.push_back(std::move(pts));
  }
  return X;
}

GSet build_coset_gset(Group const& G, std::vector<Subgroup> const& subgroups) {
  // cosets[i] lists the sorted members of the i-th point's coset
  std::vector<std::vector<Element>> cosets;
  for (Subgroup const& H : subgroups) {
    std::vector<bool> covered(G.order(), false);
    for (Element g = 0; g < G.order(); ++g) {
      if (covered[g]) {
        continue;
      }
      std::vector<Element> coset;
      for (Element h : H.members()) {
        coset.push_back(G.mul(g, h));
      }
      std::sort(coset.begin(), coset.end());
      for (Element c : coset) {
        covered[c] = true;
      }
      cosets.push_back(std::move(coset));
    }
  }

  std::vector<std::vector<Point>> action(G.order(), std::vector<Point>(cosets.size()));
  // points are located by (block start, least member) since blocks are disjoint
  std::size_t block_start = 0;
  for (Subgroup const& H : subgroups) {
    std::size_t const block_size = G.order() / H.size();
    std::map<Element, Point> by_least;
    for (std::size_t i = block_start; i < block_start + block_size; ++i) {
      by_least[cosets[i].front()] = static_cast<Point>(i);
    }
    for (Element g = 0; g < G.order(); ++g) {
      for (std::size_t i = block_start; i < block_start + block_size; ++i) {
        Element least = G.order();
        for (Element c : cosets[i]) {
          least = std::min(least, G.mul(g, c));
        }
        action[g][i] = by_least.at(least);
      }
    }
    block_start += block_size;
  }
  return build_gset(G, action);
}

Orbit orbit(GSet const& X, Point x) {
  auto const& pts = X.orbit_points()[X.orbit_index(x)];
  return Orbit{pts, pts.front()};
}

Subgroup stabilizer(GSet const& X, Point x) { return X.stabilizer(x); }

std::vector<Orbit> orbits(GSet const& X) {
  std::vector<Orbit> out;
  for (auto const& pts : X.orbit_points()) {
    out.push_back(Orbit{pts, pts.front()});
  }
  return out;
}

std::vector<Box> boxes(GSet const& X) {
  std::vector<Box> out;
  for (Point x = 0; x < X.size(); ++x) {
    auto it = std::find_if(out.begin(), out.end(), [&](Box const& b) {
      return b.subgroup_class.contains(X.stabilizer(x));
    });
    if (it == out.end()) {
      out.push_back(Box{conjugacy_class_of_subgroup(X.group(), X.stabilizer(x)), {x}});
    } else {
      it->points.push_back(x);
    }
  }
  return out;
}

std::vector<SubgroupClass> stabilizer_classes(GSet const& X) {
  std::vector<SubgroupClass> out;
  for (Box& b : boxes(X)) {
    out.push_back(std::move(b.subgroup_class));
  }
  return out;
}

bool box_leq(GSet const& X, Box const& b1, Box const& b2) {
  return conj_leq(X.group(), b1.subgroup_class.rep(), b2.subgroup_class.rep());
}

std::vector<Point> box_representatives(GSet const& X, Box const& b) {
  std::vector<Point> reps;
  std::vector<std::size_t> done;
  Subgroup const* H = nullptr;
  for (Point x : b.points) {
    std::size_t const o = X.orbit_index(x);
    if (std::find(done.begin(), done.end(), o) != done.end()) {
      continue;
    }
    if (H == nullptr) {
      H = &X.stabilizer(x);
    }
    if (X.stabilizer(x) == *H) {
      reps.push_back(x);
      done.push_back(o);
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

bool is_invariant_subset(GSet const& X, std::span<Point const> subset) {
  std::vector<bool> in(X.size(), false);
  for (Point y : subset) {
    in[y] = true;
  }
  for (Point y : subset) {
    for (Element g = 0; g < X.group().order(); ++g) {
      if (!in[X.act(g, y)]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace eqmon
