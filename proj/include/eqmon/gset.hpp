#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqmon/group.hpp"

namespace eqmon {

using Point = std::uint32_t;

/// A finite set with a validated action of a finite group.
///
/// Orbits and stabilizers are computed once at construction; every query
/// afterwards is a lookup.
class GSet {
 public:
  Group const& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::vector<std::string> const& point_names() const noexcept { return names_; }
  std::string const& point_name(Point x) const { return names_[x]; }

  /// g . x
  Point act(Element g, Point x) const noexcept { return action_[g * size() + x]; }

  Subgroup const& stabilizer(Point x) const { return stabilizers_[x]; }
  /// Index of the orbit containing x, in the order of orbit_points().
  std::size_t orbit_index(Point x) const { return orbit_of_[x]; }
  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  /// Points of each orbit, sorted; orbits ordered by least point.
  std::vector<std::vector<Point>> const& orbit_points() const noexcept { return orbits_; }
  /// Least point of every orbit, ascending.
  std::vector<Point> const& orbit_representatives() const noexcept { return reps_; }

  bool operator==(GSet const& other) const {
    return group_ == other.group_ && names_ == other.names_ && action_ == other.action_;
  }

 private:
  friend GSet build_gset(Group, std::vector<std::vector<Point>> const&,
                         std::vector<std::string>);

  Group group_;
  std::vector<std::string> names_;
  std::vector<Point> action_;
  std::vector<Subgroup> stabilizers_;
  std::vector<std::size_t> orbit_of_;
  std::vector<std::vector<Point>> orbits_;
  std::vector<Point> reps_;
};

/// action[g][x] = g . x. Point names default to "0", "1", ...
/// Throws EmptyPointSet, BadDimensions, IdentityAxiomViolated or
/// CompatibilityViolated.
GSet build_gset(Group G, std::vector<std::vector<Point>> const& action,
                std::vector<std::string> point_names = {});

/// Disjoint union of the left coset spaces G/H_i in list order. Within one
/// subgroup cosets are ordered by their least element, so the identity coset
/// H_i comes first.
GSet build_coset_gset(Group const& G, std::vector<Subgroup> const& subgroups);

struct Orbit {
  std::vector<Point> points;
  Point representative = 0;

  bool operator==(Orbit const&) const = default;
};

Orbit orbit(GSet const& X, Point x);
Subgroup stabilizer(GSet const& X, Point x);
/// X/G, ordered by least representative.
std::vector<Orbit> orbits(GSet const& X);

/// B_[H]: all points whose stabilizer lies in the conjugacy class.
struct Box {
  SubgroupClass subgroup_class;
  std::vector<Point> points;

  bool operator==(Box const&) const = default;
};

/// One box per stabilizer class present (Conj_G(X)), ordered by least point.
std::vector<Box> boxes(GSet const& X);
/// Conj_G(X), in box order.
std::vector<SubgroupClass> stabilizer_classes(GSet const& X);

bool box_leq(GSet const& X, Box const& b1, Box const& b2);

/// One point per orbit of the box, all with the same stabilizer H, where H is
/// the stabilizer of the first orbit's least point.
std::vector<Point> box_representatives(GSet const& X, Box const& b);

bool is_invariant_subset(GSet const& X, std::span<Point const> subset);

}  // namespace eqmon
