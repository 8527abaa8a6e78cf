#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eqmon/green.hpp"

namespace eqmon {

/// The pair (H, [K]_{N_H}). H is the literal stabilizer of the collapsed point,
/// not its conjugacy class; k_class is sorted.
struct CollapsingType {
  Subgroup h;
  std::vector<Subgroup> k_class;

  bool operator==(CollapsingType const&) const = default;
};

/// x is the collapsed point, y the point outside Gx with f(x) = f(y), and z
/// the least point of the orbit missing from the image with G_z = G_x.
struct CollapsingWitness {
  Point x = 0;
  Point y = 0;
  Point z = 0;
  CollapsingType type;

  bool operator==(CollapsingWitness const&) const = default;
};

/// Characterization route: some orbit Gx outside of which f is injective,
/// with Im(f) = X \ Gz and G_x = G_z. Orbits are tried in ascending order and
/// x is the least point of the first matching orbit with G_x = G_z.
std::optional<CollapsingWitness> collapsing_by_characterization(GSet const& X,
                                                                EquivMap const& f);

/// Definition route: ker(f) equals the diagonal plus {(g.x, g.y)} plus
/// {(g.x, h.x) : h^{-1}g in G_y} (both orientations) for some x, y in
/// different orbits, and [G_y]_{N_H} = [G_{f(x)}]_{N_H}. Least x, then least y.
std::optional<CollapsingWitness> collapsing_by_definition(GSet const& X, EquivMap const& f);

/// Runs the characterization route; in debug builds also the definition
/// route, and asserts both agree on the collapsed and partner orbits.
std::optional<CollapsingWitness> is_elementary_collapsing(GSet const& X, EquivMap const& f);

/// True iff both routes classify f identically: both absent, or both present
/// with the same orbits for x, y and z and conjugate H.
bool detectors_agree(GSet const& X, EquivMap const& f);

/// Throws NotACollapsing.
CollapsingType collapsing_type(GSet const& X, EquivMap const& f);

/// The type of f read off with x as the collapsed point, if the kernel of f
/// has the required shape for x and some y.
std::optional<CollapsingType> collapsing_type_at(GSet const& X, EquivMap const& f, Point x);

/// (G_x, [K]_{N_{G_x}})
CollapsingType make_collapsing_type(GSet const& X, Point x, Subgroup const& k);

/// [x -> y]: g.x -> g.y, identity off Gx. Throws StabilizerNotContained.
/// Bijective when x and y share an orbit.
EquivMap fixing_collapsing(GSet const& X, Point x, Point y);

/// (x <-> y): swaps g.x and g.y, identity elsewhere. Throws
/// StabilizersNotEqual, or SameOrbit when x != y lie in one orbit.
EquivMap orbit_swap(GSet const& X, Point x, Point y);

/// The least (x, y) with f = [x -> y] and Gx != Gy, if f is a fixing
/// elementary collapsing.
std::optional<std::pair<Point, Point>> is_fixing_collapsing(GSet const& X, EquivMap const& f);

/// g.x -> g.z on the collapsed orbit, f elsewhere. Throws NotACollapsing.
EquivMap bijective_support(GSet const& X, EquivMap const& f);

/// f = fixing o m1 and fixing = f o m2 with fixing = [z -> target].
struct RFactorization {
  Point z = 0;
  Point target = 0;
  EquivMap fixing;
  EquivMap m1;
  EquivMap m2;
};

/// The target is the witness y, or f(x) when y lies in the missing orbit
/// (then [z -> y] would be a bijection). Both identities are checked before
/// returning. Throws NotACollapsing.
RFactorization r_factor_through_fixing(GSet const& X, EquivMap const& f);

struct CensusEntry {
  ElementId element = 0;
  CollapsingWitness witness;
  std::optional<std::pair<Point, Point>> fixing;
};

/// Every elementary collapsing of M, by element id.
std::vector<CensusEntry> all_collapsings(MonoidTable const& M);

}  // namespace eqmon
