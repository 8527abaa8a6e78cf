#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eqmon/gset.hpp"

namespace eqmon {

/// A G-equivariant transformation stored as its image word: word[x] = f(x).
///
/// Values are only produced by the validating constructors below or by
/// operations that preserve equivariance. Equality is word equality.
class EquivMap {
 public:
  /// Tag for callers that already guarantee equivariance.
  struct Trusted {};

  EquivMap(std::vector<Point> word, Trusted) : word_(std::move(word)) {}

  std::vector<Point> const& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  Point operator()(Point x) const { return word_[x]; }
  bool is_bijective() const;

  auto operator<=>(EquivMap const&) const = default;

 private:
  std::vector<Point> word_;
};

/// First (g, x) with word[g.x] != g.word[x], if any.
std::optional<std::pair<Element, Point>> equivariance_violation(
    GSet const& X, std::span<Point const> word);

/// Throws InvalidWord for bad length or entries, NotEquivariant(g, x) otherwise.
EquivMap make_map(GSet const& X, std::vector<Point> word);
EquivMap identity_map(GSet const& X);

/// The equivariant extension of f(g.x) = g.assignment(x). Each orbit must be
/// named by exactly one key; any point of the orbit may serve as its key.
/// Throws StabilizerNotContained(x, target) or MissingOrbit.
EquivMap from_representative_images(GSet const& X, std::map<Point, Point> const& assignment);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// For every orbit representative (ascending), the ascending list of points y
/// with G_x contained in G_y.
std::vector<std::vector<Point>> valid_targets(GSet const& X);

/// Product of the target counts, saturating at UINT64_MAX.
std::uint64_t count_endos(GSet const& X);

/// All of End_G(X) in lexicographic word order. Throws TooMany(count) if the
/// monoid is larger than cap.
std::vector<EquivMap> enumerate_endos(GSet const& X,
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// (f o g)(x) = f(g(x))
EquivMap compose(EquivMap const& f, EquivMap const& g);

/// Blocks of ker(f), each sorted, ordered by least element.
struct KernelPartition {
  std::vector<std::vector<Point>> blocks;

  /// label[x] = index of the block containing x
  std::vector<std::size_t> labels() const;
  /// True iff every block of this partition lies inside a block of coarser.
  bool refines(KernelPartition const& coarser) const;

  bool operator==(KernelPartition const&) const = default;
};

KernelPartition kernel(EquivMap const& f);
std::vector<Point> image(EquivMap const& f);
std::vector<Point> fixed_points(EquivMap const& f);

/// Aut_G(X), in lexicographic word order.
std::vector<EquivMap> units(GSet const& X, std::uint64_t cap = kDefaultEnumerationCap);

/// A map with f(x) = y exists iff G_x is contained in G_y. The witness sends
/// x to y and fixes every other orbit representative.
std::optional<EquivMap> exists_map_sending(GSet const& X, Point x, Point y);

/// A bijective map with f(x) = y exists iff G_x = G_y. The witness is the
/// orbit map (x -> y) when x, y share an orbit, the swap (x <-> y) otherwise.
std::optional<EquivMap> exists_bijection_sending(GSet const& X, Point x, Point y);

bool is_valid_constant(GSet const& X, Point c);
/// Throws StabilizerNotContained when c is not a fixed point of G.
EquivMap constant_map(GSet const& X, Point c);

/// A map defined on the keys only.
using PartialMap = std::map<Point, Point>;

/// Extends an injective equivariant map on an invariant subset to a bijection
/// of X. Inside each box the leftover source orbits are matched in ascending
/// order with the leftover target orbits; each target orbit contributes its
/// least point with the source representative's stabilizer.
/// Throws DomainNotInvariant, NotInjective or NotEquivariantOnDomain.
EquivMap extend_to_bijection(GSet const& X, PartialMap const& f);

/// Word notation: "(0302)" when every point name is a single character,
/// "(3,0,0,0)" otherwise.
std::string format_word(GSet const& X, std::span<Point const> word);
std::string format_word(GSet const& X, EquivMap const& f);
/// Inverse of format_word; the parentheses are optional. Throws InvalidWord
/// for unknown names. Does not check equivariance.
std::vector<Point> parse_word(GSet const& X, std::string_view text);

}  // namespace eqmon
