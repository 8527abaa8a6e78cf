#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqmon {

using Element = std::uint32_t;

/// Largest group order accepted by build_named_group.
inline constexpr std::size_t kMaxGroupOrder = 48;

/// A finite group stored as a full Cayley table. Element 0 is the identity.
class Group {
 public:
  std::size_t order() const noexcept { return names_.size(); }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return table_[a * order() + b];
  }
  Element inv(Element a) const noexcept { return inv_[a]; }
  // g^{-1} h g
  Element conjugate(Element h, Element g) const noexcept {
    return mul(inv(g), mul(h, g));
  }

  std::string const& name(Element a) const { return names_[a]; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;

  bool operator==(Group const&) const = default;

 private:
  friend Group build_group_from_table(std::vector<std::string> names,
                                      std::vector<std::vector<Element>> const& table);

  std::vector<std::string> names_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
};

/// Validates a multiplication table and relocates the identity to index 0.
/// Throws Error with NotSquare, DuplicateName, NotClosed, NoIdentity, NoInverse
/// or NotAssociative.
Group build_group_from_table(std::vector<std::string> names,
                             std::vector<std::vector<Element>> const& table);

/// Named families.
///
/// Element orderings:
///  - cyclic n: a^k at index k, named "e", "a", "a^2", ...
///  - dihedral n (order 2n): r^i s^j at index i + n*j, named "e", "r", "r^2",
///    ..., "s", "rs", "r^2s", ...; with s r s = r^{-1}.
///  - symmetric n: permutations of {0..n-1} in lexicographic order of their
///    one-line images, named in cycle notation ("e", "(0 1)", ...); the
///    product gh applies h first.
///  - product: pairs (a, b) at index a*|B| + b, named "(a,b)".
struct GroupSpec {
  enum class Family { Cyclic, Dihedral, Symmetric, Product };

  Family family = Family::Cyclic;
  unsigned n = 1;
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(unsigned n) { return {Family::Cyclic, n, {}}; }
  static GroupSpec dihedral(unsigned n) { return {Family::Dihedral, n, {}}; }
  static GroupSpec symmetric(unsigned n) { return {Family::Symmetric, n, {}}; }
  static GroupSpec product(GroupSpec a, GroupSpec b) {
    return {Family::Product, 0, {std::move(a), std::move(b)}};
  }
  static GroupSpec klein() { return product(cyclic(2), cyclic(2)); }
};

/// Throws Error(TooLarge) when the resulting order exceeds kMaxGroupOrder.
Group build_named_group(GroupSpec const& spec);

/// A subgroup, canonicalized as the sorted list of its members.
class Subgroup {
 public:
  Subgroup() : members_{Group::identity()} {}

  std::vector<Element> const& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element g) const;
  /// Literal containment of member sets.
  bool is_subset_of(Subgroup const& other) const;

  auto operator<=>(Subgroup const&) const = default;

 private:
  friend Subgroup make_subgroup(Group const&, std::vector<Element>);
  friend Subgroup subgroup_generated(Group const&, std::span<Element const>);
  friend Subgroup conjugate_subgroup(Group const&, Subgroup const&, Element);
  friend Subgroup whole_group(Group const&);

  std::vector<Element> members_;
};

/// Throws Error(NotASubgroup) unless members form a subgroup of G.
Subgroup make_subgroup(Group const& G, std::vector<Element> members);
Subgroup trivial_subgroup();
Subgroup whole_group(Group const& G);

/// Smallest subgroup containing gens.
Subgroup subgroup_generated(Group const& G, std::span<Element const> gens);

/// {g^{-1} h g : h in H}
Subgroup conjugate_subgroup(Group const& G, Subgroup const& H, Element g);

/// The conjugacy class [H] of a subgroup. Members are sorted, so the
/// canonical representative (lexicographically least member list) is first.
struct SubgroupClass {
  std::vector<Subgroup> members;

  Subgroup const& rep() const { return members.front(); }
  bool contains(Subgroup const& H) const;
  bool operator==(SubgroupClass const&) const = default;
};

SubgroupClass conjugacy_class_of_subgroup(Group const& G, Subgroup const& H);

/// [H]_N = {n^{-1} H n : n in N}, sorted and deduplicated.
std::vector<Subgroup> n_conjugacy_class(Group const& G, Subgroup const& H,
                                        Subgroup const& N);

Subgroup normalizer(Group const& G, Subgroup const& H);

/// True iff H is contained in some conjugate of K.
bool conj_leq(Group const& G, Subgroup const& H, Subgroup const& K);

/// Stable sort of classes by the order of their subgroups. Used for listings
/// only; the position carries no meaning.
std::vector<SubgroupClass> sorted_by_order(std::vector<SubgroupClass> classes);

/// Member names, in member order.
std::vector<std::string> element_names(Group const& G, Subgroup const& H);

}  // namespace eqmon
