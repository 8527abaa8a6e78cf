#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqmon/endo.hpp"

namespace eqmon {

using ElementId = std::size_t;

/// Fixed-width membership vector over element ids.
class IdealSet {
 public:
  IdealSet() = default;
  explicit IdealSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  void insert(ElementId i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(ElementId i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const;
  std::vector<ElementId> ids() const;
  IdealSet& operator|=(IdealSet const& other);

  bool operator==(IdealSet const&) const = default;

  struct Hash {
    std::size_t operator()(IdealSet const& s) const noexcept;
  };

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// End_G(X) materialized with O(#orbits) products.
///
/// Every element is determined by the images of the orbit representatives, so
/// element ids are mixed-radix numbers over the positions of those images in
/// valid_targets(). The id order coincides with lexicographic word order.
class MonoidTable {
 public:
  explicit MonoidTable(GSet X, std::uint64_t cap = kDefaultEnumerationCap);

  GSet const& gset() const noexcept { return gset_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::vector<EquivMap> const& elements() const noexcept { return elements_; }
  EquivMap const& element(ElementId i) const { return elements_[i]; }

  std::optional<ElementId> find(EquivMap const& f) const;
  /// Throws InvalidWord if f is not in the table.
  ElementId id_of(EquivMap const& f) const;
  ElementId identity_id() const noexcept { return identity_; }

  /// id of element(a) o element(b)
  ElementId product(ElementId a, ElementId b) const {
    ElementId id = 0;
    auto const& fa = elements_[a].word();
    auto const& fb = elements_[b].word();
    for (std::size_t r = 0; r < reps_.size(); ++r) {
      id += stride_[r] * position_[r][fa[fb[reps_[r]]]];
    }
    return id;
  }

 private:
  GSet gset_;
  std::vector<EquivMap> elements_;
  std::vector<Point> reps_;
  std::vector<std::size_t> stride_;
  // position_[r][t]: index of t in valid_targets()[r]
  std::vector<std::vector<std::size_t>> position_;
  ElementId identity_ = 0;
};

/// Sf = {m o f}
IdealSet principal_left_ideal(MonoidTable const& M, ElementId f);
/// fS = {f o m}
IdealSet principal_right_ideal(MonoidTable const& M, ElementId f);
/// SfS = {m1 o f o m2}
IdealSet two_sided_ideal(MonoidTable const& M, ElementId f);

/// L via equality of kernels.
bool l_related(MonoidTable const& M, ElementId f, ElementId g);
/// L via equality of principal left ideals.
bool l_related_by_ideals(MonoidTable const& M, ElementId f, ElementId g);
bool r_related(MonoidTable const& M, ElementId f, ElementId g);
bool h_related(MonoidTable const& M, ElementId f, ElementId g);
/// Some c with f L c and c R g.
bool d_related(MonoidTable const& M, ElementId f, ElementId g);
bool j_related(MonoidTable const& M, ElementId f, ElementId g);

/// Classes ordered by least member; members ascending.
struct ClassPartition {
  std::vector<std::vector<ElementId>> classes;
  std::vector<std::size_t> class_of;

  /// Elements with equal labels share a class; label values are arbitrary.
  static ClassPartition from_labels(std::vector<std::size_t> const& labels);

  bool same(ElementId a, ElementId b) const { return class_of[a] == class_of[b]; }
  bool operator==(ClassPartition const& other) const { return classes == other.classes; }
};

/// One D-class laid out as rows (R-classes) by columns (L-classes). cells[r][c]
/// holds the H-class index, or nothing for an empty cell.
struct EggboxBlock {
  std::size_t d_class = 0;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::vector<std::optional<std::size_t>>> cells;
};

struct GreenStructure {
  ClassPartition l, r, h, d;
  /// Empty unless requested.
  std::optional<ClassPartition> j;
  std::vector<EggboxBlock> eggbox;
};

/// L classes from kernels.
ClassPartition l_partition(MonoidTable const& M);
/// L classes from principal left ideals.
ClassPartition l_partition_by_ideals(MonoidTable const& M);
ClassPartition r_partition(MonoidTable const& M);
ClassPartition j_partition(MonoidTable const& M);

GreenStructure green_structure(MonoidTable const& M, bool with_j = true);

/// True iff L o R and R o L are the same relation on M.
bool l_r_commute(GreenStructure const& S);

enum class EggboxFormat { Ascii, Dot, Json };

/// Throws UnsupportedFormat.
EggboxFormat parse_eggbox_format(std::string_view name);

std::string emit_eggbox(MonoidTable const& M, GreenStructure const& S, EggboxFormat format);

}  // namespace eqmon
