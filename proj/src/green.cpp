#include "eqmon/green.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "eqmon/error.hpp"

namespace eqmon {

std::size_t IdealSet::count() const {
  std::size_t c = 0;
  for (auto w : bits_) {
    c += static_cast<std::size_t>(std::popcount(w));
  }
  return c;
}

std::vector<ElementId> IdealSet::ids() const {
  std::vector<ElementId> out;
  for (ElementId i = 0; i < n_; ++i) {
    if (contains(i)) {
      out.push_back(i);
    }
  }
  return out;
}

IdealSet& IdealSet::operator|=(IdealSet const& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] |= other.bits_[i];
  }
  return *this;
}

std::size_t IdealSet::Hash::operator()(IdealSet const& s) const noexcept {
  std::size_t h = s.n_;
  for (auto w : s.bits_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

MonoidTable::MonoidTable(GSet X, std::uint64_t cap)
    : gset_(std::move(X)), elements_(enumerate_endos(gset_, cap)) {
  reps_ = gset_.orbit_representatives();
  auto const targets = valid_targets(gset_);
  stride_.assign(reps_.size(), 1);
  for (std::size_t r = reps_.size(); r-- > 1;) {
    stride_[r - 1] = stride_[r] * targets[r].size();
  }
  position_.assign(reps_.size(), std::vector<std::size_t>(gset_.size(), 0));
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    for (std::size_t i = 0; i < targets[r].size(); ++i) {
      position_[r][targets[r][i]] = i;
    }
  }
  identity_ = id_of(identity_map(gset_));
}

std::optional<ElementId> MonoidTable::find(EquivMap const& f) const {
  if (f.size() != gset_.size()) {
    return std::nullopt;
  }
  ElementId id = 0;
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    id += stride_[r] * position_[r][f(reps_[r])];
  }
  if (id >= elements_.size() || elements_[id] != f) {
    return std::nullopt;
  }
  return id;
}

ElementId MonoidTable::id_of(EquivMap const& f) const {
  if (auto id = find(f)) {
    return *id;
  }
  throw Error(ErrorCode::InvalidWord, format_word(gset_, f) + " is not in End_G(X)");
}

IdealSet principal_left_ideal(MonoidTable const& M, ElementId f) {
  IdealSet out(M.size());
  for (ElementId m = 0; m < M.size(); ++m) {
    out.insert(M.product(m, f));
  }
  return out;
}

IdealSet principal_right_ideal(MonoidTable const& M, ElementId f) {
  IdealSet out(M.size());
  for (ElementId m = 0; m < M.size(); ++m) {
    out.insert(M.product(f, m));
  }
  return out;
}

IdealSet two_sided_ideal(MonoidTable const& M, ElementId f) {
  IdealSet out(M.size());
  for (ElementId r : principal_right_ideal(M, f).ids()) {
    out |= principal_left_ideal(M, r);
  }
  return out;
}

bool l_related(MonoidTable const& M, ElementId f, ElementId g) {
  return kernel(M.element(f)) == kernel(M.element(g));
}

bool l_related_by_ideals(MonoidTable const& M, ElementId f, ElementId g) {
  return principal_left_ideal(M, f) == principal_left_ideal(M, g);
}

bool r_related(MonoidTable const& M, ElementId f, ElementId g) {
  return principal_right_ideal(M, f) == principal_right_ideal(M, g);
}

bool h_related(MonoidTable const& M, ElementId f, ElementId g) {
  return l_related(M, f, g) && r_related(M, f, g);
}

bool d_related(MonoidTable const& M, ElementId f, ElementId g) {
  auto const kf = kernel(M.element(f));
  auto const rg = principal_right_ideal(M, g);
  for (ElementId c = 0; c < M.size(); ++c) {
    if (kernel(M.element(c)) == kf && principal_right_ideal(M, c) == rg) {
      return true;
    }
  }
  return false;
}

bool j_related(MonoidTable const& M, ElementId f, ElementId g) {
  return two_sided_ideal(M, f) == two_sided_ideal(M, g);
}

ClassPartition ClassPartition::from_labels(std::vector<std::size_t> const& labels) {
  ClassPartition p;
  p.class_of.resize(labels.size());
  std::unordered_map<std::size_t, std::size_t> index;
  for (ElementId i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = index.emplace(labels[i], p.classes.size());
    if (fresh) {
      p.classes.emplace_back();
    }
    p.classes[it->second].push_back(i);
    p.class_of[i] = it->second;
  }
  return p;
}

namespace {

template <typename Key, typename Hash = std::hash<Key>>
class Labeler {
 public:
  std::size_t operator()(Key const& key) {
    return index_.emplace(key, index_.size()).first->second;
  }

 private:
  std::unordered_map<Key, std::size_t, Hash> index_;
};

struct VectorHash {
  std::size_t operator()(std::vector<std::size_t> const& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<IdealSet> all_left_ideals(MonoidTable const& M) {
  std::vector<IdealSet> out;
  out.reserve(M.size());
  for (ElementId f = 0; f < M.size(); ++f) {
    out.push_back(principal_left_ideal(M, f));
  }
  return out;
}

std::vector<IdealSet> all_right_ideals(MonoidTable const& M) {
  std::vector<IdealSet> out;
  out.reserve(M.size());
  for (ElementId f = 0; f < M.size(); ++f) {
    out.push_back(principal_right_ideal(M, f));
  }
  return out;
}

ClassPartition partition_by(std::vector<IdealSet> const& ideals) {
  Labeler<IdealSet, IdealSet::Hash> label;
  std::vector<std::size_t> labels;
  labels.reserve(ideals.size());
  for (auto const& s : ideals) {
    labels.push_back(label(s));
  }
  return ClassPartition::from_labels(labels);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

ClassPartition l_partition(MonoidTable const& M) {
  Labeler<std::vector<std::size_t>, VectorHash> label;
  std::vector<std::size_t> labels;
  labels.reserve(M.size());
  for (auto const& f : M.elements()) {
    labels.push_back(label(kernel(f).labels()));
  }
  return ClassPartition::from_labels(labels);
}

ClassPartition l_partition_by_ideals(MonoidTable const& M) {
  return partition_by(all_left_ideals(M));
}

ClassPartition r_partition(MonoidTable const& M) { return partition_by(all_right_ideals(M)); }

ClassPartition j_partition(MonoidTable const& M) {
  // SfS = S(fS) depends only on fS, and Sr only on the L-class of r, so the
  // saturation runs once per R-class over distinct left ideals.
  auto const left = all_left_ideals(M);
  auto const by_left = partition_by(left);
  auto const right = all_right_ideals(M);
  auto const by_right = partition_by(right);

  std::vector<IdealSet> two_sided(by_right.classes.size());
  for (std::size_t rc = 0; rc < by_right.classes.size(); ++rc) {
    IdealSet const& fS = right[by_right.classes[rc].front()];
    IdealSet ideal(M.size());
    std::vector<bool> seen(by_left.classes.size(), false);
    for (ElementId r : fS.ids()) {
      std::size_t const lc = by_left.class_of[r];
      if (!seen[lc]) {
        seen[lc] = true;
        ideal |= left[r];
      }
    }
    two_sided[rc] = std::move(ideal);
  }
  Labeler<IdealSet, IdealSet::Hash> label;
  std::vector<std::size_t> class_label(two_sided.size());
  for (std::size_t rc = 0; rc < two_sided.size(); ++rc) {
    class_label[rc] = label(two_sided[rc]);
  }
  std::vector<std::size_t> labels(M.size());
  for (ElementId f = 0; f < M.size(); ++f) {
    labels[f] = class_label[by_right.class_of[f]];
  }
  return ClassPartition::from_labels(labels);
}

GreenStructure green_structure(MonoidTable const& M, bool with_j) {
  GreenStructure S;
  S.l = l_partition(M);
  S.r = r_partition(M);

  std::size_t const nl = S.l.classes.size();
  std::vector<std::size_t> h_labels(M.size());
  for (ElementId f = 0; f < M.size(); ++f) {
    h_labels[f] = S.r.class_of[f] * nl + S.l.class_of[f];
  }
  S.h = ClassPartition::from_labels(h_labels);

  // D is the join of L and R: components of the bipartite L/R incidence graph.
  std::vector<std::size_t> parent(nl + S.r.classes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (ElementId f = 0; f < M.size(); ++f) {
    std::size_t const a = find_root(parent, S.l.class_of[f]);
    std::size_t const b = find_root(parent, nl + S.r.class_of[f]);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> d_labels(M.size());
  for (ElementId f = 0; f < M.size(); ++f) {
    d_labels[f] = find_root(parent, S.l.class_of[f]);
  }
  S.d = ClassPartition::from_labels(d_labels);

  if (with_j) {
    S.j = j_partition(M);
  }

  for (std::size_t k = 0; k < S.d.classes.size(); ++k) {
    EggboxBlock block;
    block.d_class = k;
    for (ElementId f : S.d.classes[k]) {
      std::size_t const rc = S.r.class_of[f];
      std::size_t const lc = S.l.class_of[f];
      if (std::find(block.rows.begin(), block.rows.end(), rc) == block.rows.end()) {
        block.rows.push_back(rc);
      }
      if (std::find(block.cols.begin(), block.cols.end(), lc) == block.cols.end()) {
        block.cols.push_back(lc);
      }
    }
    // class indices already follow least-member order
    std::sort(block.rows.begin(), block.rows.end());
    std::sort(block.cols.begin(), block.cols.end());
    block.cells.assign(block.rows.size(),
                       std::vector<std::optional<std::size_t>>(block.cols.size()));
    for (ElementId f : S.d.classes[k]) {
      auto row = std::lower_bound(block.rows.begin(), block.rows.end(), S.r.class_of[f]);
      auto col = std::lower_bound(block.cols.begin(), block.cols.end(), S.l.class_of[f]);
      auto& cell = block.cells[row - block.rows.begin()][col - block.cols.begin()];
      if (cell && *cell != S.h.class_of[f]) {
        throw Error(ErrorCode::Internal, "two H-classes share an eggbox cell");
      }
      cell = S.h.class_of[f];
    }
    S.eggbox.push_back(std::move(block));
  }
  return S;
}

bool l_r_commute(GreenStructure const& S) {
  // incidence[l] has bit r iff some element lies in L-class l and R-class r
  std::vector<IdealSet> incidence(S.l.classes.size(), IdealSet(S.r.classes.size()));
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (auto const& h : S.h.classes) {
    std::size_t const l = S.l.class_of[h.front()];
    std::size_t const r = S.r.class_of[h.front()];
    incidence[l].insert(r);
    cells.emplace_back(l, r);
  }
  // a (L o R) b iff incidence[L(a)][R(b)]; a (R o L) b iff incidence[L(b)][R(a)]
  for (auto [la, ra] : cells) {
    for (auto [lb, rb] : cells) {
      if (incidence[la].contains(rb) != incidence[lb].contains(ra)) {
        return false;
      }
    }
  }
  return true;
}

EggboxFormat parse_eggbox_format(std::string_view name) {
  if (name == "ascii") return EggboxFormat::Ascii;
  if (name == "dot") return EggboxFormat::Dot;
  if (name == "json") return EggboxFormat::Json;
  throw Error(ErrorCode::UnsupportedFormat, "'" + std::string(name) + "'");
}

namespace {

std::string cell_label(MonoidTable const& M, GreenStructure const& S,
                       std::optional<std::size_t> h) {
  if (!h) {
    return "";
  }
  std::string out;
  for (ElementId f : S.h.classes[*h]) {
    if (!out.empty()) {
      out += ' ';
    }
    out += format_word(M.gset(), M.element(f));
  }
  return out;
}

std::string emit_ascii(MonoidTable const& M, GreenStructure const& S) {
  std::ostringstream out;
  for (auto const& block : S.eggbox) {
    out << "D-class " << block.d_class << ": " << block.rows.size() << " R x "
        << block.cols.size() << " L\n";
    std::vector<std::size_t> width(block.cols.size(), 0);
    for (auto const& row : block.cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], cell_label(M, S, row[c]).size());
      }
    }
    std::string rule = "+";
    for (auto w : width) {
      rule += std::string(w + 2, '-') + "+";
    }
    out << rule << '\n';
    for (auto const& row : block.cells) {
      out << '|';
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::string const label = cell_label(M, S, row[c]);
        out << ' ' << label << std::string(width[c] - label.size(), ' ') << " |";
      }
      out << '\n' << rule << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_dot(MonoidTable const& M, GreenStructure const& S) {
  std::ostringstream out;
  out << "graph eggbox {\n  node [shape=box];\n";
  for (auto const& block : S.eggbox) {
    std::size_t const k = block.d_class;
    out << "  subgraph cluster_D" << k << " {\n    label=\"D" << k << "\";\n";
    for (std::size_t r = 0; r < block.cells.size(); ++r) {
      for (std::size_t c = 0; c < block.cells[r].size(); ++c) {
        if (block.cells[r][c]) {
          out << "    H" << k << '_' << r << '_' << c << " [label=\""
              << cell_label(M, S, block.cells[r][c]) << "\"];\n";
        }
      }
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_json(MonoidTable const& M, GreenStructure const& S) {
  using nlohmann::json;
  json doc;
  doc["elements"] = json::array();
  for (auto const& f : M.elements()) {
    doc["elements"].push_back(format_word(M.gset(), f));
  }
  doc["L"] = S.l.classes;
  doc["R"] = S.r.classes;
  doc["H"] = S.h.classes;
  doc["D"] = S.d.classes;
  doc["J"] = S.j ? json(S.j->classes) : json(nullptr);
  doc["eggbox"] = json::array();
  for (auto const& block : S.eggbox) {
    json cells = json::array();
    for (auto const& row : block.cells) {
      json jrow = json::array();
      for (auto const& cell : row) {
        jrow.push_back(cell ? json(*cell) : json(nullptr));
      }
      cells.push_back(std::move(jrow));
    }
    doc["eggbox"].push_back(
        {{"d_class", block.d_class}, {"rows", block.rows}, {"cols", block.cols}, {"cells", cells}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_eggbox(MonoidTable const& M, GreenStructure const& S, EggboxFormat format) {
  switch (format) {
    case EggboxFormat::Ascii: return emit_ascii(M, S);
    case EggboxFormat::Dot: return emit_dot(M, S);
    case EggboxFormat::Json: return emit_json(M, S);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unknown eggbox format");
}

}  // namespace eqmon
