#include "eqmon/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "eqmon/error.hpp"

namespace eqmon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::EmptyPointSet: return "EmptyPointSet";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::IdentityAxiomViolated: return "IdentityAxiomViolated";
    case ErrorCode::CompatibilityViolated: return "CompatibilityViolated";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::StabilizerNotContained: return "StabilizerNotContained";
    case ErrorCode::StabilizersNotEqual: return "StabilizersNotEqual";
    case ErrorCode::SameOrbit: return "SameOrbit";
    case ErrorCode::MissingOrbit: return "MissingOrbit";
    case ErrorCode::TooMany: return "TooMany";
    case ErrorCode::DomainNotInvariant: return "DomainNotInvariant";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotEquivariantOnDomain: return "NotEquivariantOnDomain";
    case ErrorCode::NotACollapsing: return "NotACollapsing";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::MonoidTooLarge: return "MonoidTooLarge";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::optional<Element> Group::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - names_.begin());
}

Group build_group_from_table(std::vector<std::string> names,
                             std::vector<std::vector<Element>> const& table) {
  std::size_t const n = names.size();
  if (n == 0 || table.size() != n) {
    throw Error(ErrorCode::NotSquare, "table has " + std::to_string(table.size()) +
                                          " rows for " + std::to_string(n) + " names");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has length " +
                                            std::to_string(table[i].size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorCode::NotClosed, "entry (" + std::to_string(i) + "," +
                                              std::to_string(j) + ") = " +
                                              std::to_string(table[i][j]));
      }
    }
  }
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != n) {
      throw Error(ErrorCode::DuplicateName, "element names are not distinct");
    }
  }

  auto is_identity = [&](std::size_t e) {
    for (std::size_t g = 0; g < n; ++g) {
      if (table[e][g] != g || table[g][e] != g) {
        return false;
      }
    }
    return true;
  };
  std::size_t e = 0;
  while (e < n && !is_identity(e)) {
    ++e;
  }
  if (e == n) {
    throw Error(ErrorCode::NoIdentity, "no two-sided identity in table");
  }

  // order[new] = old, with the identity moved to the front
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::rotate(order.begin(), order.begin() + e, order.begin() + e + 1);
  std::vector<Element> position(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[order[i]] = static_cast<Element>(i);
  }

  Group G;
  G.names_.resize(n);
  G.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    G.names_[i] = std::move(names[order[i]]);
    for (std::size_t j = 0; j < n; ++j) {
      G.table_[i * n + j] = position[table[order[i]][order[j]]];
    }
  }

  G.inv_.assign(n, 0);
  for (Element g = 0; g < n; ++g) {
    Element h = 0;
    while (h < n && !(G.mul(g, h) == 0 && G.mul(h, g) == 0)) {
      ++h;
    }
    if (h == n) {
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(order[g]) +
                                            " has no inverse");
    }
    G.inv_[g] = h;
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element const ab = G.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (G.mul(ab, c) != G.mul(a, G.mul(b, c))) {
          throw Error(ErrorCode::NotAssociative,
                      "(" + std::to_string(order[a]) + "," + std::to_string(order[b]) +
                          "," + std::to_string(order[c]) + ")");
        }
      }
    }
  }
  return G;
}

namespace {

std::string power_name(std::string const& base, unsigned k) {
  if (k == 0) {
    return "";
  }
  return k == 1 ? base : base + "^" + std::to_string(k);
}

Group cyclic_group(unsigned n) {
  std::vector<std::string> names(n);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (unsigned i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : power_name("a", i);
    for (unsigned j = 0; j < n; ++j) {
      table[i][j] = (i + j) % n;
    }
  }
  return build_group_from_table(std::move(names), table);
}

Group dihedral_group(unsigned n) {
  unsigned const order = 2 * n;
  std::vector<std::string> names(order);
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (unsigned a = 0; a < order; ++a) {
    unsigned const i = a % n;
    unsigned const s = a / n;
    std::string name = power_name("r", i) + (s ? "s" : "");
    names[a] = name.empty() ? "e" : name;
    for (unsigned b = 0; b < order; ++b) {
      unsigned const j = b % n;
      unsigned const t = b / n;
      // r^i s^s r^j s^t = r^{i + (-1)^s j} s^{s+t}
      unsigned const k = s ? (i + n - j) % n : (i + j) % n;
      table[a][b] = k + n * ((s + t) % 2);
    }
  }
  return build_group_from_table(std::move(names), table);
}

std::string cycle_name(std::vector<unsigned> const& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::ostringstream out;
  for (unsigned i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) {
      continue;
    }
    out << '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out << (first ? "" : " ") << j;
      first = false;
      j = perm[j];
    }
    out << ')';
  }
  std::string name = out.str();
  return name.empty() ? "e" : name;
}

Group symmetric_group(unsigned n) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::size_t const order = perms.size();
  std::vector<std::string> names(order);
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<unsigned> gh(n);
  for (std::size_t a = 0; a < order; ++a) {
    names[a] = cycle_name(perms[a]);
    for (std::size_t b = 0; b < order; ++b) {
      for (unsigned x = 0; x < n; ++x) {
        gh[x] = perms[a][perms[b][x]];
      }
      auto it = std::lower_bound(perms.begin(), perms.end(), gh);
      table[a][b] = static_cast<Element>(it - perms.begin());
    }
  }
  return build_group_from_table(std::move(names), table);
}

Group direct_product(Group const& A, Group const& B) {
  std::size_t const nb = B.order();
  std::size_t const order = A.order() * nb;
  std::vector<std::string> names(order);
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t p = 0; p < order; ++p) {
    auto const a = static_cast<Element>(p / nb);
    auto const b = static_cast<Element>(p % nb);
    names[p] = "(" + A.name(a) + "," + B.name(b) + ")";
    for (std::size_t q = 0; q < order; ++q) {
      auto const c = static_cast<Element>(q / nb);
      auto const d = static_cast<Element>(q % nb);
      table[p][q] = static_cast<Element>(A.mul(a, c) * nb + B.mul(b, d));
    }
  }
  return build_group_from_table(std::move(names), table);
}

std::size_t predicted_order(GroupSpec const& spec) {
  switch (spec.family) {
    case GroupSpec::Family::Cyclic: return spec.n;
    case GroupSpec::Family::Dihedral: return 2 * std::size_t{spec.n};
    case GroupSpec::Family::Symmetric: {
      std::size_t f = 1;
      for (unsigned k = 2; k <= spec.n; ++k) {
        f *= k;
        if (f > kMaxGroupOrder) {
          return f;
        }
      }
      return f;
    }
    case GroupSpec::Family::Product: {
      if (spec.factors.size() != 2) {
        throw Error(ErrorCode::ParseError, "product needs exactly two factors");
      }
      std::size_t const a = predicted_order(spec.factors[0]);
      std::size_t const b = predicted_order(spec.factors[1]);
      return a > kMaxGroupOrder || b > kMaxGroupOrder ? kMaxGroupOrder + 1 : a * b;
    }
  }
  return 0;
}

}  // namespace

Group build_named_group(GroupSpec const& spec) {
  if (spec.family != GroupSpec::Family::Product && spec.n == 0) {
    throw Error(ErrorCode::ParseError, "group parameter n must be positive");
  }
  std::size_t const order = predicted_order(spec);
  if (order > kMaxGroupOrder) {
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(order) + " exceeds " +
                                         std::to_string(kMaxGroupOrder));
  }
  switch (spec.family) {
    case GroupSpec::Family::Cyclic: return cyclic_group(spec.n);
    case GroupSpec::Family::Dihedral: return dihedral_group(spec.n);
    case GroupSpec::Family::Symmetric: return symmetric_group(spec.n);
    case GroupSpec::Family::Product:
      return direct_product(build_named_group(spec.factors[0]),
                            build_named_group(spec.factors[1]));
  }
  throw Error(ErrorCode::Internal, "unknown group family");
}

bool Subgroup::contains(Element g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

bool Subgroup::is_subset_of(Subgroup const& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

Subgroup make_subgroup(Group const& G, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto in = [&](Element g) { return std::binary_search(members.begin(), members.end(), g); };
  if (members.empty() || members.front() != Group::identity()) {
    throw Error(ErrorCode::NotASubgroup, "identity missing");
  }
  for (Element a : members) {
    if (a >= G.order()) {
      throw Error(ErrorCode::NotASubgroup, "element " + std::to_string(a) + " out of range");
    }
    if (!in(G.inv(a))) {
      throw Error(ErrorCode::NotASubgroup, "not closed under inverse at " + G.name(a));
    }
    for (Element b : members) {
      if (!in(G.mul(a, b))) {
        throw Error(ErrorCode::NotASubgroup,
                    "not closed under product " + G.name(a) + "*" + G.name(b));
      }
    }
  }
  Subgroup H;
  H.members_ = std::move(members);
  return H;
}

Subgroup trivial_subgroup() { return Subgroup{}; }

Subgroup whole_group(Group const& G) {
  Subgroup H;
  H.members_.resize(G.order());
  std::iota(H.members_.begin(), H.members_.end(), Element{0});
  return H;
}

Subgroup subgroup_generated(Group const& G, std::span<Element const> gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<Element> members{Group::identity()};
  in[0] = true;
  // In a finite group closure under products with the generators suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      Element const p = G.mul(members[i], s);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup H;
  H.members_ = std::move(members);
  return H;
}

Subgroup conjugate_subgroup(Group const& G, Subgroup const& H, Element g) {
  Subgroup K;
  K.members_.clear();
  K.members_.reserve(H.size());
  for (Element h : H.members()) {
    K.members_.push_back(G.conjugate(h, g));
  }
  std::sort(K.members_.begin(), K.members_.end());
  return K;
}

bool SubgroupClass::contains(Subgroup const& H) const {
  return std::binary_search(members.begin(), members.end(), H);
}

std::vector<Subgroup> n_conjugacy_class(Group const& G, Subgroup const& H,
                                        Subgroup const& N) {
  std::vector<Subgroup> out;
  for (Element n : N.members()) {
    out.push_back(conjugate_subgroup(G, H, n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SubgroupClass conjugacy_class_of_subgroup(Group const& G, Subgroup const& H) {
  return SubgroupClass{n_conjugacy_class(G, H, whole_group(G))};
}

Subgroup normalizer(Group const& G, Subgroup const& H) {
  std::vector<Element> members;
  for (Element g = 0; g < G.order(); ++g) {
    if (conjugate_subgroup(G, H, g) == H) {
      members.push_back(g);
    }
  }
  return make_subgroup(G, std::move(members));
}

bool conj_leq(Group const& G, Subgroup const& H, Subgroup const& K) {
  if (K.size() % H.size() != 0) {
    return false;
  }
  for (Element g = 0; g < G.order(); ++g) {
    if (H.is_subset_of(conjugate_subgroup(G, K, g))) {
      return true;
    }
  }
  return false;
}

std::vector<SubgroupClass> sorted_by_order(std::vector<SubgroupClass> classes) {
  std::stable_sort(classes.begin(), classes.end(),
                   [](SubgroupClass const& a, SubgroupClass const& b) {
                     return a.rep().size() < b.rep().size();
                   });
  return classes;
}

std::vector<std::string> element_names(Group const& G, Subgroup const& H) {
  std::vector<std::string> out;
  out.reserve(H.size());
  for (Element h : H.members()) {
    out.push_back(G.name(h));
  }
  return out;
}

}  // namespace eqmon
