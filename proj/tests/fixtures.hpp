#pragma once

#include <vector>

#include "eqmon/verify.hpp"

namespace fixtures {

/// Z_2 on {0,1,2,3}: a swaps 1 and 2, fixes 0 and 3.
inline eqmon::GSet example1() {
  using namespace eqmon;
  return build_gset(build_named_group(GroupSpec::cyclic(2)), {{0, 1, 2, 3}, {0, 2, 1, 3}},
                    {"0", "1", "2", "3"});
}

inline std::vector<eqmon::GroupSpec> all_families() {
  using eqmon::GroupSpec;
  return {GroupSpec::cyclic(2), GroupSpec::cyclic(3),    GroupSpec::cyclic(4),
          GroupSpec::klein(),   GroupSpec::symmetric(3), GroupSpec::dihedral(4)};
}

/// Seeded coset G-sets small enough for the n^n brute-force oracle.
inline std::vector<eqmon::GSet> small_corpus(std::size_t count = 30, std::size_t max_points = 6) {
  eqmon::CorpusSpec spec;
  spec.seed = 7;
  spec.groups = all_families();
  spec.max_points = max_points;
  spec.max_monoid = 2000;
  spec.count = count;
  std::vector<eqmon::GSet> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(eqmon::random_gset(spec, i));
  }
  return out;
}

}  // namespace fixtures
