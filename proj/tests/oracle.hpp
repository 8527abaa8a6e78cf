#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library except to read the raw action table of a G-set.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "eqmon/gset.hpp"

namespace oracle {

using Word = std::vector<std::uint32_t>;

struct Action {
  std::size_t order = 0;
  std::size_t n = 0;
  std::vector<Word> rows;  // rows[g][x] = g.x
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::uint32_t> inv;
};

inline Action action_of(eqmon::GSet const& X) {
  Action a;
  a.order = X.group().order();
  a.n = X.size();
  a.rows.assign(a.order, Word(a.n));
  a.mul.assign(a.order, std::vector<std::uint32_t>(a.order));
  a.inv.assign(a.order, 0);
  for (std::uint32_t g = 0; g < a.order; ++g) {
    for (std::uint32_t x = 0; x < a.n; ++x) {
      a.rows[g][x] = X.act(g, x);
    }
    for (std::uint32_t h = 0; h < a.order; ++h) {
      a.mul[g][h] = X.group().mul(g, h);
    }
  }
  for (std::uint32_t g = 0; g < a.order; ++g) {
    for (std::uint32_t h = 0; h < a.order; ++h) {
      if (a.mul[g][h] == 0) {
        a.inv[g] = h;
      }
    }
  }
  return a;
}

inline bool equivariant(Action const& a, Word const& f) {
  for (std::size_t g = 0; g < a.order; ++g) {
    for (std::size_t x = 0; x < a.n; ++x) {
      if (f[a.rows[g][x]] != a.rows[g][f[x]]) {
        return false;
      }
    }
  }
  return true;
}

/// Every equivariant word, by filtering all n^n words. Lexicographic order.
inline std::vector<Word> monoid(Action const& a) {
  std::vector<Word> out;
  Word w(a.n, 0);
  while (true) {
    if (equivariant(a, w)) {
      out.push_back(w);
    }
    std::size_t i = a.n;
    while (i > 0 && w[i - 1] + 1 == a.n) {
      w[--i] = 0;
    }
    if (i == 0) {
      break;
    }
    ++w[i - 1];
  }
  return out;
}

inline Word compose(Word const& f, Word const& g) {
  Word h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    h[x] = f[g[x]];
  }
  return h;
}

inline std::set<Word> left_ideal(std::vector<Word> const& S, Word const& f) {
  std::set<Word> out;
  for (auto const& m : S) {
    out.insert(compose(m, f));
  }
  return out;
}

inline std::set<Word> right_ideal(std::vector<Word> const& S, Word const& f) {
  std::set<Word> out;
  for (auto const& m : S) {
    out.insert(compose(f, m));
  }
  return out;
}

inline std::set<std::uint32_t> stabilizer(Action const& a, std::uint32_t x) {
  std::set<std::uint32_t> out;
  for (std::uint32_t g = 0; g < a.order; ++g) {
    if (a.rows[g][x] == x) {
      out.insert(g);
    }
  }
  return out;
}

inline std::set<std::uint32_t> orbit(Action const& a, std::uint32_t x) {
  std::set<std::uint32_t> out;
  for (std::size_t g = 0; g < a.order; ++g) {
    out.insert(a.rows[g][x]);
  }
  return out;
}

inline std::set<std::uint32_t> conjugate(Action const& a, std::set<std::uint32_t> const& H,
                                         std::uint32_t n) {
  std::set<std::uint32_t> out;
  for (auto h : H) {
    out.insert(a.mul[a.mul[a.inv[n]][h]][n]);
  }
  return out;
}

inline std::set<std::uint32_t> normalizer(Action const& a, std::set<std::uint32_t> const& H) {
  std::set<std::uint32_t> out;
  for (std::uint32_t g = 0; g < a.order; ++g) {
    if (conjugate(a, H, g) == H) {
      out.insert(g);
    }
  }
  return out;
}

/// The elementary collapsing definition checked literally: some x, y in
/// different orbits with ker(f) equal to the prescribed relation and
/// [G_y]_N = [G_f(x)]_N for N the normalizer of G_x.
inline bool is_collapsing(Action const& a, Word const& f) {
  using Pair = std::pair<std::uint32_t, std::uint32_t>;
  std::set<Pair> ker;
  for (std::uint32_t p = 0; p < a.n; ++p) {
    for (std::uint32_t q = 0; q < a.n; ++q) {
      if (f[p] == f[q]) {
        ker.insert({p, q});
      }
    }
  }
  for (std::uint32_t x = 0; x < a.n; ++x) {
    auto const ox = orbit(a, x);
    for (std::uint32_t y = 0; y < a.n; ++y) {
      if (ox.count(y)) {
        continue;
      }
      std::set<Pair> shape;
      for (std::uint32_t p = 0; p < a.n; ++p) {
        shape.insert({p, p});
      }
      auto const gy = stabilizer(a, y);
      for (std::uint32_t g = 0; g < a.order; ++g) {
        shape.insert({a.rows[g][x], a.rows[g][y]});
        shape.insert({a.rows[g][y], a.rows[g][x]});
        for (std::uint32_t h = 0; h < a.order; ++h) {
          if (gy.count(a.mul[a.inv[h]][g])) {
            shape.insert({a.rows[g][x], a.rows[h][x]});
            shape.insert({a.rows[h][x], a.rows[g][x]});
          }
        }
      }
      if (shape != ker) {
        continue;
      }
      auto const N = normalizer(a, stabilizer(a, x));
      std::set<std::set<std::uint32_t>> cy, cfx;
      for (auto n : N) {
        cy.insert(conjugate(a, gy, n));
        cfx.insert(conjugate(a, stabilizer(a, f[x]), n));
      }
      if (cy == cfx) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
