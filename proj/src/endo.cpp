#include "eqmon/endo.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <limits>
#include <numeric>

#include "eqmon/error.hpp"

namespace eqmon {

bool EquivMap::is_bijective() const {
  std::vector<bool> hit(word_.size(), false);
  for (Point y : word_) {
    if (hit[y]) {
      return false;
    }
    hit[y] = true;
  }
  return true;
}

std::optional<std::pair<Element, Point>> equivariance_violation(
    GSet const& X, std::span<Point const> word) {
  for (Element g = 0; g < X.group().order(); ++g) {
    for (Point x = 0; x < X.size(); ++x) {
      if (word[X.act(g, x)] != X.act(g, word[x])) {
        return std::pair{g, x};
      }
    }
  }
  return std::nullopt;
}

EquivMap make_map(GSet const& X, std::vector<Point> word) {
  if (word.size() != X.size()) {
    throw Error(ErrorCode::InvalidWord, "word has length " + std::to_string(word.size()) +
                                            ", expected " + std::to_string(X.size()));
  }
  for (Point y : word) {
    if (y >= X.size()) {
      throw Error(ErrorCode::InvalidWord, "image " + std::to_string(y) + " out of range");
    }
  }
  if (auto bad = equivariance_violation(X, word)) {
    auto [g, x] = *bad;
    throw Error(ErrorCode::NotEquivariant,
                "g=" + X.group().name(g) + " x=" + X.point_name(x));
  }
  return EquivMap(std::move(word), EquivMap::Trusted{});
}

EquivMap identity_map(GSet const& X) {
  std::vector<Point> word(X.size());
  std::iota(word.begin(), word.end(), Point{0});
  return EquivMap(std::move(word), EquivMap::Trusted{});
}

EquivMap from_representative_images(GSet const& X, std::map<Point, Point> const& assignment) {
  constexpr auto kUnset = std::numeric_limits<Point>::max();
  std::vector<Point> word(X.size(), kUnset);
  std::vector<bool> named(X.orbit_count(), false);
  for (auto [x, t] : assignment) {
    if (x >= X.size() || t >= X.size()) {
      throw Error(ErrorCode::InvalidWord, "assignment refers to a missing point");
    }
    if (!X.stabilizer(x).is_subset_of(X.stabilizer(t))) {
      throw Error(ErrorCode::StabilizerNotContained,
                  "x=" + X.point_name(x) + " target=" + X.point_name(t));
    }
    std::size_t const o = X.orbit_index(x);
    if (named[o]) {
      throw Error(ErrorCode::InvalidWord, "orbit of " + X.point_name(x) + " assigned twice");
    }
    named[o] = true;
    for (Element g = 0; g < X.group().order(); ++g) {
      Point const src = X.act(g, x);
      Point const dst = X.act(g, t);
      // Containment of stabilizers makes g.x -> g.t well defined.
      if (word[src] != kUnset && word[src] != dst) {
        throw Error(ErrorCode::Internal, "well-definedness conflict at " + X.point_name(src));
      }
      word[src] = dst;
    }
  }
  for (std::size_t o = 0; o < named.size(); ++o) {
    if (!named[o]) {
      throw Error(ErrorCode::MissingOrbit,
                  "no image for the orbit of " + X.point_name(X.orbit_representatives()[o]));
    }
  }
  assert(!equivariance_violation(X, word));
  return EquivMap(std::move(word), EquivMap::Trusted{});
}

std::vector<std::vector<Point>> valid_targets(GSet const& X) {
  std::vector<std::vector<Point>> out;
  for (Point x : X.orbit_representatives()) {
    std::vector<Point> targets;
    for (Point y = 0; y < X.size(); ++y) {
      if (X.stabilizer(x).is_subset_of(X.stabilizer(y))) {
        targets.push_back(y);
      }
    }
    out.push_back(std::move(targets));
  }
  return out;
}

std::uint64_t count_endos(GSet const& X) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (auto const& targets : valid_targets(X)) {
    std::uint64_t const k = targets.size();
    count = count > kMax / k ? kMax : count * k;
  }
  return count;
}

std::vector<EquivMap> enumerate_endos(GSet const& X, std::uint64_t cap) {
  std::uint64_t const count = count_endos(X);
  if (count > cap) {
    throw Error(ErrorCode::TooMany, std::to_string(count) + " maps exceed the cap of " +
                                        std::to_string(cap));
  }
  auto const targets = valid_targets(X);
  auto const& reps = X.orbit_representatives();
  std::vector<EquivMap> out;
  out.reserve(count);

  // Odometer over representative targets, last representative fastest. Since
  // each representative is the least point of its orbit this is also the
  // lexicographic order of the words.
  std::vector<std::size_t> digit(reps.size(), 0);
  std::vector<Point> word(X.size());
  for (std::uint64_t k = 0; k < count; ++k) {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      Point const t = targets[r][digit[r]];
      for (Element g = 0; g < X.group().order(); ++g) {
        word[X.act(g, reps[r])] = X.act(g, t);
      }
    }
    out.emplace_back(word, EquivMap::Trusted{});
    for (std::size_t r = reps.size(); r-- > 0;) {
      if (++digit[r] < targets[r].size()) {
        break;
      }
      digit[r] = 0;
    }
  }
  return out;
}

EquivMap compose(EquivMap const& f, EquivMap const& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::InvalidWord, "composing maps of different G-sets");
  }
  std::vector<Point> word(g.size());
  for (Point x = 0; x < g.size(); ++x) {
    word[x] = f(g(x));
  }
  return EquivMap(std::move(word), EquivMap::Trusted{});
}

std::vector<std::size_t> KernelPartition::labels() const {
  std::size_t n = 0;
  for (auto const& b : blocks) {
    n += b.size();
  }
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Point x : blocks[i]) {
      out[x] = i;
    }
  }
  return out;
}

bool KernelPartition::refines(KernelPartition const& coarser) const {
  auto const label = coarser.labels();
  return std::all_of(blocks.begin(), blocks.end(), [&](auto const& b) {
    return std::all_of(b.begin(), b.end(), [&](Point x) { return label[x] == label[b.front()]; });
  });
}

KernelPartition kernel(EquivMap const& f) {
  KernelPartition k;
  std::vector<std::size_t> block_of_value(f.size(), f.size());
  for (Point x = 0; x < f.size(); ++x) {
    std::size_t& b = block_of_value[f(x)];
    if (b == f.size()) {
      b = k.blocks.size();
      k.blocks.emplace_back();
    }
    k.blocks[b].push_back(x);
  }
  return k;
}

std::vector<Point> image(EquivMap const& f) {
  std::vector<Point> out(f.word());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> fixed_points(EquivMap const& f) {
  std::vector<Point> out;
  for (Point x = 0; x < f.size(); ++x) {
    if (f(x) == x) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<EquivMap> units(GSet const& X, std::uint64_t cap) {
  auto all = enumerate_endos(X, cap);
  std::erase_if(all, [](EquivMap const& f) { return !f.is_bijective(); });
  return all;
}

std::optional<EquivMap> exists_map_sending(GSet const& X, Point x, Point y) {
  if (!X.stabilizer(x).is_subset_of(X.stabilizer(y))) {
    return std::nullopt;
  }
  std::map<Point, Point> assignment{{x, y}};
  for (Point r : X.orbit_representatives()) {
    if (X.orbit_index(r) != X.orbit_index(x)) {
      assignment.emplace(r, r);
    }
  }
  return from_representative_images(X, assignment);
}

std::optional<EquivMap> exists_bijection_sending(GSet const& X, Point x, Point y) {
  if (X.stabilizer(x) != X.stabilizer(y)) {
    return std::nullopt;
  }
  std::map<Point, Point> assignment{{x, y}};
  if (X.orbit_index(x) != X.orbit_index(y)) {
    assignment.emplace(y, x);
  }
  for (Point r : X.orbit_representatives()) {
    if (X.orbit_index(r) != X.orbit_index(x) && X.orbit_index(r) != X.orbit_index(y)) {
      assignment.emplace(r, r);
    }
  }
  return from_representative_images(X, assignment);
}

bool is_valid_constant(GSet const& X, Point c) {
  return X.stabilizer(c).size() == X.group().order();
}

EquivMap constant_map(GSet const& X, Point c) {
  if (!is_valid_constant(X, c)) {
    throw Error(ErrorCode::StabilizerNotContained,
                "constant " + X.point_name(c) + " is not fixed by G");
  }
  return EquivMap(std::vector<Point>(X.size(), c), EquivMap::Trusted{});
}

EquivMap extend_to_bijection(GSet const& X, PartialMap const& f) {
  std::vector<Point> domain;
  for (auto [x, y] : f) {
    if (x >= X.size() || y >= X.size()) {
      throw Error(ErrorCode::InvalidWord, "partial map refers to a missing point");
    }
    domain.push_back(x);
  }
  if (!is_invariant_subset(X, domain)) {
    throw Error(ErrorCode::DomainNotInvariant, "domain is not a union of orbits");
  }
  std::vector<bool> in_image(X.size(), false);
  for (auto [x, y] : f) {
    if (in_image[y]) {
      throw Error(ErrorCode::NotInjective, "two points map to " + X.point_name(y));
    }
    in_image[y] = true;
  }
  for (auto [x, y] : f) {
    for (Element g = 0; g < X.group().order(); ++g) {
      if (f.at(X.act(g, x)) != X.act(g, y)) {
        throw Error(ErrorCode::NotEquivariantOnDomain,
                    "g=" + X.group().name(g) + " x=" + X.point_name(x));
      }
    }
  }

  std::map<Point, Point> assignment;
  for (auto [x, y] : f) {
    if (X.orbit_representatives()[X.orbit_index(x)] == x) {
      assignment.emplace(x, y);
    }
  }
  for (Box const& b : boxes(X)) {
    std::vector<Point> sources;  // least point of each uncovered domain orbit
    std::vector<std::size_t> targets;  // orbit indices missing from the image
    for (Point x : b.points) {
      if (X.orbit_representatives()[X.orbit_index(x)] != x) {
        continue;
      }
      if (!f.contains(x)) {
        sources.push_back(x);
      }
      if (!in_image[x]) {
        targets.push_back(X.orbit_index(x));
      }
    }
    // injective equivariant maps preserve orbit sizes, so the counts agree
    if (sources.size() != targets.size()) {
      throw Error(ErrorCode::Internal, "unbalanced box during extension");
    }
    for (std::size_t i = 0; i < sources.size(); ++i) {
      Subgroup const& H = X.stabilizer(sources[i]);
      auto const& pts = X.orbit_points()[targets[i]];
      auto t = std::find_if(pts.begin(), pts.end(),
                            [&](Point p) { return X.stabilizer(p) == H; });
      if (t == pts.end()) {
        throw Error(ErrorCode::Internal, "no target with a matching stabilizer");
      }
      assignment.emplace(sources[i], *t);
    }
  }
  return from_representative_images(X, assignment);
}

namespace {

bool single_char_names(GSet const& X) {
  auto const& names = X.point_names();
  return std::all_of(names.begin(), names.end(),
                     [](std::string const& n) { return n.size() == 1 && n != "," && n != "(" && n != ")"; });
}

}  // namespace

std::string format_word(GSet const& X, std::span<Point const> word) {
  bool const compact = single_char_names(X);
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) {
      out += ',';
    }
    out += X.point_name(word[i]);
  }
  return out + ")";
}

std::string format_word(GSet const& X, EquivMap const& f) { return format_word(X, f.word()); }

std::vector<Point> parse_word(GSet const& X, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::string_view> tokens;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t const comma = text.find(',', start);
      tokens.push_back(trim(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      tokens.push_back(text.substr(i, 1));
    }
  }
  std::vector<Point> word;
  for (std::string_view t : tokens) {
    auto const& names = X.point_names();
    auto it = std::find(names.begin(), names.end(), t);
    if (it == names.end()) {
      throw Error(ErrorCode::InvalidWord, "unknown point name '" + std::string(t) + "'");
    }
    word.push_back(static_cast<Point>(it - names.begin()));
  }
  return word;
}

}  // namespace eqmon
