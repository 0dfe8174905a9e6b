#include "activesum/perm_group.hpp"

#include <algorithm>
#include <deque>

#include "activesum/errors.hpp"

namespace activesum {

// One level of a stabilizer chain: the orbit of `base` under `gens`
// together with a transversal; transversal[i] maps base to orbit[i].
struct BsgsLevel {
  Point base = 0;
  std::vector<Perm> gens;
  std::vector<int> orbit_pos; // point -> orbit index, -1 if outside
  std::vector<Point> orbit;
  std::vector<Perm> transversal;
};

struct Bsgs {
  Point degree = 0;
  std::vector<BsgsLevel> levels;

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto &level : levels)
      n *= level.orbit.size();
    return n;
  }

  // Strips p through levels starting at `from`. Returns the residue and the
  // level at which stripping stopped.
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const BsgsLevel &level = levels[i];
      Point beta = p[level.base];
      int pos = level.orbit_pos[beta];
      if (pos < 0)
        return {std::move(p), i};
      p = p * level.transversal[pos].inverse();
    }
    return {std::move(p), levels.size()};
  }

  bool contains(const Perm &p) const {
    auto [residue, depth] = strip(p, 0);
    return depth == levels.size() && residue.is_identity();
  }
};

namespace {

// Deterministic Schreier-Sims, organized as the classical downward
// verification sweep: level i is verified by sifting all of its Schreier
// generators through the deeper levels; a nontrivial residue becomes a new
// strong generator (possibly with a new base point) and verification
// resumes at its insertion level. A strong generator belongs to every level
// whose base prefix it fixes.
class BsgsBuilder {
public:
  explicit BsgsBuilder(Point degree, const std::vector<Perm> &gens)
      : degree_(degree) {
    for (const Perm &g : gens)
      if (!g.is_identity())
        add_strong(g);
    rebuild_levels();
    verify();
  }

  Bsgs take() {
    Bsgs b;
    b.degree = degree_;
    b.levels = std::move(levels_);
    return b;
  }

private:
  bool fixes_prefix(const Perm &g, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i)
      if (g[base_[i]] != base_[i])
        return false;
    return true;
  }

  // Appends g to the strong set, extending the base so that no strong
  // generator fixes every base point.
  void add_strong(const Perm &g) {
    if (fixes_prefix(g, base_.size())) {
      Point moved = 0;
      while (g[moved] == moved)
        ++moved;
      base_.push_back(moved);
    }
    strong_.push_back(g);
  }

  std::vector<Perm> gens_at_level(std::size_t i) const {
    std::vector<Perm> out;
    for (const Perm &s : strong_)
      if (fixes_prefix(s, i))
        out.push_back(s);
    return out;
  }

  void rebuild_levels() {
    levels_.assign(base_.size(), {});
    for (std::size_t i = 0; i < base_.size(); ++i)
      rebuild_level(i);
  }

  void rebuild_level(std::size_t i) {
    BsgsLevel &level = levels_[i];
    level.base = base_[i];
    level.gens = gens_at_level(i);
    level.orbit_pos.assign(degree_, -1);
    level.orbit.clear();
    level.transversal.clear();
    level.orbit_pos[level.base] = 0;
    level.orbit.push_back(level.base);
    level.transversal.push_back(Perm(degree_));
    for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
      for (const Perm &s : level.gens) {
        Point image = s[level.orbit[pos]];
        if (level.orbit_pos[image] < 0) {
          level.orbit_pos[image] = static_cast<int>(level.orbit.size());
          level.orbit.push_back(image);
          level.transversal.push_back(level.transversal[pos] * s);
        }
      }
    }
  }

  // Sifts p through levels from..end; returns the residue and stop level.
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const BsgsLevel &level = levels_[i];
      int pos = level.orbit_pos[p[level.base]];
      if (pos < 0)
        return {std::move(p), i};
      p = p * level.transversal[pos].inverse();
    }
    return {std::move(p), levels_.size()};
  }

  void verify() {
    if (levels_.empty())
      return;
    std::size_t i = levels_.size() - 1;
    while (true) {
      bool extended = false;
      const BsgsLevel &level = levels_[i];
      // rebuild_levels() invalidates `level`, so `extended` must gate the
      // condition before the size read.
      for (std::size_t pos = 0; !extended && pos < level.orbit.size(); ++pos) {
        for (const Perm &s : level.gens) {
          Point image = s[level.orbit[pos]];
          Perm schreier = level.transversal[pos] * s *
                          level.transversal[level.orbit_pos[image]].inverse();
          if (schreier.is_identity())
            continue;
          auto [residue, stop] = strip(std::move(schreier), i + 1);
          if (residue.is_identity())
            continue;
          add_strong(residue);
          rebuild_levels();
          i = stop < levels_.size() ? stop : levels_.size() - 1;
          extended = true;
          break;
        }
      }
      if (extended)
        continue;
      if (i == 0)
        return;
      --i;
    }
  }

  Point degree_;
  std::vector<Perm> strong_;
  std::vector<Point> base_;
  std::vector<BsgsLevel> levels_;
};

} // namespace

PermGroup::PermGroup(Point degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm &g : gens_)
    if (g.degree() != degree_)
      throw MembershipError("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " +
                            std::to_string(degree_));
  // Drop identity generators; they carry no information.
  std::erase_if(gens_, [](const Perm &g) { return g.is_identity(); });
}

const Bsgs &PermGroup::bsgs() const {
  if (!bsgs_cache_) {
    BsgsBuilder builder(degree_, gens_);
    bsgs_cache_ = std::make_shared<const Bsgs>(builder.take());
  }
  return *bsgs_cache_;
}

std::uint64_t PermGroup::order() const { return bsgs().order(); }

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    return false;
  return bsgs().contains(p);
}

std::shared_ptr<const ElementIndex> PermGroup::element_index(std::size_t cutoff) const {
  if (index_cache_) {
    if (index_cache_->elements.size() > cutoff)
      throw CutoffExceeded("group has more than " + std::to_string(cutoff) +
                           " elements");
    return index_cache_;
  }
  auto idx = std::make_shared<ElementIndex>();
  idx->elements.push_back(Perm(degree_));
  idx->position.emplace(idx->elements[0], 0);
  idx->words.push_back({});
  for (std::size_t i = 0; i < idx->elements.size(); ++i) {
    for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
      Perm next = idx->elements[i] * gens_[gi];
      if (idx->position.count(next))
        continue;
      if (idx->elements.size() + 1 > cutoff)
        throw CutoffExceeded("group has more than " + std::to_string(cutoff) +
                             " elements");
      idx->position.emplace(next, static_cast<std::uint32_t>(idx->elements.size()));
      std::vector<std::uint32_t> word = idx->words[i];
      word.push_back(gi);
      idx->words.push_back(std::move(word));
      idx->elements.push_back(std::move(next));
    }
  }
  index_cache_ = idx;
  return index_cache_;
}

std::vector<Perm> PermGroup::elements(std::size_t cutoff) const {
  return element_index(cutoff)->elements;
}

std::uint64_t PermGroup::exponent(std::size_t cutoff) const {
  return activesum::exponent(*this, cutoff);
}

std::uint64_t element_order(const PermGroup &G, const Perm &x) {
  if (!G.contains(x))
    throw MembershipError("element " + x.to_cycle_string() +
                          " is not in the group");
  return x.order();
}

std::uint64_t exponent(const PermGroup &G, std::size_t cutoff) {
  std::uint64_t e = 1;
  for (const Perm &x : G.elements(cutoff))
    e = lcm_u64(e, x.order());
  return e;
}

TorsionSet torsion_set(const PermGroup &G, std::uint64_t n, std::size_t cutoff) {
  TorsionSet result;
  result.n = n;
  for (const Perm &x : G.elements(cutoff))
    if (n % x.order() == 0)
      result.elements.push_back(x);
  return result;
}

std::uint64_t hom_set_size(std::uint64_t n, const PermGroup &G, std::size_t cutoff) {
  return torsion_set(G, n, cutoff).size();
}

PermGroup generated_subgroup(Point degree, const std::vector<Perm> &span) {
  std::vector<Perm> gens;
  PermGroup H(degree, {});
  for (const Perm &x : span) {
    if (x.is_identity() || H.contains(x))
      continue;
    gens.push_back(x);
    H = PermGroup(degree, gens);
  }
  return H;
}

} // namespace activesum
