#include "word_oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace activesum::testing {

namespace {

// Words are stored as 4-bit letter strings under a leading sentinel bit;
// letter 2i is generator i, 2i+1 its inverse.
using Code = std::uint64_t;

Code encode(const std::vector<unsigned> &letters) {
  Code code = 1;
  for (unsigned letter : letters)
    code = (code << 4) | letter;
  return code;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;

  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

void reduce_letters_into(const std::vector<unsigned> &word,
                         std::vector<unsigned> &out) {
  out.clear();
  for (unsigned letter : word) {
    if (!out.empty() && (out.back() ^ 1u) == letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
}

} // namespace

std::optional<std::uint64_t>
presented_order_by_words(const Presentation &p, unsigned max_len,
                         std::size_t word_cap) {
  std::size_t rank = p.rank();
  if (rank == 0)
    return 1;
  if (2 * rank > 16 || max_len > 14)
    return std::nullopt; // letters must fit in 4 bits, words in a Code

  // Relator variants: all cyclic rotations of each relator and its inverse.
  std::vector<std::vector<unsigned>> variants;
  {
    std::vector<std::vector<unsigned>> seen;
    auto add = [&](const Word &w) {
      std::vector<unsigned> letters;
      for (int l : w)
        letters.push_back(l > 0 ? 2u * static_cast<unsigned>(l - 1)
                                : 2u * static_cast<unsigned>(-l - 1) + 1u);
      for (std::size_t s = 0; s < letters.size(); ++s) {
        std::vector<unsigned> rot(letters.begin() + s, letters.end());
        rot.insert(rot.end(), letters.begin(), letters.begin() + s);
        if (std::find(seen.begin(), seen.end(), rot) == seen.end()) {
          seen.push_back(rot);
          variants.push_back(rot);
        }
      }
    };
    for (const Word &r : p.relators()) {
      add(r);
      add(inverse_word(r));
    }
  }

  // All freely reduced words up to max_len, in length order.
  std::vector<std::vector<unsigned>> words;
  std::unordered_map<Code, std::uint32_t> id_of;
  std::vector<std::size_t> length_start; // first word index of each length
  words.push_back({});
  id_of[encode({})] = 0;
  length_start.push_back(0);
  std::size_t prev_begin = 0;
  for (unsigned len = 1; len <= max_len; ++len) {
    std::size_t begin = words.size();
    length_start.push_back(begin);
    for (std::size_t i = prev_begin; i < begin; ++i) {
      for (unsigned letter = 0; letter < 2 * rank; ++letter) {
        if (!words[i].empty() && (words[i].back() ^ 1u) == letter)
          continue;
        std::vector<unsigned> next = words[i];
        next.push_back(letter);
        if (words.size() >= word_cap)
          return std::nullopt;
        id_of[encode(next)] = static_cast<std::uint32_t>(words.size());
        words.push_back(std::move(next));
      }
    }
    prev_begin = begin;
  }
  length_start.push_back(words.size());

  UnionFind uf;
  uf.parent.resize(words.size());
  for (std::uint32_t i = 0; i < words.size(); ++i)
    uf.parent[i] = i;

  // One insertion pass generates every one-step edge; transitivity comes
  // from the union-find.
  std::vector<unsigned> candidate, reduced;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    const auto &w = words[wi];
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (const auto &variant : variants) {
        candidate.assign(w.begin(), w.begin() + pos);
        candidate.insert(candidate.end(), variant.begin(), variant.end());
        candidate.insert(candidate.end(), w.begin() + pos, w.end());
        reduce_letters_into(candidate, reduced);
        if (reduced.size() > max_len)
          continue;
        uf.unite(static_cast<std::uint32_t>(wi), id_of.at(encode(reduced)));
      }
    }
  }

  // Ball sizes: classes represented by words of length <= k.
  std::vector<std::uint64_t> ball(max_len + 1, 0);
  std::vector<char> counted(words.size(), 0);
  std::uint64_t classes = 0;
  for (unsigned len = 0; len <= max_len; ++len) {
    for (std::size_t i = length_start[len]; i < length_start[len + 1]; ++i) {
      std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
      if (!counted[root]) {
        counted[root] = 1;
        ++classes;
      }
    }
    ball[len] = classes;
  }

  // A genuinely new group element at distance k+1 always adds a class, so a
  // plateau means the true ball has stabilized and ball[k] >= |G|; the
  // caller's comparison against an enumeration (which never overcounts)
  // pins equality. Words in the outermost shells routinely miss merges
  // because insertions overflow the horizon, so growth beyond the plateau
  // carries no information. A two-step plateau is required when the horizon
  // allows one.
  for (unsigned k = 0; k + 1 <= max_len; ++k) {
    if (ball[k] == ball[k + 1] &&
        (k + 2 > max_len || ball[k + 2] == ball[k]))
      return ball[k];
  }
  return std::nullopt;
}

} // namespace activesum::testing
