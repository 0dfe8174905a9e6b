#include "activesum/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "activesum/errors.hpp"

namespace activesum {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0)
      throw ParseError("zero letter in word", 0);
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

Word inverse_word(const Word &w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(-*it);
  return out;
}

Perm evaluate_word(const Word &w, const std::vector<Perm> &images, Point degree) {
  Perm acc(degree);
  for (int letter : w) {
    std::size_t gi = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
    if (gi >= images.size())
      throw ParseError("word references generator " + std::to_string(gi) +
                           " beyond the image list",
                       0);
    acc = letter > 0 ? acc * images[gi] : acc * images[gi].inverse();
  }
  return acc;
}

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  std::set<Word> seen;
  for (Word &r : relators) {
    Word reduced = cyclic_reduce(std::move(r));
    if (reduced.empty())
      continue;
    for (int letter : reduced) {
      std::size_t gi = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
      if (gi >= names_.size())
        throw ParseError("relator references undeclared generator", 0);
    }
    if (seen.insert(reduced).second)
      relators_.push_back(std::move(reduced));
  }
}

void Presentation::set_labels(std::vector<GeneratorLabel> labels) {
  if (labels.size() != names_.size())
    throw ParseError("label count does not match generator count", 0);
  labels_ = std::move(labels);
}

std::string Presentation::word_to_text(const Word &w) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0)
      out << ' ';
    std::size_t gi = static_cast<std::size_t>(w[i] > 0 ? w[i] : -w[i]) - 1;
    out << names_[gi];
    if (w[i] < 0)
      out << '\'';
  }
  return out.str();
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "gens";
  for (const auto &name : names_)
    out << ' ' << name;
  out << '\n';
  for (const Word &r : relators_)
    out << word_to_text(r) << '\n';
  return out.str();
}

Presentation Presentation::parse(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  std::vector<std::string> names;
  bool have_gens = false;
  std::vector<Word> relators;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token))
      continue; // blank line
    if (token[0] == '#')
      continue;
    if (!have_gens) {
      if (token != "gens")
        throw ParseError("expected 'gens' header", lineno);
      std::string name;
      while (ls >> name) {
        if (name.back() == '\'')
          throw ParseError("generator name may not end in '", lineno);
        names.push_back(name);
      }
      have_gens = true;
      continue;
    }
    Word w;
    std::string sym = token;
    do {
      bool inv = false;
      if (!sym.empty() && sym.back() == '\'') {
        inv = true;
        sym.pop_back();
      }
      auto it = std::find(names.begin(), names.end(), sym);
      if (it == names.end())
        throw ParseError("unknown generator '" + sym + "'", lineno);
      int letter = static_cast<int>(it - names.begin()) + 1;
      w.push_back(inv ? -letter : letter);
    } while (ls >> sym);
    relators.push_back(std::move(w));
  }
  if (!have_gens)
    throw ParseError("missing 'gens' header", lineno);
  return Presentation(std::move(names), std::move(relators));
}

} // namespace activesum
