#ifndef ACTIVESUM_PRESENTATION_HPP
#define ACTIVESUM_PRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "activesum/perm.hpp"

namespace activesum {

// Word over abstract generators: letter k > 0 is generator k-1,
// letter k < 0 is the inverse of generator -k-1.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);     // free-reduces first
Word inverse_word(const Word &w);

// Product of the images under the letter map; images[i] substitutes
// generator i.
Perm evaluate_word(const Word &w, const std::vector<Perm> &images, Point degree);

// Active-sum presentations label each generator with the family member it
// came from and the ambient element it maps to.
struct GeneratorLabel {
  std::size_t member = 0;
  Perm element;
};

// Finitely presented group. Relators are kept freely and cyclically
// reduced, with empty words dropped and duplicates removed (stable order).
class Presentation {
public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string> &generator_names() const { return names_; }
  const std::vector<Word> &relators() const { return relators_; }

  bool has_labels() const { return labels_.has_value(); }
  const std::vector<GeneratorLabel> &labels() const { return *labels_; }
  void set_labels(std::vector<GeneratorLabel> labels);

  // Text format:
  //   gens a b c
  //   a' b a c'
  // one relator per line, ' marks the inverse of a symbol.
  std::string to_text() const;
  static Presentation parse(const std::string &text);

  std::string word_to_text(const Word &w) const;

private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::optional<std::vector<GeneratorLabel>> labels_;
};

} // namespace activesum

#endif
