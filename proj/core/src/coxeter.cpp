#include "activesum/coxeter.hpp"

#include <sstream>

#include "activesum/errors.hpp"

namespace activesum {

CoxeterMatrix CoxeterMatrix::from_entries(std::vector<std::vector<unsigned>> entries) {
  unsigned r = static_cast<unsigned>(entries.size());
  for (unsigned i = 0; i < r; ++i) {
    if (entries[i].size() != r)
      throw ParseError("Coxeter matrix is not square", 0);
    if (entries[i][i] != 1)
      throw ParseError("Coxeter matrix diagonal must be 1", 0);
    for (unsigned j = 0; j < r; ++j) {
      if (entries[i][j] != entries[j][i])
        throw ParseError("Coxeter matrix must be symmetric", 0);
      if (i != j && entries[i][j] == 1)
        throw ParseError("off-diagonal Coxeter entries must be >= 2 or 0", 0);
    }
  }
  CoxeterMatrix m;
  m.entries_ = std::move(entries);
  return m;
}

CoxeterMatrix CoxeterMatrix::parse(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  unsigned rank = 0;
  bool have_rank = false;
  std::vector<std::vector<unsigned>> entries;
  unsigned row = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token) || token[0] == '#')
      continue;
    if (!have_rank) {
      if (token != "rank")
        throw ParseError("expected 'rank' header", lineno);
      if (!(ls >> rank) || rank == 0)
        throw ParseError("bad rank", lineno);
      entries.assign(rank, std::vector<unsigned>(rank, 2));
      for (unsigned i = 0; i < rank; ++i)
        entries[i][i] = 1;
      have_rank = true;
      continue;
    }
    if (row + 1 >= rank)
      throw ParseError("too many matrix rows", lineno);
    unsigned value = 0;
    std::istringstream rest(line);
    for (unsigned j = row + 1; j < rank; ++j) {
      if (!(rest >> value))
        throw ParseError("expected " + std::to_string(rank - row - 1) +
                             " entries in row " + std::to_string(row),
                         lineno);
      entries[row][j] = value;
      entries[j][row] = value;
    }
    ++row;
  }
  if (!have_rank)
    throw ParseError("missing 'rank' header", lineno);
  if (rank > 1 && row + 1 != rank)
    throw ParseError("missing matrix rows", lineno);
  return from_entries(std::move(entries));
}

std::string CoxeterMatrix::to_text() const {
  std::ostringstream out;
  out << "rank " << rank() << '\n';
  for (unsigned i = 0; i + 1 < rank(); ++i) {
    for (unsigned j = i + 1; j < rank(); ++j)
      out << entries_[i][j] << (j + 1 < rank() ? " " : "");
    out << '\n';
  }
  return out.str();
}

CoxeterMatrix CoxeterMatrix::type_a(unsigned rank) {
  std::vector<std::vector<unsigned>> m(rank, std::vector<unsigned>(rank, 2));
  for (unsigned i = 0; i < rank; ++i) {
    m[i][i] = 1;
    if (i + 1 < rank)
      m[i][i + 1] = m[i + 1][i] = 3;
  }
  return from_entries(std::move(m));
}

CoxeterMatrix CoxeterMatrix::type_b(unsigned rank) {
  auto base = type_a(rank);
  auto entries = std::vector<std::vector<unsigned>>(rank, std::vector<unsigned>(rank, 2));
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = 0; j < rank; ++j)
      entries[i][j] = base.entry(i, j);
  if (rank >= 2)
    entries[0][1] = entries[1][0] = 4;
  return from_entries(std::move(entries));
}

CoxeterMatrix CoxeterMatrix::type_i2(unsigned m) {
  return from_entries({{1, m}, {m, 1}});
}

CoxeterMatrix CoxeterMatrix::type_h3() {
  return from_entries({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
}

Presentation CoxeterMatrix::presentation() const {
  std::vector<std::string> names;
  for (unsigned i = 0; i < rank(); ++i)
    names.push_back("x" + std::to_string(i + 1));
  std::vector<Word> relators;
  for (unsigned i = 0; i < rank(); ++i)
    relators.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 1});
  for (unsigned i = 0; i < rank(); ++i)
    for (unsigned j = i + 1; j < rank(); ++j) {
      unsigned m = entries_[i][j];
      if (m == 0)
        continue; // infinite bond
      Word braid;
      for (unsigned k = 0; k < m; ++k) {
        braid.push_back(static_cast<int>(i) + 1);
        braid.push_back(static_cast<int>(j) + 1);
      }
      relators.push_back(std::move(braid));
    }
  return Presentation(std::move(names), std::move(relators));
}

CoxeterRealization coxeter_reflection_family(const CoxeterMatrix &M,
                                             const TcOptions &options) {
  Presentation p = M.presentation();
  CosetTable table = todd_coxeter(p, {}, options);

  std::vector<Perm> images;
  images.reserve(M.rank());
  for (unsigned i = 0; i < M.rank(); ++i)
    images.push_back(table.generator_action(i));

  PermGroup W(static_cast<Point>(table.coset_count()), images);

  std::vector<Subgroup> seeds;
  seeds.reserve(M.rank());
  for (const Perm &x : images)
    seeds.push_back(Subgroup(W, {x}));

  SubgroupFamily family = conjugation_closure(W, seeds);
  return CoxeterRealization{std::move(W), std::move(images), std::move(family),
                            table.stats()};
}

} // namespace activesum
