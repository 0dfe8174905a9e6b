#ifndef ACTIVESUM_GROUP_IO_HPP
#define ACTIVESUM_GROUP_IO_HPP

#include <string>
#include <vector>

#include "activesum/perm_group.hpp"
#include "activesum/subgroup.hpp"

namespace activesum {

// Group text format: either
//   degree d
//   (0 1)(2 3)
//   ...
// with one generator per line in disjoint-cycle notation, or a single named
// constructor line: "sym k", "alt k", "cyclic k", "dihedral k", "sl n q".
PermGroup parse_group_text(const std::string &text);
std::string group_to_text(const PermGroup &G);

// Compact CLI specs: "sym3", "alt4", "cyclic6", "dihedral5", "klein", "q8",
// "sl:3:2" / "sl3_2", a named fixture like "b3" or "h3", or a path to a
// group file.
PermGroup group_from_spec(const std::string &spec);

// Family file format:
//   family <ambient-name>
//   (0 1) (2 3)
// one line per seed subgroup; the perms on a line generate that seed.
struct FamilyFile {
  std::string ambient_name;
  std::vector<std::vector<std::string>> seed_generators; // cycle strings
};

FamilyFile parse_family_file(const std::string &text);

std::vector<Subgroup> seeds_from_family_file(const FamilyFile &file,
                                             const PermGroup &ambient);

// Splits a line into permutation tokens: cycles of one permutation abut,
// whitespace separates permutations.
std::vector<std::string> split_perm_tokens(const std::string &line);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace activesum

#endif
