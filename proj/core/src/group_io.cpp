#include "activesum/group_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "activesum/catalog.hpp"
#include "activesum/errors.hpp"
#include "activesum/sl.hpp"

namespace activesum {

namespace {

PermGroup named_constructor(const std::string &kind,
                            const std::vector<unsigned> &args,
                            std::size_t lineno) {
  if (kind == "sym" && args.size() == 1)
    return symmetric_group(args[0]);
  if (kind == "alt" && args.size() == 1)
    return alternating_group(args[0]);
  if (kind == "cyclic" && args.size() == 1)
    return cyclic_group(args[0]);
  if (kind == "dihedral" && args.size() == 1)
    return dihedral_group(args[0]);
  if (kind == "sl" && args.size() == 2)
    return sl_to_perm(args[0], args[1]).group;
  throw ParseError("unknown group constructor '" + kind + "'", lineno);
}

} // namespace

PermGroup parse_group_text(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  Point degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token) || token[0] == '#')
      continue;
    if (!have_degree) {
      if (token == "degree") {
        if (!(ls >> degree))
          throw ParseError("bad degree", lineno);
        have_degree = true;
        continue;
      }
      // Named constructor line.
      std::vector<unsigned> args;
      unsigned value = 0;
      while (ls >> value)
        args.push_back(value);
      return named_constructor(token, args, lineno);
    }
    try {
      gens.push_back(Perm::from_cycles(line, degree));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_degree)
    throw ParseError("empty group description", lineno);
  return PermGroup(degree, std::move(gens));
}

std::string group_to_text(const PermGroup &G) {
  std::ostringstream out;
  out << "degree " << G.degree() << '\n';
  for (const Perm &g : G.generators())
    out << g.to_cycle_string() << '\n';
  return out.str();
}

PermGroup group_from_spec(const std::string &spec) {
  // Path to a file?
  if (spec.find('/') != std::string::npos ||
      (spec.find('.') != std::string::npos && std::filesystem::exists(spec)))
    return parse_group_text(read_file(spec));

  // sl:3:2
  if (spec.rfind("sl:", 0) == 0) {
    std::istringstream in(spec.substr(3));
    unsigned n = 0, q = 0;
    char sep = 0;
    if (in >> n >> sep >> q && sep == ':')
      return sl_to_perm(n, q).group;
    throw ParseError("bad sl spec '" + spec + "'", 0);
  }

  // Fixture names (covers sl3_2, b3, h3, i2_5, sym4, dihedral6, ...).
  for (const NamedGroup &fixture : named_fixtures())
    if (fixture.name == spec)
      return fixture.group;

  // name followed by a number: sym3, alt4, cyclic12, dihedral6.
  std::size_t split = spec.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(spec[split - 1])))
    --split;
  if (split < spec.size()) {
    std::string kind = spec.substr(0, split);
    unsigned k = static_cast<unsigned>(std::stoul(spec.substr(split)));
    if (kind == "sym" || kind == "alt" || kind == "cyclic" || kind == "dihedral")
      return named_constructor(kind, {k}, 0);
  }
  if (spec == "klein")
    return klein_four_group();
  if (spec == "q8")
    return quaternion_group();

  if (std::filesystem::exists(spec))
    return parse_group_text(read_file(spec));
  throw ParseError("unknown group spec '" + spec + "'", 0);
}

std::vector<std::string> split_perm_tokens(const std::string &line) {
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char c : line) {
    if (c == '(') {
      ++depth;
      current.push_back(c);
    } else if (c == ')') {
      --depth;
      if (depth < 0)
        throw ParseError("unbalanced parentheses in '" + line + "'", 0);
      current.push_back(c);
    } else if ((c == ' ' || c == '\t') && depth == 0) {
      if (!current.empty()) {
        tokens.push_back(current);
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (depth != 0)
    throw ParseError("unbalanced parentheses in '" + line + "'", 0);
  if (!current.empty())
    tokens.push_back(current);
  return tokens;
}

FamilyFile parse_family_file(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  FamilyFile file;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string token;
    if (!(ls >> token) || token[0] == '#')
      continue;
    if (!have_header) {
      if (token != "family")
        throw ParseError("expected 'family <ambient>' header", lineno);
      if (!(ls >> file.ambient_name))
        throw ParseError("missing ambient name", lineno);
      have_header = true;
      continue;
    }
    auto perms = split_perm_tokens(line);
    if (perms.empty())
      throw ParseError("empty seed line", lineno);
    file.seed_generators.push_back(std::move(perms));
  }
  if (!have_header)
    throw ParseError("missing 'family' header", lineno);
  return file;
}

std::vector<Subgroup> seeds_from_family_file(const FamilyFile &file,
                                             const PermGroup &ambient) {
  std::vector<Subgroup> seeds;
  for (const auto &gen_strings : file.seed_generators) {
    std::vector<Perm> gens;
    for (const std::string &s : gen_strings)
      gens.push_back(Perm::from_cycles(s, ambient.degree()));
    seeds.push_back(Subgroup(ambient, std::move(gens)));
  }
  return seeds;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot write '" + path + "'", 0);
  out << content;
}

} // namespace activesum
