#include "activesum/certificate.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "activesum/cellularity.hpp"
#include "activesum/errors.hpp"

namespace activesum {

namespace {

std::string hex64(std::uint64_t h) {
  static const char *digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::uint64_t fnv_accumulate(std::uint64_t h, std::uint64_t value) {
  for (int b = 0; b < 8; ++b) {
    h ^= (value >> (8 * b)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace

GroupFingerprint fingerprint(const PermGroup &G, std::size_t cutoff) {
  GroupFingerprint fp;
  fp.order = G.order();
  fp.degree = G.degree();

  std::uint64_t h = 1469598103934665603ull;
  h = fnv_accumulate(h, G.degree());
  std::vector<Perm> sorted_gens = G.generators();
  std::sort(sorted_gens.begin(), sorted_gens.end());
  for (const Perm &g : sorted_gens)
    h = fnv_accumulate(h, g.hash());
  fp.generator_hash = hex64(h);

  if (fp.order <= cutoff) {
    fp.exponent = exponent(G, cutoff);
    // Conjugacy classes: orbits of the conjugation action of the generators.
    auto idx = G.element_index(cutoff);
    std::vector<bool> seen(idx->elements.size(), false);
    for (std::size_t i = 0; i < idx->elements.size(); ++i) {
      if (seen[i])
        continue;
      std::uint64_t size = 0;
      std::deque<std::size_t> queue{i};
      seen[i] = true;
      while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        ++size;
        for (const Perm &g : G.generators()) {
          Perm conj = idx->elements[j].conjugated_by(g);
          std::size_t k = idx->position.at(conj);
          if (!seen[k]) {
            seen[k] = true;
            queue.push_back(k);
          }
        }
      }
      fp.class_sizes.push_back(size);
    }
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
    fp.has_class_data = true;
  }
  return fp;
}

std::string GroupFingerprint::to_string() const {
  std::ostringstream out;
  out << "order=" << order << " degree=" << degree << " genhash=" << generator_hash;
  if (has_class_data) {
    out << " exponent=" << exponent << " classes=";
    for (std::size_t i = 0; i < class_sizes.size(); ++i)
      out << (i ? "," : "") << class_sizes[i];
  }
  return out.str();
}

std::string family_hash(const SubgroupFamily &fam) {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv_accumulate(h, fam.size());
  for (const Subgroup &f : fam.members())
    h = fnv_accumulate(h, f.key_hash());
  return hex64(h);
}

bool family_members_distinct(const SubgroupFamily &fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (fam.members()[i] == fam.members()[j])
        return false;
  return true;
}

bool family_conjugation_closed(const SubgroupFamily &fam) {
  for (const Subgroup &f : fam.members())
    for (const Perm &g : fam.ambient().generators())
      if (!fam.find(f.conjugated_by(g)))
        return false;
  return true;
}

// ---- certify ----

namespace {

CertNode member_certificate(const Subgroup &member, std::uint64_t n,
                            std::size_t cutoff) {
  std::uint64_t m = member.order();
  GroupFingerprint fp = fingerprint(member.as_group(), cutoff);

  CertNode leaf;
  leaf.rule = CertRule::SelfCellular;
  leaf.n = m;
  leaf.m = m;
  leaf.subject = fp;

  CertNode lift;
  lift.rule = CertRule::DivisorLift;
  lift.n = n;
  lift.m = m;
  lift.subject = fp;
  lift.children.push_back(std::move(leaf));
  return lift;
}

} // namespace

CertifyOutcome certify_active_sum(
    const PermGroup &G, const SubgroupFamily &fam, std::uint64_t n,
    Encoding enc, const TcOptions &options,
    const std::map<std::size_t, CellularityCertificate> &supplied,
    std::size_t cutoff, const std::string &family_note) {
  if (!family_members_distinct(fam))
    throw HypothesisViolation("family members are distinct",
                              "two members share an element set");
  if (!family_conjugation_closed(fam))
    throw HypothesisViolation("family is closed under conjugation",
                              "a generator conjugate is missing");

  for (std::size_t i = 0; i < fam.size(); ++i) {
    std::uint64_t e = fam.members()[i].exponent();
    if (n % e != 0)
      throw HypothesisViolation("member exponent divides n",
                                "member " + std::to_string(i) + " has exponent " +
                                    std::to_string(e) + ", which does not divide " +
                                    std::to_string(n));
  }

  std::vector<CertNode> children;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Subgroup &member = fam.members()[i];
    if (member.order() == 1 || member.is_cyclic()) {
      children.push_back(member_certificate(member, n, cutoff));
      continue;
    }
    auto it = supplied.find(i);
    if (it == supplied.end())
      throw HypothesisViolation(
          "every member is C_n-cellular",
          "member " + std::to_string(i) +
              " is not cyclic and no certificate was supplied");
    const CertNode &root = it->second.root;
    if (root.n != n || root.subject.order != member.order())
      throw HypothesisViolation(
          "supplied member certificate matches",
          "member " + std::to_string(i) + " certificate certifies n=" +
              std::to_string(root.n) + ", order=" +
              std::to_string(root.subject.order));
    children.push_back(root);
  }

  ActiveSumResult realization = realize_active_sum(G, fam, enc, options);

  CertNode root;
  root.rule = CertRule::ActiveSum;
  root.n = n;
  root.m = n;
  root.subject = fingerprint(realization.S, cutoff);
  root.family_fingerprint = family_hash(fam);
  root.family_note = family_note.empty() ? "-" : family_note;
  root.family_size = fam.size();
  root.hyp_distinct = true;
  root.hyp_closed = true;
  root.hyp_exponent = true;
  root.encoding = encoding_name(enc);
  root.order_S = realization.order_S;
  root.image_order = realization.image_order;
  root.kernel_order = realization.kernel_order;
  root.generating = realization.generating;
  root.iso = realization.iso;
  root.children = std::move(children);

  return CertifyOutcome{CellularityCertificate{std::move(root)},
                        std::move(realization)};
}

// ---- verification ----

namespace {

void structural_check(const CertNode &node, std::vector<std::string> &failures,
                      const std::string &path) {
  switch (node.rule) {
  case CertRule::SelfCellular:
    if (node.m != node.n)
      failures.push_back(path + ": self-cellular node with m != n");
    if (node.subject.order != node.m)
      failures.push_back(path + ": self-cellular subject is not C_m");
    if (!node.children.empty())
      failures.push_back(path + ": self-cellular node must be a leaf");
    break;
  case CertRule::DivisorLift:
    if (node.m == 0 || node.n % node.m != 0)
      failures.push_back(path + ": divisor-lift with m not dividing n");
    if (node.children.size() != 1)
      failures.push_back(path + ": divisor-lift needs exactly one child");
    else {
      if (node.children[0].n != node.m)
        failures.push_back(path + ": divisor-lift child certifies wrong level");
      if (node.children[0].subject != node.subject)
        failures.push_back(path + ": divisor-lift changes subject");
      structural_check(node.children[0], failures, path + ".0");
    }
    break;
  case CertRule::ActiveSum:
    if (!node.hyp_distinct || !node.hyp_closed || !node.hyp_exponent)
      failures.push_back(path + ": active-sum node records a failed hypothesis");
    if (node.children.size() != node.family_size)
      failures.push_back(path + ": active-sum child count != family size");
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (node.children[i].n != node.n)
        failures.push_back(path + ": member child certifies wrong level");
      structural_check(node.children[i], failures,
                       path + "." + std::to_string(i));
    }
    break;
  }
}

} // namespace

VerifyReport verify_certificate(const CellularityCertificate &cert,
                                const PermGroup &G, const SubgroupFamily &fam,
                                std::uint64_t n, Encoding enc,
                                const TcOptions &options, std::size_t cutoff) {
  VerifyReport report;
  const CertNode &root = cert.root;

  structural_check(root, report.failures, "root");

  if (root.rule != CertRule::ActiveSum)
    report.failures.push_back("root rule is not active-sum");
  if (root.n != n)
    report.failures.push_back("certificate level differs from requested n");

  if (!family_members_distinct(fam))
    report.failures.push_back("family members are not distinct");
  if (!family_conjugation_closed(fam))
    report.failures.push_back("family is not conjugation-closed");
  if (!exponent_divides(fam, n))
    report.failures.push_back("a member exponent does not divide n");
  if (family_hash(fam) != root.family_fingerprint)
    report.failures.push_back("family fingerprint mismatch");
  if (fam.size() != root.family_size)
    report.failures.push_back("family size mismatch");

  // Member children: cyclic members must carry the lift-over-axiom shape.
  for (std::size_t i = 0; i < fam.size() && i < root.children.size(); ++i) {
    const Subgroup &member = fam.members()[i];
    const CertNode &child = root.children[i];
    if (member.order() == 1 || member.is_cyclic()) {
      if (child.rule != CertRule::DivisorLift || child.m != member.order())
        report.failures.push_back("member " + std::to_string(i) +
                                  ": expected divisor-lift from C_" +
                                  std::to_string(member.order()));
      else if (child.subject != fingerprint(member.as_group(), cutoff))
        report.failures.push_back("member " + std::to_string(i) +
                                  ": subject fingerprint mismatch");
    } else {
      // Non-cyclic member: an active-sum certificate for a group of the
      // member's order, possibly lifted from a divisor level. Only its
      // recorded hypotheses and structure can be re-checked here; the
      // member's own raw inputs are not part of this certificate.
      if ((child.rule != CertRule::ActiveSum &&
           child.rule != CertRule::DivisorLift) ||
          child.subject.order != member.order())
        report.failures.push_back("member " + std::to_string(i) +
                                  ": non-cyclic member needs an active-sum "
                                  "certificate for its order");
    }
  }

  if (encoding_name(enc) != root.encoding)
    report.failures.push_back("encoding mismatch");

  if (report.failures.empty()) {
    ActiveSumResult realization = realize_active_sum(G, fam, enc, options);
    if (realization.order_S != root.order_S)
      report.failures.push_back("order_S mismatch");
    if (realization.image_order != root.image_order)
      report.failures.push_back("image order mismatch");
    if (realization.kernel_order != root.kernel_order)
      report.failures.push_back("kernel order mismatch");
    if (realization.generating != root.generating)
      report.failures.push_back("generating flag mismatch");
    if (realization.iso != root.iso)
      report.failures.push_back("iso flag mismatch");
    if (fingerprint(realization.S, cutoff) != root.subject)
      report.failures.push_back("subject fingerprint mismatch");
    // Necessary condition of cellularity: the certified subject is
    // C_n-generated.
    if (realization.order_S <= cutoff &&
        !is_cn_generated(realization.S, n, cutoff))
      report.failures.push_back("subject is not C_n-generated");
  }

  report.accepted = report.failures.empty();
  return report;
}

// ---- serialization ----

namespace {

const char *rule_name(CertRule rule) {
  switch (rule) {
  case CertRule::SelfCellular:
    return "self-cellular";
  case CertRule::DivisorLift:
    return "divisor-lift";
  case CertRule::ActiveSum:
    return "active-sum";
  }
  return "?";
}

void write_node(std::ostream &out, const CertNode &node, unsigned depth) {
  std::string pad(2 * depth, ' ');
  out << pad << "rule " << rule_name(node.rule) << " n=" << node.n
      << " m=" << node.m << '\n';
  out << pad << "subject order=" << node.subject.order
      << " degree=" << node.subject.degree
      << " genhash=" << node.subject.generator_hash
      << " exponent=" << node.subject.exponent << " classes=";
  if (!node.subject.has_class_data)
    out << '-';
  else
    for (std::size_t i = 0; i < node.subject.class_sizes.size(); ++i)
      out << (i ? "," : "") << node.subject.class_sizes[i];
  out << '\n';
  if (node.rule == CertRule::ActiveSum) {
    out << pad << "family size=" << node.family_size
        << " hash=" << node.family_fingerprint
        << " note=" << node.family_note << '\n';
    out << pad << "hypotheses distinct=" << (node.hyp_distinct ? "pass" : "fail")
        << " closed=" << (node.hyp_closed ? "pass" : "fail")
        << " exponent-divides=" << (node.hyp_exponent ? "pass" : "fail") << '\n';
    out << pad << "realization encoding=" << node.encoding
        << " order_S=" << node.order_S << " image_order=" << node.image_order
        << " kernel_order=" << node.kernel_order
        << " generating=" << (node.generating ? "true" : "false")
        << " iso=" << (node.iso ? "true" : "false") << '\n';
  }
  out << pad << "children " << node.children.size() << '\n';
  for (const CertNode &child : node.children)
    write_node(out, child, depth + 1);
}

struct Cursor {
  std::vector<std::string> lines;
  std::size_t pos = 0;

  std::string next() {
    if (pos >= lines.size())
      throw ParseError("unexpected end of certificate", pos);
    return lines[pos++];
  }
};

std::map<std::string, std::string> parse_fields(std::istringstream &in,
                                                std::size_t lineno) {
  std::map<std::string, std::string> fields;
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value, got '" + token + "'", lineno);
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

std::vector<std::uint64_t> parse_class_list(const std::string &text,
                                            std::size_t lineno) {
  std::vector<std::uint64_t> out;
  if (text == "-" || text.empty())
    return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(std::stoull(item));
  (void)lineno;
  return out;
}

CertNode parse_node(Cursor &cursor) {
  CertNode node;

  std::istringstream rule_line(cursor.next());
  std::string keyword, rule;
  rule_line >> keyword >> rule;
  if (keyword != "rule")
    throw ParseError("expected 'rule' line", cursor.pos);
  if (rule == "self-cellular")
    node.rule = CertRule::SelfCellular;
  else if (rule == "divisor-lift")
    node.rule = CertRule::DivisorLift;
  else if (rule == "active-sum")
    node.rule = CertRule::ActiveSum;
  else
    throw ParseError("unknown rule '" + rule + "'", cursor.pos);
  auto rule_fields = parse_fields(rule_line, cursor.pos);
  node.n = std::stoull(rule_fields.at("n"));
  node.m = std::stoull(rule_fields.at("m"));

  std::istringstream subject_line(cursor.next());
  subject_line >> keyword;
  if (keyword != "subject")
    throw ParseError("expected 'subject' line", cursor.pos);
  auto subject = parse_fields(subject_line, cursor.pos);
  node.subject.order = std::stoull(subject.at("order"));
  node.subject.degree = static_cast<Point>(std::stoul(subject.at("degree")));
  node.subject.generator_hash = subject.at("genhash");
  node.subject.exponent = std::stoull(subject.at("exponent"));
  node.subject.class_sizes = parse_class_list(subject.at("classes"), cursor.pos);
  node.subject.has_class_data = subject.at("classes") != "-";

  if (node.rule == CertRule::ActiveSum) {
    std::istringstream family_line(cursor.next());
    family_line >> keyword;
    if (keyword != "family")
      throw ParseError("expected 'family' line", cursor.pos);
    auto family = parse_fields(family_line, cursor.pos);
    node.family_size = std::stoull(family.at("size"));
    node.family_fingerprint = family.at("hash");
    node.family_note = family.count("note") ? family.at("note") : "-";

    std::istringstream hyp_line(cursor.next());
    hyp_line >> keyword;
    if (keyword != "hypotheses")
      throw ParseError("expected 'hypotheses' line", cursor.pos);
    auto hyp = parse_fields(hyp_line, cursor.pos);
    node.hyp_distinct = hyp.at("distinct") == "pass";
    node.hyp_closed = hyp.at("closed") == "pass";
    node.hyp_exponent = hyp.at("exponent-divides") == "pass";

    std::istringstream real_line(cursor.next());
    real_line >> keyword;
    if (keyword != "realization")
      throw ParseError("expected 'realization' line", cursor.pos);
    auto real = parse_fields(real_line, cursor.pos);
    node.encoding = real.at("encoding");
    node.order_S = std::stoull(real.at("order_S"));
    node.image_order = std::stoull(real.at("image_order"));
    node.kernel_order = std::stoull(real.at("kernel_order"));
    node.generating = real.at("generating") == "true";
    node.iso = real.at("iso") == "true";
  }

  std::istringstream children_line(cursor.next());
  std::size_t count = 0;
  children_line >> keyword >> count;
  if (keyword != "children")
    throw ParseError("expected 'children' line", cursor.pos);
  for (std::size_t i = 0; i < count; ++i)
    node.children.push_back(parse_node(cursor));
  return node;
}

} // namespace

std::string CellularityCertificate::to_text() const {
  std::ostringstream out;
  out << "activesum-certificate v1\n";
  write_node(out, root, 0);
  return out.str();
}

CellularityCertificate CellularityCertificate::parse(const std::string &text) {
  Cursor cursor;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    // Strip indentation; structure is carried by the children counts.
    auto start = line.find_first_not_of(' ');
    if (start == std::string::npos)
      continue;
    cursor.lines.push_back(line.substr(start));
  }
  if (cursor.lines.empty() || cursor.lines[0] != "activesum-certificate v1")
    throw ParseError("missing certificate header", 1);
  cursor.pos = 1;
  CellularityCertificate cert{parse_node(cursor)};
  return cert;
}

} // namespace activesum
