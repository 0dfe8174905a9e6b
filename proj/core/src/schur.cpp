#include "activesum/schur.hpp"

#include <algorithm>
#include <sstream>

#include "activesum/catalog.hpp"
#include "activesum/cellularity.hpp"
#include "activesum/errors.hpp"

namespace activesum {

SchurData SchurData::parse(const std::string &text) {
  SchurData data;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      std::istringstream check(line);
      std::string leftover;
      if (check >> leftover)
        throw ParseError("expected 'name: factors'", lineno);
      continue;
    }
    std::istringstream name_in(line.substr(0, colon));
    std::string name;
    name_in >> name;
    if (name.empty())
      throw ParseError("empty group name", lineno);
    std::vector<std::uint64_t> factors;
    std::istringstream factors_in(line.substr(colon + 1));
    std::uint64_t f = 0;
    while (factors_in >> f) {
      if (f < 2)
        throw ParseError("invariant factors must be >= 2", lineno);
      factors.push_back(f);
    }
    data.entries_[name] = std::move(factors);
  }
  return data;
}

std::optional<std::vector<std::uint64_t>>
SchurData::lookup(const std::string &name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    return std::nullopt;
  return it->second;
}

std::set<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::set<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      primes.insert(p);
      n /= p;
    }
  if (n > 1)
    primes.insert(n);
  return primes;
}

std::vector<std::string> match_named_fixtures(const GroupFingerprint &fp) {
  std::vector<std::string> names;
  if (!fp.has_class_data)
    return names;
  for (const NamedGroup &fixture : named_fixtures()) {
    if (fixture.group.order() != fp.order)
      continue;
    GroupFingerprint candidate = fingerprint(fixture.group);
    if (candidate.has_class_data && candidate.exponent == fp.exponent &&
        candidate.class_sizes == fp.class_sizes)
      names.push_back(fixture.name);
  }
  return names;
}

namespace {

// Resolves the Schur factors of the group identified by `fp`, preferring an
// explicit name. Matching fixtures with conflicting fixture entries count
// as ambiguous.
std::pair<std::string, std::vector<std::uint64_t>>
resolve_schur(const GroupFingerprint &fp, const SchurData &schur,
              const std::string &name_hint) {
  if (!name_hint.empty()) {
    auto entry = schur.lookup(name_hint);
    if (!entry)
      throw MissingSchurData("no fixture entry for '" + name_hint + "'");
    return {name_hint, *entry};
  }
  auto names = match_named_fixtures(fp);
  if (names.empty())
    throw MissingSchurData("subject (order " + std::to_string(fp.order) +
                           ") matches no named fixture");
  std::vector<std::pair<std::string, std::vector<std::uint64_t>>> found;
  for (const std::string &name : names) {
    auto entry = schur.lookup(name);
    if (entry)
      found.push_back({name, *entry});
  }
  if (found.empty())
    throw MissingSchurData("no fixture entry for any of the matched names");
  for (const auto &[name, factors] : found)
    if (factors != found[0].second)
      throw MissingSchurData("matched fixtures disagree: '" + found[0].first +
                             "' vs '" + name + "'");
  return found[0];
}

std::uint64_t factors_product(const std::vector<std::uint64_t> &factors) {
  std::uint64_t n = 1;
  for (std::uint64_t f : factors)
    n *= f;
  return n;
}

std::string set_to_string(const std::set<std::uint64_t> &s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::uint64_t p : s) {
    if (!first)
      out << ',';
    out << p;
    first = false;
  }
  out << '}';
  return out.str();
}

} // namespace

ConsequenceReport multiplier_primes_check(const CellularityCertificate &cert,
                                 const SchurData &schur) {
  const CertNode &root = cert.root;
  auto [name, factors] = resolve_schur(root.subject, schur, "");

  std::uint64_t h2_order = factors_product(factors);
  auto h2_primes = prime_divisors(h2_order);
  auto n_primes = prime_divisors(root.n);

  ConsequenceReport report;
  report.applicable = true;
  report.pass = std::includes(n_primes.begin(), n_primes.end(),
                              h2_primes.begin(), h2_primes.end());
  std::ostringstream detail;
  detail << "subject identified as " << name << "; pi(H2)="
         << set_to_string(h2_primes) << " pi(n)=" << set_to_string(n_primes)
         << " => " << (report.pass ? "contained" : "NOT contained");
  report.detail = detail.str();
  return report;
}

ConsequenceReport injection_isomorphism_check(const PermGroup &G, const SubgroupFamily &fam,
                                 std::uint64_t n, const SchurData &schur,
                                 Encoding enc, const TcOptions &options,
                                 const std::string &g_name, std::size_t cutoff) {
  ConsequenceReport report;

  auto [name, factors] = resolve_schur(fingerprint(G, cutoff), schur, g_name);
  auto h2_primes = prime_divisors(factors_product(factors));
  auto n_primes = prime_divisors(n);

  if (!is_generating(fam)) {
    report.detail = "hypotheses not met: family does not generate";
    return report;
  }
  if (!exponent_divides(fam, n)) {
    report.detail = "hypotheses not met: member exponent does not divide n";
    return report;
  }
  if (!std::includes(n_primes.begin(), n_primes.end(), h2_primes.begin(),
                     h2_primes.end())) {
    report.detail = "hypotheses not met: pi(H2(" + name + "))=" +
                    set_to_string(h2_primes) + " is not contained in pi(n)=" +
                    set_to_string(n_primes);
    return report;
  }

  ActiveSumResult realization = realize_active_sum(G, fam, enc, options);
  bool injection = is_cn_injection(realization.phi, n, cutoff);
  bool iso = realization.iso;

  report.applicable = true;
  report.pass = (!injection || iso) && (!iso || injection);
  std::ostringstream detail;
  detail << "phi C_n-injection=" << (injection ? "true" : "false")
         << " iso=" << (iso ? "true" : "false") << "; forward implication "
         << (!injection || iso ? "holds" : "FAILS") << ", reverse implication "
         << (!iso || injection ? "holds" : "FAILS");
  report.detail = detail.str();
  return report;
}

} // namespace activesum
