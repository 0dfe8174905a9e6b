#ifndef ACTIVESUM_SCHUR_HPP
#define ACTIVESUM_SCHUR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "activesum/certificate.hpp"

namespace activesum {

// Schur multiplier fixture data, supplied from the literature. One line per
// group: "name: f1 f2 ..." with the invariant factors of H_2; an empty list
// means the multiplier is trivial.
class SchurData {
public:
  static SchurData parse(const std::string &text);

  std::optional<std::vector<std::uint64_t>> lookup(const std::string &name) const;
  const std::map<std::string, std::vector<std::uint64_t>> &entries() const {
    return entries_;
  }

private:
  std::map<std::string, std::vector<std::uint64_t>> entries_;
};

std::set<std::uint64_t> prime_divisors(std::uint64_t n);

// Names of fixture groups matching the fingerprint on order, exponent and
// conjugacy class multiset. Requires class data.
std::vector<std::string> match_named_fixtures(const GroupFingerprint &fp);

struct ConsequenceReport {
  bool applicable = false;
  bool pass = false;
  std::string detail;
};

// pi(H_2(S)) must be contained in pi(n) for the certified subject S. The
// subject is identified among the named fixtures; an unidentifiable subject
// or absent fixture entry raises MissingSchurData.
ConsequenceReport multiplier_primes_check(const CellularityCertificate &cert,
                                 const SchurData &schur);

// Checks the implication "phi is a C_n-injection implies phi is an
// isomorphism", valid when the family generates, the active-sum hypotheses
// hold and pi(H_2(G)) is contained in pi(n). Reports "hypotheses not met"
// without testing the implication otherwise. The reverse implication is
// evaluated as well. `g_name` optionally pins the fixture name of G instead
// of fingerprint identification.
ConsequenceReport injection_isomorphism_check(const PermGroup &G, const SubgroupFamily &fam,
                                 std::uint64_t n, const SchurData &schur,
                                 Encoding enc, const TcOptions &options = {},
                                 const std::string &g_name = "",
                                 std::size_t cutoff = 100000);

} // namespace activesum

#endif
