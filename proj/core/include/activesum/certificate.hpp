#ifndef ACTIVESUM_CERTIFICATE_HPP
#define ACTIVESUM_CERTIFICATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "activesum/active_sum.hpp"
#include "activesum/family.hpp"

namespace activesum {

// Identifying data of a concrete permutation group. Exponent and conjugacy
// class sizes are filled in when the group is small enough to enumerate;
// has_class_data records whether they are present.
struct GroupFingerprint {
  std::uint64_t order = 0;
  Point degree = 0;
  std::uint64_t exponent = 0;
  std::vector<std::uint64_t> class_sizes; // sorted multiset
  std::string generator_hash;
  bool has_class_data = false;

  bool operator==(const GroupFingerprint &) const = default;
  std::string to_string() const;
};

GroupFingerprint fingerprint(const PermGroup &G, std::size_t cutoff = 10000);

std::string family_hash(const SubgroupFamily &fam);

// Justification tree for C_n-cellularity:
//   SelfCellular  - the cyclic group C_m is C_m-cellular (axiom; m == n).
//   DivisorLift   - C_m-cellular implies C_n-cellular for m | n; one child
//                   certifying the same subject at level m.
//   ActiveSum     - the active sum of a conjugation-closed family of
//                   distinct C_n-cellular members whose exponents divide n
//                   is C_n-cellular; one child per member.
enum class CertRule { SelfCellular, DivisorLift, ActiveSum };

struct CertNode {
  CertRule rule = CertRule::SelfCellular;
  std::uint64_t n = 1;
  std::uint64_t m = 1; // SelfCellular: = n; DivisorLift: child level
  GroupFingerprint subject;

  // ActiveSum payload.
  std::string family_fingerprint;
  std::string family_note = "-"; // single token, e.g. the construction rule
  std::size_t family_size = 0;
  bool hyp_distinct = false;
  bool hyp_closed = false;
  bool hyp_exponent = false;
  std::string encoding;
  std::uint64_t order_S = 0;
  std::uint64_t image_order = 0;
  std::uint64_t kernel_order = 0;
  bool generating = false;
  bool iso = false;

  std::vector<CertNode> children;
};

struct CellularityCertificate {
  CertNode root;

  std::string to_text() const;
  static CellularityCertificate parse(const std::string &text);
};

struct CertifyOutcome {
  CellularityCertificate certificate;
  ActiveSumResult realization;
};

// Applies the active-sum rule: verifies the family hypotheses, certifies
// each member (cyclic members via SelfCellular + DivisorLift; other members
// need an entry in `supplied`), realizes the active sum and returns the
// certificate for S. Throws HypothesisViolation naming the failing
// hypothesis and a witness.
CertifyOutcome certify_active_sum(
    const PermGroup &G, const SubgroupFamily &fam, std::uint64_t n,
    Encoding enc, const TcOptions &options = {},
    const std::map<std::size_t, CellularityCertificate> &supplied = {},
    std::size_t cutoff = 100000, const std::string &family_note = "-");

struct VerifyReport {
  bool accepted = false;
  std::vector<std::string> failures;
};

// Re-checks every hypothesis recorded in the certificate from the raw
// inputs: family hypotheses, the realization numbers (by re-running the
// enumeration), subject fingerprints, and the rule structure of every child.
VerifyReport verify_certificate(const CellularityCertificate &cert,
                                const PermGroup &G, const SubgroupFamily &fam,
                                std::uint64_t n, Encoding enc,
                                const TcOptions &options = {},
                                std::size_t cutoff = 100000);

// Family hypothesis checks, shared by certify and verify.
bool family_members_distinct(const SubgroupFamily &fam);
bool family_conjugation_closed(const SubgroupFamily &fam);

} // namespace activesum

#endif
