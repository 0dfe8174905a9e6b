// Batch front-end: build groups and families, realize active sums, emit
// cellularity certificates, run the exhaustive divisor-level sweep.
//
// Exit codes: 0 success, 1 validation/hypothesis failure, 2 budget or
// cutoff exceeded, 3 parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "activesum/active_sum.hpp"
#include "activesum/catalog.hpp"
#include "activesum/cellularity.hpp"
#include "activesum/certificate.hpp"
#include "activesum/coxeter.hpp"
#include "activesum/errors.hpp"
#include "activesum/group_io.hpp"
#include "activesum/schur.hpp"
#include "activesum/sweep.hpp"

namespace {

using namespace activesum;

std::uint64_t default_budget() {
  if (const char *env = std::getenv("ACTIVESUM_BUDGET"))
    return std::strtoull(env, nullptr, 10);
  return 1000000;
}

struct FamilyFlags {
  std::string family_spec;
  std::vector<std::string> seeds;
};

SubgroupFamily build_family(const PermGroup &G, const FamilyFlags &flags) {
  if (!flags.family_spec.empty() && !flags.seeds.empty())
    throw ParseError("--family and --seed are mutually exclusive", 0);
  if (!flags.family_spec.empty()) {
    const std::string &spec = flags.family_spec;
    if (spec.rfind("cyclic:", 0) == 0) {
      std::uint64_t m = std::stoull(spec.substr(7));
      return cyclic_family(G, m);
    }
    if (spec == "whole")
      return whole_group_family(G);
    std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
    FamilyFile file = parse_family_file(read_file(path));
    return conjugation_closure(G, seeds_from_family_file(file, G));
  }
  if (!flags.seeds.empty()) {
    std::vector<Subgroup> seeds;
    for (const std::string &line : flags.seeds) {
      std::vector<Perm> gens;
      for (const std::string &token : split_perm_tokens(line))
        gens.push_back(Perm::from_cycles(token, G.degree()));
      seeds.push_back(Subgroup(G, std::move(gens)));
    }
    return conjugation_closure(G, seeds);
  }
  throw ParseError("no family given: use --family or --seed", 0);
}

Encoding resolve_encoding(const std::string &name, const SubgroupFamily &fam) {
  if (name == "regular")
    return Encoding::Regular;
  if (name == "cyclic")
    return Encoding::Cyclic;
  if (name == "auto")
    return auto_encoding(fam);
  throw ParseError("unknown encoding '" + name + "'", 0);
}

void emit(std::ostream &out, const std::string &key, const std::string &value) {
  out << key << '=' << value << '\n';
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void report_realization(std::ostream &out, const ActiveSumResult &r) {
  emit(out, "presentation_generators", std::to_string(r.presentation.rank()));
  emit(out, "presentation_relators",
       std::to_string(r.presentation.relators().size()));
  emit(out, "order_S", std::to_string(r.order_S));
  emit(out, "image_order", std::to_string(r.image_order));
  emit(out, "kernel_order", std::to_string(r.kernel_order));
  emit(out, "generating", bool_str(r.generating));
  emit(out, "iso", bool_str(r.iso));
  emit(out, "cosets_final", std::to_string(r.stats.cosets_final));
  emit(out, "cosets_peak", std::to_string(r.stats.cosets_peak));
  emit(out, "coincidences", std::to_string(r.stats.coincidences));
}

struct ActiveSumArgs {
  std::string group;
  FamilyFlags family;
  std::uint64_t n = 1;
  std::string encoding = "auto";
  std::uint64_t budget = default_budget();
  std::string strategy = "hlt";
  std::string output;
};

int run_active_sum(const ActiveSumArgs &args) {
  PermGroup G = group_from_spec(args.group);
  SubgroupFamily fam = build_family(G, args.family);
  Encoding enc = resolve_encoding(args.encoding, fam);
  TcOptions options;
  options.max_cosets = args.budget;
  options.strategy = args.strategy == "felsch" ? TcStrategy::Felsch : TcStrategy::Hlt;

  ActiveSumResult result = realize_active_sum(G, fam, enc, options);

  std::ostringstream out;
  emit(out, "command", "active-sum");
  emit(out, "group", args.group);
  emit(out, "group_order", std::to_string(G.order()));
  emit(out, "family_members", std::to_string(fam.size()));
  emit(out, "encoding", encoding_name(enc));
  emit(out, "n", std::to_string(args.n));
  report_realization(out, result);

  std::cout << out.str();
  if (!args.output.empty())
    write_file(args.output, out.str());
  return 0;
}

struct CertifyArgs {
  std::string group;
  std::string coxeter;
  FamilyFlags family;
  std::uint64_t n = 2;
  std::string encoding = "auto";
  std::uint64_t budget = default_budget();
  std::string strategy = "hlt";
  std::string schur_path;
  std::string cert_out;
  std::string output;
};

int run_certify(const CertifyArgs &args) {
  std::optional<PermGroup> G;
  std::optional<SubgroupFamily> fam;
  std::string group_label = args.group;
  std::string family_note = "-";

  if (!args.coxeter.empty()) {
    CoxeterMatrix matrix = CoxeterMatrix::parse(read_file(args.coxeter));
    TcOptions options;
    options.max_cosets = args.budget;
    CoxeterRealization realization = coxeter_reflection_family(matrix, options);
    G = realization.group;
    fam = realization.family;
    group_label = "coxeter:" + args.coxeter;
    family_note = "reflection-closure-of-standard-generators";
  } else {
    G = group_from_spec(args.group);
    fam = build_family(*G, args.family);
  }

  Encoding enc = resolve_encoding(args.encoding, *fam);
  TcOptions options;
  options.max_cosets = args.budget;
  options.strategy = args.strategy == "felsch" ? TcStrategy::Felsch : TcStrategy::Hlt;

  CertifyOutcome outcome =
      certify_active_sum(*G, *fam, args.n, enc, options, {}, 100000, family_note);
  VerifyReport verdict =
      verify_certificate(outcome.certificate, *G, *fam, args.n, enc, options);

  std::ostringstream out;
  emit(out, "command", "certify");
  emit(out, "group", group_label);
  emit(out, "group_order", std::to_string(G->order()));
  emit(out, "family_members", std::to_string(fam->size()));
  emit(out, "family_note", family_note);
  emit(out, "encoding", encoding_name(enc));
  emit(out, "n", std::to_string(args.n));
  report_realization(out, outcome.realization);
  emit(out, "certificate_subject_order",
       std::to_string(outcome.certificate.root.subject.order));
  emit(out, "verifier", verdict.accepted ? "accepted" : "rejected");
  for (const std::string &failure : verdict.failures)
    emit(out, "verifier_failure", failure);

  if (!args.schur_path.empty()) {
    SchurData schur = SchurData::parse(read_file(args.schur_path));
    try {
      ConsequenceReport c1 = multiplier_primes_check(outcome.certificate, schur);
      emit(out, "multiplier_primes", c1.pass ? "pass" : "fail");
      emit(out, "multiplier_primes_detail", c1.detail);
    } catch (const MissingSchurData &e) {
      emit(out, "multiplier_primes", "no-data");
      emit(out, "multiplier_primes_detail", e.what());
    }
    try {
      ConsequenceReport c2 = injection_isomorphism_check(*G, *fam, args.n, schur, enc, options);
      emit(out, "injection_iso",
           c2.applicable ? (c2.pass ? "pass" : "fail") : "not-applicable");
      emit(out, "injection_iso_detail", c2.detail);
    } catch (const MissingSchurData &e) {
      emit(out, "injection_iso", "no-data");
      emit(out, "injection_iso_detail", e.what());
    }
  }

  std::cout << out.str();
  if (!args.output.empty())
    write_file(args.output, out.str());
  if (!args.cert_out.empty())
    write_file(args.cert_out, outcome.certificate.to_text());

  if (!verdict.accepted)
    return 1;
  return 0;
}

struct SweepArgs {
  std::string orders; // "a..b"
  std::uint64_t max_order = 16;
  std::vector<std::uint64_t> n_values = {2, 3, 4, 6, 8, 12};
  std::string output;
};

int run_sweep(const SweepArgs &args) {
  SweepConfig config;
  config.max_order = args.max_order;
  if (!args.orders.empty()) {
    auto dots = args.orders.find("..");
    if (dots == std::string::npos)
      throw ParseError("--orders expects a..b", 0);
    config.min_order = std::stoull(args.orders.substr(0, dots));
    config.max_order = std::stoull(args.orders.substr(dots + 2));
  }
  config.n_values = args.n_values;

  SweepResult result = divisor_sweep(config);

  std::ostringstream out;
  emit(out, "command", "property-sweep");
  emit(out, "min_order", std::to_string(config.min_order));
  emit(out, "max_order", std::to_string(config.max_order));
  std::ostringstream ns;
  for (std::size_t i = 0; i < config.n_values.size(); ++i)
    ns << (i ? "," : "") << config.n_values[i];
  emit(out, "n_values", ns.str());
  emit(out, "pairs", std::to_string(result.pairs));
  emit(out, "homs", std::to_string(result.homs));
  emit(out, "equivalences", std::to_string(result.equivalences));
  emit(out, "implications", std::to_string(result.implications));
  emit(out, "violations", std::to_string(result.violations));
  for (const std::string &detail : result.violation_details)
    emit(out, "violation", detail);

  std::cout << out.str();
  if (!args.output.empty())
    write_file(args.output, out.str());
  return result.violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"active sums of subgroup families, coset enumeration and "
               "cyclic-cellularity certificates"};
  app.require_subcommand(1);

  ActiveSumArgs as_args;
  CLI::App *as_cmd = app.add_subcommand(
      "active-sum", "realize the active sum of a subgroup family");
  as_cmd->add_option("--group", as_args.group, "ambient group spec")->required();
  as_cmd->add_option("--family", as_args.family.family_spec,
                     "family: cyclic:<m>, whole, or a family file");
  as_cmd->add_option("--seed", as_args.family.seeds,
                     "seed subgroup generators, e.g. \"(0 1)(2 3)\"");
  as_cmd->add_option("--n", as_args.n, "cellularity level to report");
  as_cmd->add_option("--encoding", as_args.encoding, "auto|regular|cyclic");
  as_cmd->add_option("--budget", as_args.budget, "max live cosets");
  as_cmd->add_option("--strategy", as_args.strategy, "hlt|felsch");
  as_cmd->add_option("--output", as_args.output, "also write the report here");

  CertifyArgs cert_args;
  CLI::App *cert_cmd =
      app.add_subcommand("certify", "emit a C_n-cellularity certificate");
  cert_cmd->add_option("--group", cert_args.group, "ambient group spec");
  cert_cmd->add_option("--coxeter", cert_args.coxeter,
                       "Coxeter matrix file; group and family come from it");
  cert_cmd->add_option("--family", cert_args.family.family_spec,
                       "family: cyclic:<m>, whole, or a family file");
  cert_cmd->add_option("--seed", cert_args.family.seeds,
                       "seed subgroup generators");
  cert_cmd->add_option("--n", cert_args.n, "cellularity level")->required();
  cert_cmd->add_option("--encoding", cert_args.encoding, "auto|regular|cyclic");
  cert_cmd->add_option("--budget", cert_args.budget, "max live cosets");
  cert_cmd->add_option("--strategy", cert_args.strategy, "hlt|felsch");
  cert_cmd->add_option("--schur", cert_args.schur_path,
                       "Schur multiplier fixture file for multiplier and injection checks");
  cert_cmd->add_option("--cert-out", cert_args.cert_out,
                       "write the certificate to this file");
  cert_cmd->add_option("--output", cert_args.output, "also write the report here");

  SweepArgs sweep_args;
  CLI::App *sweep_cmd = app.add_subcommand(
      "property-sweep", "exhaustive divisor-level sweep over the catalog");
  sweep_cmd->add_option("--orders", sweep_args.orders, "order range a..b");
  sweep_cmd->add_option("--max-order", sweep_args.max_order,
                        "largest catalog order");
  sweep_cmd->add_option("--n", sweep_args.n_values, "levels to test");
  sweep_cmd->add_option("--output", sweep_args.output,
                        "also write the report here");

  try {
    app.parse(argc, argv);
    if (as_cmd->parsed())
      return run_active_sum(as_args);
    if (cert_cmd->parsed())
      return run_certify(cert_args);
    if (sweep_cmd->parsed())
      return run_sweep(sweep_args);
    return 3;
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const HypothesisViolation &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
    case ErrorKind::Validation:
      return 1;
    case ErrorKind::Budget:
      return 2;
    case ErrorKind::Parse:
      return 3;
    }
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
