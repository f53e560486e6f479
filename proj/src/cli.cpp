#include "starcheck/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "starcheck/errors.hpp"
#include "starcheck/serialize.hpp"

#ifndef STARCHECK_DATA_DIR
#define STARCHECK_DATA_DIR "data"
#endif

namespace starcheck {

std::string bundled_data_dir() { return STARCHECK_DATA_DIR; }

namespace {

/// Raised for bad input that CLI11 cannot catch on its own (missing files, bad combinations).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A mathematical negative that should end the run with exit status 1.
class NegativeResult : public Error {
 public:
  using Error::Error;
};

struct AlgebraOptions {
  std::string algebra;
  std::string field = "q";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--algebra", algebra, "mat:<n>:<transpose|symplectic> or quat")->required();
    cmd->add_option("--field", field, "q or gf:<p>");
  }

  Algebra build() const { return Algebra::parse(algebra, field); }
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

void add_pool(CLI::App* cmd, std::string& pool) {
  cmd->add_option("--pool", pool, "candidate pool for witness searches")->check(CLI::IsMember({"basis", "pairs"}));
}

SearchBudget make_budget(const std::string& pool, std::size_t max_pairs) {
  return {pool == "basis" ? SearchBudget::Pool::basis : SearchBudget::Pool::pairs, max_pairs};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string strip_paper_prefix(const std::string& name) {
  return name.rfind("paper:", 0) == 0 ? name.substr(6) : name;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  AlgebraOptions algebra;
  std::vector<std::string> theorems{"all"};
  std::string pool = "pairs";
  std::size_t max_pairs = 0;
  std::string expect;
  std::string format = "json";
};

/// "<algebra|*> <theorem> <status>" per line; '#' starts a comment.
std::map<std::pair<std::string, std::string>, std::string> read_expectations(const std::string& path) {
  std::map<std::pair<std::string, std::string>, std::string> table;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string alg, theorem, status, extra;
    if (!(fields >> alg)) continue;
    if (!(fields >> theorem >> status) || (fields >> extra)) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected '<algebra> <theorem> <status>'");
    }
    if (status != "Verified" && status != "HypothesisFailed" && status != "ConclusionFailed") {
      throw UsageError(path + ":" + std::to_string(line_no) + ": unknown status '" + status + "'");
    }
    table[{alg, theorem}] = status;
  }
  return table;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const Algebra algebra = opt.algebra.build();
  std::vector<std::string> ids;
  for (const auto& t : opt.theorems) {
    if (t == "all") {
      ids.insert(ids.end(), theorem_ids().begin(), theorem_ids().end());
    } else {
      ids.push_back(t);
    }
  }
  for (const auto& id : ids) {
    if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end()) {
      std::string known;
      for (const auto& k : theorem_ids()) known += (known.empty() ? "" : ", ") + k;
      throw UnknownId("unknown theorem '" + id + "' (known: " + known + ")");
    }
  }
  std::map<std::pair<std::string, std::string>, std::string> expectations;
  if (!opt.expect.empty()) expectations = read_expectations(opt.expect);

  StructureContext ctx(algebra);
  const SearchBudget budget = make_budget(opt.pool, opt.max_pairs);
  std::vector<TheoremReport> reports;
  json mismatches = json::array();
  for (const auto& id : ids) {
    reports.push_back(verify_theorem(ctx, id, budget));
    std::string expected = "Verified";
    for (const auto& key : {std::pair{algebra.spec(), id}, std::pair{std::string("*"), id}}) {
      if (auto it = expectations.find(key); it != expectations.end()) {
        expected = it->second;
        break;
      }
    }
    const std::string actual(to_string(reports.back().status));
    if (actual != expected) mismatches.push_back({{"theorem", id}, {"expected", expected}, {"actual", actual}});
  }

  if (opt.format == "text") {
    out << render_text(reports);
    for (const auto& m : mismatches) {
      out << "unexpected: " << m["theorem"].get<std::string>() << " is " << m["actual"].get<std::string>()
          << ", expected " << m["expected"].get<std::string>() << '\n';
    }
  } else {
    json reps = json::array();
    for (const auto& r : reports) reps.push_back(to_json(r));
    write_json(out, {{"algebra", algebra.spec()},
                     {"field", algebra.field().spec()},
                     {"reports", reps},
                     {"unexpected", mismatches}});
  }
  return mismatches.empty() ? exit_ok : exit_negative;
}

// ---- witnesses shared by decompose and criterion --------------------------

struct WitnessOptions {
  std::string witness;
  std::string x;
  std::string y;

  void add_to(CLI::App* cmd, const char* witness_help) {
    cmd->add_option("--witness", witness, witness_help);
    cmd->add_option("-x", x, "first element of the pair, e.g. \"e11 - e22\"");
    cmd->add_option("-y", y, "second element of the pair");
  }

  bool explicit_pair() const { return !x.empty() || !y.empty(); }

  std::pair<Element, Element> explicit_elements(const Algebra& algebra) const {
    if (x.empty() || y.empty()) throw UsageError("-x and -y must be given together");
    if (!witness.empty()) throw UsageError("--witness cannot be combined with -x/-y");
    return {parse_element(algebra, x), parse_element(algebra, y)};
  }
};

// ---- decompose ------------------------------------------------------------

struct DecomposeOptions {
  AlgebraOptions algebra;
  std::string scheme;
  WitnessOptions witness;
  std::string target;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string pool = "pairs";
  std::string format = "json";
};

CriterionId criterion_for(Scheme scheme) {
  switch (scheme) {
    case Scheme::s3:
      return CriterionId::h_s3;
    case Scheme::s2:
      return CriterionId::h_s2;
    case Scheme::k_plus_k2:
      return CriterionId::d;
    case Scheme::k_plus_k2_k3:
      return CriterionId::e;
  }
  return CriterionId::h_s3;
}

std::string missing_witness_report(Scheme scheme) {
  switch (scheme) {
    case Scheme::s3:
      return "no symmetric pair with xy - yx invertible";
    case Scheme::s2:
      return "xSy ⊄ S² for every symmetric pair tried with xy - yx invertible";
    case Scheme::k_plus_k2:
      return "xSy ⊄ K² for every skew pair tried with xy + yx invertible";
    case Scheme::k_plus_k2_k3:
      return "no skew pair with xy - yx invertible";
  }
  return "no witness";
}

int cmd_decompose(const DecomposeOptions& opt, std::ostream& out) {
  const Algebra algebra = opt.algebra.build();
  const Scheme scheme = parse_scheme(opt.scheme);
  if (!opt.target.empty() && opt.seed) throw UsageError("give exactly one of --target and --seed");

  std::optional<std::pair<Element, Element>> pair;
  std::string source;
  if (opt.witness.explicit_pair()) {
    pair = opt.witness.explicit_elements(algebra);
    source = "explicit";
  } else if (!opt.witness.witness.empty() && opt.witness.witness != "search") {
    const auto w = paper_witness(strip_paper_prefix(opt.witness.witness), algebra);
    pair = {w.x, w.y};
    source = "paper:" + strip_paper_prefix(opt.witness.witness);
  } else {
    StructureContext ctx(algebra);
    const auto found = find_witness(ctx, criterion_for(scheme), make_budget(opt.pool, 0));
    if (!found.outcome) {
      throw NegativeResult("obstruction: " + missing_witness_report(scheme) + " (" + std::to_string(found.tried) +
                           " candidates on " + algebra.spec() + ")");
    }
    pair = {found.outcome->x, found.outcome->y};
    source = found.source;
  }

  if (opt.target.empty() && !opt.seed) throw UsageError("give exactly one of --target and --seed");
  Element target = algebra.zero();
  if (opt.seed) {
    std::mt19937_64 rng(*opt.seed);
    target = random_element(algebra, rng);
  } else {
    target = parse_element(algebra, opt.target);
  }

  const auto& [x, y] = *pair;
  Certificate cert = [&] {
    switch (scheme) {
      case Scheme::s3:
        return decompose_s3(algebra, x, y, target);
      case Scheme::s2:
        return decompose_s2(algebra, x, y, target, default_s2_decomposer(algebra, x, y));
      case Scheme::k_plus_k2:
      case Scheme::k_plus_k2_k3:
        break;
    }
    return decompose_k_chain(algebra, x, y, target, scheme);
  }();
  const Verdict verdict = verify_certificate(cert);

  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) throw UsageError("cannot write '" + opt.out_path + "'");
    write_json(file, to_json(cert));
  }
  if (opt.format == "text") {
    out << (verdict.valid ? "valid" : "invalid") << ": scheme " << to_string(scheme) << ", " << cert.terms.size()
        << " terms, witness " << source << '\n';
    if (!verdict.valid) out << verdict.violation << ": " << verdict.detail << '\n';
  } else {
    json report = {{"verdict", to_json(verdict)}, {"witness_source", source}, {"term_count", cert.terms.size()}};
    if (opt.out_path.empty()) report["certificate"] = to_json(cert);
    write_json(out, report);
  }
  return verdict.valid ? exit_ok : exit_negative;
}

// ---- verify-certificate ---------------------------------------------------

int cmd_check_certificate(const std::string& path, const std::string& format, std::ostream& out) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  const Certificate cert = certificate_from_json(j);
  const Verdict verdict = verify_certificate(cert);
  if (format == "text") {
    out << (verdict.valid ? "valid" : "invalid: " + verdict.violation + " (" + verdict.detail + ")") << '\n';
  } else {
    write_json(out, to_json(verdict));
  }
  return verdict.valid ? exit_ok : exit_negative;
}

// ---- identity -------------------------------------------------------------

struct IdentityOptions {
  std::string corpus;
  bool mutated = false;
  std::size_t instances = 3;
  std::uint64_t seed = 1;
  std::string format = "text";
};

int cmd_identity(const IdentityOptions& opt, std::ostream& out) {
  if (!opt.corpus.empty() && opt.mutated) throw UsageError("--mutated selects the bundled corpus; drop --corpus");
  const std::string path = !opt.corpus.empty() ? opt.corpus
                           : opt.mutated       ? bundled_data_dir() + "/identities_mutated.txt"
                                               : bundled_data_dir() + "/identities.txt";
  const auto entries = parse_corpus(read_file(path), path);

  const Algebra m3 = Algebra::matrices(Field::rationals(), 3, Involution::transpose);
  std::mt19937_64 rng(opt.seed);
  std::size_t total = 0;
  std::size_t held = 0;
  std::size_t disagreements = 0;
  json blocks = json::array();
  std::ostringstream text;

  for (const auto& entry : entries) {
    json claims = json::array();
    for (const auto& claim : entry.claims) {
      ++total;
      const ClaimVerdict v = check_claim(claim);
      held += v.holds ? 1 : 0;
      bool agrees = true;
      for (std::size_t i = 0; i < opt.instances; ++i) {
        const auto assignment = random_assignment(entry.declarations, m3, rng);
        // A failing claim may still hold on one instance by accident; it only
        // disagrees if no instance exposes it.
        const bool inst = check_claim_instance(claim, assignment, m3);
        if (v.holds && !inst) agrees = false;
        if (!v.holds && !inst) break;
        if (!v.holds && i + 1 == opt.instances) agrees = false;
      }
      if (!agrees) ++disagreements;
      claims.push_back({{"line", claim.line},
                        {"text", claim.text},
                        {"holds", v.holds},
                        {"detail", v.detail},
                        {"instances_agree", opt.instances == 0 ? json(nullptr) : json(agrees)}});
      text << (v.holds ? "PASS " : "FAIL ") << entry.name << ':' << claim.line << "  " << claim.text;
      if (!v.holds) text << "  [" << v.detail << ']';
      if (!agrees) text << "  [M_3 substitution disagrees]";
      text << '\n';
    }
    blocks.push_back({{"name", entry.name}, {"line", entry.line}, {"claims", claims}});
  }

  if (opt.format == "json") {
    write_json(out, {{"corpus", path},
                     {"claims", total},
                     {"holding", held},
                     {"instance_disagreements", disagreements},
                     {"entries", blocks}});
  } else {
    out << text.str() << held << '/' << total << " claims hold";
    if (opt.instances > 0) out << ", " << disagreements << " disagreements on M_3(Q) substitution";
    out << '\n';
  }
  return held == total && disagreements == 0 ? exit_ok : exit_negative;
}

// ---- search, criterion, span ----------------------------------------------

struct SearchOptions {
  AlgebraOptions algebra;
  std::string criterion;
  std::string pool = "pairs";
  std::size_t max_pairs = 0;
  std::string format = "json";
};

int cmd_search(const SearchOptions& opt, std::ostream& out) {
  const Algebra algebra = opt.algebra.build();
  const CriterionId id = parse_criterion(opt.criterion);
  StructureContext ctx(algebra);
  const SearchResult result = witness_search(ctx, id, make_budget(opt.pool, opt.max_pairs));
  if (opt.format == "text") {
    if (result.found()) {
      out << "found: x = " << result.outcome->x.to_string() << ", y = " << result.outcome->y.to_string() << " after "
          << result.tried << " candidates\n";
    } else {
      out << "exhausted after " << result.tried << " candidates\n";
    }
  } else {
    write_json(out, to_json(result, id, algebra));
  }
  return result.found() ? exit_ok : exit_negative;
}

struct CriterionOptions {
  AlgebraOptions algebra;
  std::string criterion;
  WitnessOptions witness;
  std::string format = "json";
};

int cmd_criterion(const CriterionOptions& opt, std::ostream& out) {
  const Algebra algebra = opt.algebra.build();
  std::optional<std::pair<Element, Element>> pair;
  std::string criterion = opt.criterion;
  if (opt.witness.explicit_pair()) {
    pair = opt.witness.explicit_elements(algebra);
  } else if (!opt.witness.witness.empty()) {
    const auto w = paper_witness(strip_paper_prefix(opt.witness.witness), algebra);
    pair = {w.x, w.y};
    if (criterion.empty()) criterion = std::string(to_string(w.criterion));
  } else {
    throw UsageError("give --witness or -x/-y");
  }
  if (criterion.empty()) throw UsageError("--criterion is required with -x/-y");

  StructureContext ctx(algebra);
  const CriterionOutcome outcome = check_criterion(ctx, parse_criterion(criterion), pair->first, pair->second);
  if (opt.format == "text") {
    std::size_t contained = 0;
    for (const auto& m : outcome.memberships) contained += m.contained ? 1 : 0;
    out << (outcome.pass ? "pass" : "fail") << ": criterion " << criterion << ", " << outcome.combination
        << " = " << outcome.combination_value.to_string() << ", " << contained << '/' << outcome.memberships.size()
        << " memberships in " << (outcome.target.empty() ? "-" : outcome.target) << '\n';
  } else {
    write_json(out, to_json(outcome));
  }
  return outcome.pass ? exit_ok : exit_negative;
}

struct SpanOptions {
  AlgebraOptions algebra;
  std::string expr;
  std::string format = "json";
};

int cmd_span(const SpanOptions& opt, std::ostream& out) {
  const Algebra algebra = opt.algebra.build();
  StructureContext ctx(algebra);
  const SetExpr expr = SetExpr::parse(opt.expr);
  const Subspace& s = ctx.eval(expr);
  if (opt.format == "text") {
    out << "dim " << expr.to_string() << " = " << s.dim() << " of " << s.ambient() << '\n';
  } else {
    write_json(out, {{"algebra", algebra.spec()},
                     {"field", algebra.field().spec()},
                     {"expr", expr.to_string()},
                     {"subspace", to_json(s)}});
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of symmetric/skew product structure in algebras with involution", "starcheck"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "verify theorems on one algebra");
  verify.algebra.add_to(verify_cmd);
  verify_cmd->add_option("--theorem", verify.theorems, "theorem id, repeatable; 'all' for every theorem");
  add_pool(verify_cmd, verify.pool);
  verify_cmd->add_option("--max-pairs", verify.max_pairs, "cap on candidate pairs per witness search (0: none)");
  verify_cmd->add_option("--expect", verify.expect, "expected-outcome table: '<algebra|*> <theorem> <status>' lines");
  add_format(verify_cmd, verify.format);

  DecomposeOptions decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "write an element as a certified sum of products");
  decompose.algebra.add_to(decompose_cmd);
  decompose_cmd->add_option("--scheme", decompose.scheme, "s3, s2, k_plus_k2 or k_plus_k2_k3")->required();
  decompose.witness.add_to(decompose_cmd, "paper:<name> or 'search' (default)");
  decompose_cmd->add_option("--target", decompose.target, "target element, e.g. \"e12\"");
  decompose_cmd->add_option("--seed", decompose.seed, "seed for a random target");
  decompose_cmd->add_option("--out", decompose.out_path, "write the certificate JSON here");
  add_pool(decompose_cmd, decompose.pool);
  add_format(decompose_cmd, decompose.format);

  std::string cert_path;
  std::string cert_format = "json";
  auto* cert_cmd = app.add_subcommand("verify-certificate", "check a certificate JSON file");
  cert_cmd->add_option("--in", cert_path, "certificate file")->required();
  add_format(cert_cmd, cert_format);

  IdentityOptions identity;
  auto* identity_cmd = app.add_subcommand("identity", "check an identity corpus in the free algebra with involution");
  identity_cmd->add_option("--corpus", identity.corpus, "corpus file (default: the bundled corpus)");
  identity_cmd->add_flag("--mutated", identity.mutated, "use the bundled mutated corpus");
  identity_cmd->add_option("--instances", identity.instances, "random M_3(Q) substitutions per claim");
  identity_cmd->add_option("--seed", identity.seed, "seed for the substitutions");
  add_format(identity_cmd, identity.format);

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "search for a criterion witness");
  search.algebra.add_to(search_cmd);
  search_cmd->add_option("--criterion", search.criterion, "criterion id")->required();
  add_pool(search_cmd, search.pool);
  search_cmd->add_option("--max-pairs", search.max_pairs, "cap on candidate pairs (0: none)");
  add_format(search_cmd, search.format);

  CriterionOptions criterion;
  auto* criterion_cmd = app.add_subcommand("criterion", "check one pair against a criterion");
  criterion.algebra.add_to(criterion_cmd);
  criterion_cmd->add_option("--criterion", criterion.criterion, "criterion id (defaults to the witness's own)");
  criterion.witness.add_to(criterion_cmd, "paper:<name>");
  add_format(criterion_cmd, criterion.format);

  SpanOptions span;
  auto* span_cmd = app.add_subcommand("span", "dimension and basis of a set expression such as \"S^2 K\"");
  span.algebra.add_to(span_cmd);
  span_cmd->add_option("--expr", span.expr, "set expression")->required();
  add_format(span_cmd, span.format);

  std::vector<std::string> argv_storage{"starcheck"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (decompose_cmd->parsed()) return cmd_decompose(decompose, out);
    if (cert_cmd->parsed()) return cmd_check_certificate(cert_path, cert_format, out);
    if (identity_cmd->parsed()) return cmd_identity(identity, out);
    if (search_cmd->parsed()) return cmd_search(search, out);
    if (criterion_cmd->parsed()) return cmd_criterion(criterion, out);
    if (span_cmd->parsed()) return cmd_span(span, out);
  } catch (const NegativeResult& e) {
    err << e.what() << '\n';
    return exit_negative;
  } catch (const NotInvertibleError& e) {
    err << "obstruction: " << e.what() << '\n';
    return exit_negative;
  } catch (const DecompositionObstructed& e) {
    err << "obstruction: " << e.what() << '\n';
    return exit_negative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace starcheck
