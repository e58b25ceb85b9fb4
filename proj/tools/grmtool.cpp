#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grm/analysis.hpp"
#include "grm/code.hpp"
#include "grm/cyclotomic.hpp"
#include "grm/errors.hpp"
#include "grm/json_io.hpp"
#include "grm/polynomial.hpp"
#include "grm/verify.hpp"

namespace {

using namespace grm;

struct BuildFlags {
  std::string family = "grm";
  int q = 0;
  int m = 0;
  int h = -1;
  int ell = -1;
  int delta = -1;
  long n = -1;
  long b = 1;
  bool dual = false;
  bool complement = false;
  bool extend = false;
  std::uint64_t field_cap = FieldTable::default_table_budget;
};

struct OutputFlags {
  std::string format = "table";
  std::string path;
};

void add_build_flags(CLI::App* cmd, BuildFlags& f) {
  // --h is a code parameter here, so help hangs off --help alone.
  cmd->set_help_flag("--help", "print this help message and exit");
  cmd->add_option("--family", f.family, "grm | pgrm | bch | reversible")
      ->check(CLI::IsMember({"grm", "pgrm", "bch", "reversible"}))
      ->capture_default_str();
  cmd->add_option("--q", f.q, "base field size (prime power)")->required();
  cmd->add_option("--m", f.m, "extension degree; length becomes q^m - 1");
  cmd->add_option("--h", f.h, "digit-weight level (grm, reversible)");
  cmd->add_option("--ell", f.ell, "level parameter (pgrm)");
  cmd->add_option("--n", f.n, "code length (bch)");
  cmd->add_option("--delta", f.delta, "designed distance (bch)");
  cmd->add_option("--b", f.b, "first exponent of the root run (bch)")
      ->capture_default_str();
  auto* d = cmd->add_flag("--dual", f.dual, "replace the code by its dual");
  auto* c = cmd->add_flag("--complement", f.complement,
                          "replace the code by the check-polynomial code");
  d->excludes(c);
  cmd->add_flag("--extend", f.extend,
                "append an overall parity coordinate (applied last)");
  cmd->add_option("--field-cap", f.field_cap,
                  "largest field size the table builder accepts")
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_option("--format", o.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", o.path,
                  "write to this file instead of standard output");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

CyclicCode build_cyclic(const BuildFlags& f) {
  auto need = [](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  CyclicCode c;
  if (f.family == "grm") {
    need(f.m > 0, "--m is required for family grm");
    need(f.h >= 0, "--h is required for family grm");
    c = make_grm(f.q, f.m, f.h, f.field_cap);
  } else if (f.family == "pgrm") {
    need(f.m > 0, "--m is required for family pgrm");
    need(f.ell >= 0, "--ell is required for family pgrm");
    c = make_pgrm(f.q, f.m, f.ell, f.field_cap);
  } else if (f.family == "bch") {
    need(f.n > 0, "--n is required for family bch");
    need(f.delta > 0, "--delta is required for family bch");
    c = make_bch(f.q, f.n, f.delta, f.b, f.field_cap);
  } else {
    need(f.m > 0, "--m is required for family reversible");
    need(f.h >= 0, "--h is required for family reversible");
    c = make_reversible_grm(f.q, f.m, f.h, f.field_cap);
  }
  if (f.dual) c = dual_code(c);
  if (f.complement) c = complement_code(c);
  return c;
}

std::string int_vec_text(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

std::string set_text(const IndexSet& s) {
  std::ostringstream os;
  os << "(size " << s.size() << ") {";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) os << ", ";
    os << s.members()[i];
  }
  os << "}";
  return os.str();
}

std::string field_text(const FieldTable& f) {
  std::ostringstream os;
  os << "GF(" << f.size() << ")";
  if (f.degree() > 1) os << " = GF(" << f.characteristic() << "^" << f.degree() << ")";
  os << ", modulus " << int_vec_text(f.modulus());
  return os.str();
}

std::string family_label(const CyclicCode& c) {
  std::ostringstream os;
  os << c.family;
  if (!c.parent_family.empty()) os << " of " << c.parent_family;
  for (const auto& [key, value] : c.params) os << " " << key << "=" << value;
  os << ", q=" << c.q << ", n=" << c.n;
  return os.str();
}

std::string construct_table(const CyclicCode& c) {
  std::ostringstream os;
  os << "code             " << family_label(c) << "\n";
  os << "parameters       [" << c.n << ", " << c.dimension() << "]\n";
  if (c.flagged_trivial)
    os << "note             every nonzero exponent is in the defining set; "
          "the code is one-dimensional\n";
  os << "defining set     " << set_text(c.defining_set) << "\n";
  os << "generator        " << int_vec_text(c.generator.serialize())
     << "  (ascending coefficients)\n";
  os << "base field       " << field_text(*c.base) << "\n";
  os << "extension field  " << field_text(*c.ext) << "\n";
  return os.str();
}

std::string construct_table(const ExtendedCode& ec) {
  std::ostringstream os;
  os << construct_table(ec.parent);
  os << "extended length  " << ec.length() << "\n";
  os << "extended set     " << set_text(ec.defining_set)
     << "  (value " << ec.parent.n << " marks the parity root)\n";
  return os.str();
}

std::string report_table(const AnalysisReport& r) {
  std::ostringstream os;
  os << "code             " << family_label(r.code);
  if (r.extended) os << ", extended to length " << r.length;
  os << "\n";
  os << "parameters       [" << r.length << ", " << r.dimension;
  if (r.distance) {
    os << ", ";
    if (r.distance->status != DistanceStatus::exact) os << ">=";
    os << r.distance->value;
  }
  os << "]\n";
  if (r.distance) {
    const DistanceResult& d = *r.distance;
    os << "distance         ";
    if (d.status == DistanceStatus::exact) {
      os << d.value << " (exact, "
         << (d.method == DistanceMethod::exhaustive ? "exhaustive enumeration"
                                                    : "information-set search")
         << ")\n";
    } else {
      os << ">= " << d.value << " (not certified within budget";
      if (d.best_found > 0)
        os << "; lightest codeword seen has weight " << d.best_found;
      os << ")\n";
    }
  }
  const char* scope = r.extended ? " (cyclic parent)" : "";
  os << "bch bound        " << r.bch << scope << "\n";
  os << "ht bound         " << r.hartmann_tzeng << scope << "\n";
  if (r.family_lower) os << "family lower     " << *r.family_lower << "\n";
  if (r.family_upper) os << "family upper     " << *r.family_upper << "\n";
  if (r.weights) {
    os << "weights          (nonzero counts)\n";
    for (std::size_t w = 0; w < r.weights->counts.size(); ++w)
      if (r.weights->counts[w])
        os << "  " << w << ": " << r.weights->counts[w] << "\n";
  }
  if (!r.designs.empty()) {
    os << "designs          (supports per nonzero weight)\n";
    for (const DesignCertificate& d : r.designs) {
      os << "  weight " << d.block_size << ": ";
      if (d.uniform)
        os << "2-(" << d.points << "," << d.block_size << "," << d.lambda
           << ") with " << d.block_count << " blocks\n";
      else
        os << "pair coverage not uniform over " << d.block_count
           << " blocks\n";
    }
  }
  if (r.affine) {
    os << "affine invariant ";
    if (r.affine->invariant)
      os << "yes\n";
    else
      os << "no (exponent " << r.affine->witness_r
         << " sits digit-wise below " << r.affine->witness_s
         << " but is missing from the extended set)\n";
  }
  return os.str();
}

int run_construct(const BuildFlags& bf, const OutputFlags& of) {
  CyclicCode c = build_cyclic(bf);
  if (bf.extend) {
    ExtendedCode ec = extend_code(c);
    emit(of.format == "json" ? dump_deterministic(code_to_json(ec))
                             : construct_table(ec),
         of.path);
  } else {
    emit(of.format == "json" ? dump_deterministic(code_to_json(c))
                             : construct_table(c),
         of.path);
  }
  return 0;
}

int run_analyze(const BuildFlags& bf, const AnalyzeRequest& req,
                const OutputFlags& of) {
  if (!bf.extend && req.want_affine)
    throw std::invalid_argument(
        "affine invariance is a property of the extended code; add --extend");
  if (!bf.extend && req.want_designs)
    throw std::invalid_argument(
        "designs are extracted from the extended code; add --extend");
  CyclicCode c = build_cyclic(bf);
  AnalysisReport rep = bf.extend ? analyze(extend_code(c), req) : analyze(c, req);
  emit(of.format == "json" ? dump_deterministic(report_to_json(rep))
                           : report_table(rep),
       of.path);
  // A distance that was requested but only bounded counts as an
  // uncertified result for scripting purposes.
  if (req.want_distance && rep.distance &&
      rep.distance->status != DistanceStatus::exact)
    return 3;
  return 0;
}

int run_verify(const VerifyOptions& vo, const OutputFlags& of) {
  VerifyReport rep = verify_reference_tables(vo);
  if (of.format == "json") {
    nlohmann::json j;
    j["items"] = nlohmann::json::array();
    for (const VerifyItem& it : rep.items)
      j["items"].push_back({{"category", it.category},
                            {"name", it.name},
                            {"expected", it.expected},
                            {"actual", it.actual},
                            {"pass", it.pass}});
    j["checks"] = rep.items.size();
    j["failures"] = rep.failures();
    emit(dump_deterministic(j), of.path);
  } else {
    std::ostringstream os;
    for (const VerifyItem& it : rep.items) {
      os << (it.pass ? "[PASS] " : "[FAIL] ") << it.category << " | " << it.name
         << " -> " << it.actual << "\n";
      if (!it.pass) os << "       expected: " << it.expected << "\n";
    }
    os << rep.items.size() << " checks, " << rep.failures() << " failures\n";
    emit(os.str(), of.path);
  }
  return rep.all_pass() ? 0 : 1;
}

int run_factor(int q, long n, std::uint64_t field_cap, const OutputFlags& of) {
  auto factors = factor_xn_minus_1(n, q, field_cap);
  if (of.format == "json") {
    nlohmann::json j;
    j["q"] = q;
    j["n"] = n;
    j["factors"] = nlohmann::json::array();
    for (const auto& [leader, poly] : factors)
      j["factors"].push_back(
          {{"leader", leader}, {"coefficients", poly.serialize()}});
    emit(dump_deterministic(j), of.path);
  } else {
    std::ostringstream os;
    os << "x^" << n << " - 1 over GF(" << q << "): " << factors.size()
       << " irreducible factors\n";
    for (const auto& [leader, poly] : factors)
      os << "  leader " << leader << ": " << int_vec_text(poly.serialize())
         << "\n";
    emit(os.str(), of.path);
  }
  return 0;
}

int run_cosets(int q, long n, const OutputFlags& of) {
  CosetStructure cs = all_cosets(n, q);
  if (of.format == "json") {
    nlohmann::json j;
    j["q"] = q;
    j["n"] = n;
    j["cosets"] = nlohmann::json::array();
    for (std::size_t i = 0; i < cs.cosets.size(); ++i)
      j["cosets"].push_back(
          {{"leader", cs.leaders[i]}, {"members", cs.cosets[i]}});
    emit(dump_deterministic(j), of.path);
  } else {
    std::ostringstream os;
    os << "multiplication by " << q << " modulo " << n << ": "
       << cs.cosets.size() << " cosets\n";
    for (std::size_t i = 0; i < cs.cosets.size(); ++i) {
      os << "  leader " << cs.leaders[i] << ": {";
      for (std::size_t k = 0; k < cs.cosets[i].size(); ++k) {
        if (k) os << ", ";
        os << cs.cosets[i][k];
      }
      os << "}\n";
    }
    emit(os.str(), of.path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "construct and analyze generalised Reed-Muller style cyclic codes"};
  app.require_subcommand(1);

  BuildFlags con_build, ana_build;
  OutputFlags con_out, ana_out, ver_out, fac_out, cos_out;
  AnalyzeRequest req;
  VerifyOptions ver;
  int fac_q = 0, cos_q = 0;
  long fac_n = 0, cos_n = 0;
  std::uint64_t fac_cap = FieldTable::default_table_budget;

  CLI::App* con = app.add_subcommand(
      "construct", "build a code and print its descriptor");
  add_build_flags(con, con_build);
  add_output_flags(con, con_out);

  CLI::App* ana = app.add_subcommand(
      "analyze", "build a code and compute parameters, bounds and structure");
  add_build_flags(ana, ana_build);
  add_output_flags(ana, ana_out);
  ana->add_flag("--distance,!--no-distance", req.want_distance,
                "compute the minimum distance (default on)");
  ana->add_flag("--weights", req.want_weights,
                "compute the full weight distribution");
  ana->add_flag("--designs", req.want_designs,
                "check the supports of each weight for 2-designs (needs --extend)");
  ana->add_flag("--affine", req.want_affine,
                "test affine invariance (needs --extend)");
  ana->add_option("--max-enum", req.enumeration.max_codewords,
                  "largest codeword count enumerated exhaustively")
      ->capture_default_str();
  ana->add_option("--max-candidates", req.enumeration.max_candidates,
                  "information-set search candidate budget")
      ->capture_default_str();
  ana->add_option("--ht-work", req.ht.work_limit,
                  "work cap for the shift-chain bound search")
      ->capture_default_str();
  ana->add_option("--threads", req.enumeration.threads,
                  "enumeration worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  CLI::App* ver_cmd = app.add_subcommand(
      "verify", "recompute the built-in reference tables and compare");
  ver_cmd->add_option("--only", ver.only,
                      "run one category: parameters | dimensions | bounds | "
                      "weights | designs | observations")
      ->check(CLI::IsMember({"parameters", "dimensions", "bounds", "weights",
                             "designs", "observations"}));
  ver_cmd->add_option("--max-enum", ver.enumeration.max_codewords,
                      "largest codeword count enumerated exhaustively")
      ->capture_default_str();
  ver_cmd->add_option("--max-candidates", ver.enumeration.max_candidates,
                      "information-set search candidate budget")
      ->capture_default_str();
  ver_cmd->add_option("--threads", ver.enumeration.threads,
                      "enumeration worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  add_output_flags(ver_cmd, ver_out);

  CLI::App* fac = app.add_subcommand(
      "factor", "factor x^n - 1 over GF(q) into minimal polynomials");
  fac->add_option("--q", fac_q, "base field size (prime power)")->required();
  fac->add_option("--n", fac_n, "exponent n with gcd(n, q) = 1")->required();
  fac->add_option("--field-cap", fac_cap,
                  "largest field size the table builder accepts")
      ->capture_default_str();
  add_output_flags(fac, fac_out);

  CLI::App* cos = app.add_subcommand(
      "cosets", "list the q-cyclotomic cosets modulo n");
  cos->add_option("--q", cos_q, "multiplier")->required();
  cos->add_option("--n", cos_n, "modulus with gcd(n, q) = 1")->required();
  add_output_flags(cos, cos_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help and version exit cleanly, bad flags do not
  }

  try {
    if (con->parsed()) return run_construct(con_build, con_out);
    if (ana->parsed()) return run_analyze(ana_build, req, ana_out);
    if (ver_cmd->parsed()) return run_verify(ver, ver_out);
    if (fac->parsed()) return run_factor(fac_q, fac_n, fac_cap, fac_out);
    if (cos->parsed()) return run_cosets(cos_q, cos_n, cos_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
