// regmap: construct, analyze, enumerate and verify regular maps whose
// automorphism groups are 2-groups.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "regmaps/census.hpp"
#include "regmaps/map_analysis.hpp"
#include "regmaps/perm.hpp"
#include "regmaps/presentation.hpp"
#include "regmaps/schreier.hpp"
#include "regmaps/todd_coxeter.hpp"
#include "regmaps/verify.hpp"

namespace {

using namespace regmaps;

struct InputSpec {
  std::string preset_name;
  std::string file;
  int n = -1, s = -1, t = -1;
};

void add_input_options(CLI::App* cmd, InputSpec* in) {
  cmd->add_option("--preset", in->preset_name,
                  "preset family (delta, dihedral, c2xd, thm32_case1/2/3, prop28_L, G1..G6, "
                  "H1..H6)");
  cmd->add_option("--file", in->file, "presentation file (one relator per line)");
  cmd->add_option("--n", in->n, "order exponent parameter");
  cmd->add_option("--s", in->s, "face-length exponent parameter");
  cmd->add_option("--t", in->t, "valency exponent parameter");
}

Presentation resolve_input(const InputSpec& in) {
  if (!in.preset_name.empty() && !in.file.empty())
    throw CLI::ValidationError("--preset and --file are mutually exclusive");
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw std::runtime_error("cannot read " + in.file);
    std::ostringstream text;
    text << f.rdbuf();
    return presentation_from_text(text.str());
  }
  if (in.preset_name.empty()) throw CLI::ValidationError("need --preset or --file");
  std::vector<long> params;
  if (in.preset_name == "delta") {
    // no parameters
  } else if (in.preset_name == "thm32_case1" || in.preset_name == "thm32_case2") {
    params = {in.n, in.s, in.t};
  } else if (in.preset_name == "thm32_case3") {
    params = {in.n, in.t};
  } else {
    params = {in.n};
  }
  for (long p : params)
    if (p < 0) throw CLI::ValidationError("preset " + in.preset_name + " needs more parameters");
  return preset(in.preset_name, params);
}

void print_orders(const CosetTable& table) {
  std::cout << "order " << table.size() << "\n"
            << "o(r0r1) " << element_order(table, {kR0, kR1}) << "\n"
            << "o(r1r2) " << element_order(table, {kR1, kR2}) << "\n"
            << "o(r0r2) " << element_order(table, {kR0, kR2}) << "\n";
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports)
    if (r.status == VerifyStatus::kFail) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular maps with 2-group automorphism groups"};
  app.require_subcommand(1);

  InputSpec in;
  uint32_t max_cosets = EnumerationLimits{}.max_cosets;
  app.add_option("--max-cosets", max_cosets, "coset enumeration limit")->capture_default_str();

  auto* cmd_order = app.add_subcommand("order", "group order and generator-pair orders");
  add_input_options(cmd_order, &in);

  auto* cmd_analyze = app.add_subcommand("analyze", "map invariants of a proper quotient");
  add_input_options(cmd_analyze, &in);

  auto* cmd_dual = app.add_subcommand("dual", "invariants of the dual map");
  add_input_options(cmd_dual, &in);

  auto* cmd_census = app.add_subcommand("census", "enumerate all 2-group quotients by order");
  int max_exp = 6;
  std::string out_dir;
  bool resume = false;
  int threads = 1;
  cmd_census->add_option("--max-exp", max_exp, "largest order exponent")->capture_default_str();
  cmd_census->add_option("--out", out_dir, "output directory for level files");
  cmd_census->add_flag("--resume", resume, "reuse completed levels in --out");
  cmd_census->add_option("--threads", threads, "worker threads")->capture_default_str();

  auto* cmd_crosscheck = app.add_subcommand("crosscheck", "compare census counts with a CSV file");
  std::string counts_file, census_dir;
  cmd_crosscheck->add_option("counts", counts_file, "CSV with lines order_exp,count")->required();
  cmd_crosscheck->add_option("--census-dir", census_dir, "directory with census level files")
      ->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a theorem-level check");
  std::string claim, report_file;
  int max_n = 8;
  bool grid = false;
  cmd_verify
      ->add_option("claim", claim,
                   "thm32 | thm33 | conjecture34 | classification | lemma31 | lemma42 | "
                   "thm43-perms")
      ->required();
  add_input_options(cmd_verify, &in);
  cmd_verify->add_flag("--all", grid, "thm32: run the whole legal (s,t) grid");
  cmd_verify->add_option("--max-n", max_n, "conjecture34: census depth")->capture_default_str();
  cmd_verify->add_option("--census-dir", census_dir,
                         "load the census from this directory instead of recomputing");
  cmd_verify->add_option("--report", report_file, "also write the report lines to this file");

  CLI11_PARSE(app, argc, argv);
  EnumerationLimits limits{max_cosets};

  try {
    if (*cmd_order) {
      print_orders(todd_coxeter(resolve_input(in), {}, limits));
      return 0;
    }
    if (*cmd_analyze || *cmd_dual) {
      CosetTable table = todd_coxeter(resolve_input(in), {}, limits);
      if (*cmd_dual) table = dual(table);
      CanonicalTable canon = canonicalize(table);
      std::cout << record_to_string(analyze(canon.table)) << "\n"
                << "frattini_rank " << frattini_rank(canon.table) << "\n"
                << "canonical_key_digest " << canon.digest() << "\n";
      return 0;
    }
    if (*cmd_census) {
      CensusOptions opts;
      opts.threads = threads;
      opts.out_dir = out_dir;
      opts.resume = resume;
      opts.verbose = true;
      Census c = run_census(max_exp, opts);
      std::cout << "order_exp,groups,proper_maps\n";
      for (const CensusLevel& lvl : c.levels)
        std::cout << lvl.order_exp << ',' << lvl.nodes.size() << ',' << lvl.proper_count()
                  << '\n';
      return 0;
    }
    if (*cmd_crosscheck) {
      Census c = load_census(census_dir);
      CrosscheckResult res = crosscheck_counts(c, counts_file);
      std::cout << (res.status == CrosscheckStatus::kOk
                        ? "ok"
                        : res.status == CrosscheckStatus::kMissing ? "missing" : "mismatch")
                << ": " << res.detail << "\n";
      return res.status == CrosscheckStatus::kOk ? 0 : 1;
    }
    if (*cmd_verify) {
      std::vector<VerificationReport> reports;
      auto census_for = [&](int upto) {
        if (!census_dir.empty()) {
          Census c = load_census(census_dir, upto);
          if (c.max_exp() < upto)
            throw std::runtime_error("census in " + census_dir + " stops at order 2^" +
                                     std::to_string(c.max_exp()));
          return c;
        }
        CensusOptions opts;
        opts.verbose = true;
        return run_census(upto, opts);
      };
      if (claim == "thm32") {
        if (in.n < 0) throw CLI::ValidationError("thm32 needs --n");
        if (grid)
          reports = verify_thm32_grid(in.n, limits);
        else
          reports.push_back(verify_thm32(in.n, in.s, in.t, limits));
      } else if (claim == "thm33") {
        if (in.n < 0 || in.s < 0 || in.t < 0)
          throw CLI::ValidationError("thm33 needs --n, --s, --t");
        reports.push_back(verify_nonexistence(in.n, in.s, in.t, census_for(in.n)));
      } else if (claim == "conjecture34") {
        reports.push_back(verify_conjecture34(census_for(max_n), max_n));
      } else if (claim == "classification") {
        if (in.n < 0) throw CLI::ValidationError("classification needs --n");
        reports.push_back(verify_classification(in.n, census_for(in.n),
                                                ClassificationClass::kBoth, limits));
      } else if (claim == "lemma31") {
        reports.push_back(verify_lemma31(todd_coxeter(resolve_input(in), {}, limits)));
      } else if (claim == "lemma42") {
        reports.push_back(verify_lemma42(todd_coxeter(resolve_input(in), {}, limits)));
      } else if (claim == "thm43-perms") {
        if (in.n < 0) throw CLI::ValidationError("thm43-perms needs --n");
        reports.push_back(verify_thm43_perms(in.n));
      } else {
        throw CLI::ValidationError("unknown claim: " + claim);
      }
      std::string summary = report_summary(reports);
      std::cout << summary;
      if (!report_file.empty()) {
        std::ofstream f(report_file);
        f << summary;
      }
      return exit_code(reports);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
