// Command-line front end: Betti profiles, Carnotifications, L^p-ME
// obstruction reports and rank-1 lattice tables.
//
// Exit codes: 0 success (including NOT_OBSTRUCTED), 2 usage error,
// 3 validation error (Jacobi, nilpotency, parsing), 4 missing data
// (missing or unknown filling degrees).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nilcoh/catalog.hpp"
#include "nilcoh/cohomology.hpp"
#include "nilcoh/io.hpp"
#include "nilcoh/obstruction.hpp"
#include "nilcoh/rank1.hpp"
#include "nilcoh/report.hpp"

namespace {

using namespace nilcoh;

int exit_code_for(errc code) {
  switch (code) {
    case errc::unknown_family:
    case errc::index_out_of_range:
    case errc::degree_out_of_range:
    case errc::degree_too_high:
      return 2;
    case errc::missing_degree:
    case errc::unknown_degree:
      return 4;
    default:
      return 3;
  }
}

// "family:n" shorthand or a structure-constant file path.
LieAlgebra resolve_source(const std::string& source) {
  const std::size_t colon = source.rfind(':');
  if (colon != std::string::npos) {
    const std::string name = source.substr(0, colon);
    if (family_from_string(name)) {
      int n = 0;
      std::istringstream n_text(source.substr(colon + 1));
      if (!(n_text >> n) || !n_text.eof())
        fail(errc::unknown_family, "bad family parameter in '" + source + "'");
      return catalog(name, n).algebra;
    }
  }
  return load_structure_file(source);
}

LieAlgebra resolve_family_or_file(const std::string& family, int n, const std::string& file) {
  if (!family.empty() && !file.empty())
    fail(errc::unknown_family, "give either --family or --file, not both");
  if (!family.empty()) {
    if (n < 1) fail(errc::index_out_of_range, "--n must be a positive integer");
    return catalog(family, n).algebra;
  }
  if (!file.empty()) return load_structure_file(file);
  fail(errc::unknown_family, "a source is required: --family NAME --n N, or --file PATH");
}

// "2=7,3=9/2" (repeatable flag, comma-separated).
void parse_fill_spec(const std::vector<std::string>& specs, FillingDegrees& out) {
  for (const std::string& spec : specs) {
    std::istringstream items(spec);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        fail(errc::degree_out_of_range, "bad filling spec '" + item + "'; expected j=p/q");
      int j = 0;
      std::istringstream j_text(item.substr(0, eq));
      if (!(j_text >> j) || !j_text.eof())
        fail(errc::degree_out_of_range, "bad degree index in '" + item + "'");
      std::optional<Rational> deg = Rational::parse(item.substr(eq + 1));
      if (!deg) fail(errc::degree_out_of_range, "bad rational in '" + item + "'");
      out.set(j, *deg);
    }
  }
}

void emit(const Report& report, bool json, const std::string& text) {
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << text;
    for (const std::string& w : report.warnings) std::cout << "warning: " << w << "\n";
  }
}

struct BettiOptions {
  std::string family, file;
  int n = 0;
  bool json = false;
};

int run_betti(const BettiOptions& opt) {
  LieAlgebra g = resolve_family_or_file(opt.family, opt.n, opt.file);
  BettiProfile profile = betti_profile(g);

  Report report;
  report.command = "betti";
  if (!opt.family.empty()) {
    report.inputs["family"] = opt.family;
    report.inputs["n"] = opt.n;
  } else {
    report.inputs["file"] = opt.file;
  }
  report.result = betti_to_json(profile);

  std::ostringstream text;
  render_betti_text(text, profile);
  emit(report, opt.json, text.str());
  return 0;
}

struct GrOptions {
  std::string family, file;
  int n = 0;
  bool json = false;
};

int run_gr(const GrOptions& opt) {
  LieAlgebra g = resolve_family_or_file(opt.family, opt.n, opt.file);
  GradedLieAlgebra graded = carnotification(g);

  Report report;
  report.command = "gr";
  if (!opt.family.empty()) {
    report.inputs["family"] = opt.family;
    report.inputs["n"] = opt.n;
  } else {
    report.inputs["file"] = opt.file;
  }
  report.result = graded_to_json(graded);

  std::ostringstream text;
  write_structure_file(text, graded);
  emit(report, opt.json, text.str());
  return 0;
}

struct ObstructOptions {
  std::string source_a, source_b;
  int k = 2;
  std::vector<std::string> fill_a, fill_b;
  bool default_dehn = false;
  bool exact_filling = false;
  bool json = false;
  std::string growth_a, growth_b;
};

int run_obstruct(const ObstructOptions& opt) {
  LieAlgebra a = resolve_source(opt.source_a);
  LieAlgebra b = resolve_source(opt.source_b);

  FillingDegrees fa, fb;
  if (opt.default_dehn) {
    fa = default_filling_degrees(a);
    fb = default_filling_degrees(b);
  }
  parse_fill_spec(opt.fill_a, fa);
  parse_fill_spec(opt.fill_b, fb);
  if (opt.exact_filling) fa.exact = fb.exact = true;

  std::optional<Rational> growth_a, growth_b;
  if (!opt.growth_a.empty()) {
    growth_a = Rational::parse(opt.growth_a);
    if (!growth_a) fail(errc::degree_out_of_range, "bad --growth-a value");
  }
  if (!opt.growth_b.empty()) {
    growth_b = Rational::parse(opt.growth_b);
    if (!growth_b) fail(errc::degree_out_of_range, "bad --growth-b value");
  }

  ObstructionReport result = [&] {
    try {
      return compare_groups(a, b, opt.k, fa, fb, growth_a, growth_b);
    } catch (const MissingDegree& e) {
      fail(errc::missing_degree,
           std::string(e.what()) + "; supply --fill-a/--fill-b " + std::to_string(e.degree) +
               "=<p/q>");
    }
  }();

  Report report;
  report.command = "obstruct";
  report.inputs["a"] = opt.source_a;
  report.inputs["b"] = opt.source_b;
  report.inputs["k"] = opt.k;
  report.inputs["default_dehn"] = opt.default_dehn;
  report.inputs["exact_filling"] = opt.exact_filling;
  report.result = obstruction_to_json(result);
  report.warnings = result.warnings;

  std::ostringstream text;
  render_obstruction_text(text, result);
  emit(report, opt.json, text.str());
  return 0;
}

struct Rank1Options {
  std::string field;
  int n = 0;
  int k = 0;
  bool table = false;
  bool json = false;
};

int run_rank1(const Rank1Options& opt) {
  std::optional<Rank1Field> field = rank1_field_from_string(opt.field);
  if (!field)
    fail(errc::unknown_family, "unknown field '" + opt.field + "'; known: R, C, H");
  Rank1Params params = make_rank1_params(*field, opt.n);

  Report report;
  report.command = "rank1";
  report.inputs["field"] = params.field_name();
  report.inputs["n"] = params.n;

  std::ostringstream text;
  if (opt.table) {
    std::vector<Rank1Row> rows = rank1_table(params);
    report.inputs["table"] = true;
    report.result = rank1_table_to_json(params, rows);
    render_rank1_table_text(text, params, rows);
  } else {
    if (opt.k < 1) fail(errc::degree_out_of_range, "--k must be >= 1 (or use --table)");
    report.inputs["k"] = opt.k;
    Rank1Row row;
    row.k = opt.k;
    row.n_k = nk_rank1(params, opt.k);
    row.induction = induction_range(params, opt.k);
    if (params.d() * params.n - opt.k - 1 > 0) row.pansu = pansu_bound(params, opt.k);
    if (in_vanishing_window(params, opt.k)) row.vanishing = lp_vanishing_range(params, opt.k);
    Json result = rank1_row_to_json(row);
    result["field"] = params.field_name();
    result["n"] = params.n;
    result["confdim"] = confdim(params);
    report.result = std::move(result);

    text << "field " << params.field_name() << ", n = " << params.n << ", k = " << opt.k
         << ", confdim = " << confdim(params) << "\n";
    text << "N_k        : " << row.n_k.str() << "\n";
    text << "induction  : " << rational_approx(row.induction) << "\n";
    text << "pansu      : " << (row.pansu ? rational_approx(*row.pansu) : "-") << "\n";
    text << "vanishing  : "
         << (row.vanishing ? rational_approx(*row.vanishing) : "outside corollary range") << "\n";
  }
  emit(report, opt.json, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cohomology of nilpotent Lie algebras and L^p-ME obstruction constants"};
  app.require_subcommand(1);

  BettiOptions betti_opt;
  CLI::App* betti = app.add_subcommand("betti", "Betti profile of a nilpotent Lie algebra");
  betti->add_option("--family", betti_opt.family, "catalog family name");
  betti->add_option("--n", betti_opt.n, "family parameter");
  betti->add_option("--file", betti_opt.file, "structure-constant file");
  betti->add_flag("--json", betti_opt.json, "JSON output");

  GrOptions gr_opt;
  CLI::App* gr = app.add_subcommand("gr", "Carnotification (associated graded algebra)");
  gr->add_option("--family", gr_opt.family, "catalog family name");
  gr->add_option("--n", gr_opt.n, "family parameter");
  gr->add_option("--file", gr_opt.file, "structure-constant file");
  gr->add_flag("--json", gr_opt.json, "JSON output");

  ObstructOptions ob_opt;
  CLI::App* ob = app.add_subcommand("obstruct", "pairwise L^p-ME obstruction report");
  ob->add_option("--a", ob_opt.source_a, "first algebra: family:n or file")->required();
  ob->add_option("--b", ob_opt.source_b, "second algebra: family:n or file")->required();
  ob->add_option("--k", ob_opt.k, "cohomology degree (>= 2)")->required();
  ob->add_option("--fill-a", ob_opt.fill_a, "filling degrees for A, e.g. 2=7,3=9/2");
  ob->add_option("--fill-b", ob_opt.fill_b, "filling degrees for B");
  ob->add_flag("--default-dehn", ob_opt.default_dehn,
               "default degree 2 filling to nilpotency class + 1");
  ob->add_flag("--exact-filling", ob_opt.exact_filling,
               "treat filling functions as polynomial (attained threshold)");
  ob->add_option("--growth-a", ob_opt.growth_a, "override growth degree of A");
  ob->add_option("--growth-b", ob_opt.growth_b, "override growth degree of B");
  ob->add_flag("--json", ob_opt.json, "JSON output");

  Rank1Options r1_opt;
  CLI::App* r1 = app.add_subcommand("rank1", "rank-1 lattice constants");
  r1->add_option("--field", r1_opt.field, "R, C or H")->required();
  r1->add_option("--n", r1_opt.n, "hyperbolic dimension over the field")->required();
  r1->add_option("--k", r1_opt.k, "cohomology degree");
  r1->add_flag("--table", r1_opt.table, "emit the full table of admissible k");
  r1->add_flag("--json", r1_opt.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[USAGE]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*betti) return run_betti(betti_opt);
    if (*gr) return run_gr(gr_opt);
    if (*ob) return run_obstruct(ob_opt);
    if (*r1) return run_rank1(r1_opt);
  } catch (const nilcoh::Error& e) {
    std::cerr << "error[" << nilcoh::errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error[INTERNAL]: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
