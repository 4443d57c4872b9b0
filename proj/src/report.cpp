#include "nilcoh/report.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nilcoh {

std::string rational_str(const Rational& r) { return r.str_slash(); }

std::string rational_approx(const Rational& r) {
  if (r.is_integer()) return r.str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", r.to_double());
  return r.str() + " (~ " + buf + ")";
}

Json to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["inputs"] = report.inputs;
  j["result"] = report.result;
  j["warnings"] = report.warnings;
  return j;
}

Json betti_to_json(const BettiProfile& profile) {
  Json j;
  j["label"] = profile.algebra_label;
  j["n"] = profile.cochain_dims.size() - 1;
  j["dims"] = profile.cochain_dims;
  j["ranks"] = profile.differential_ranks;
  j["betti"] = profile.betti;
  return j;
}

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["label"] = g.label();
  j["dim"] = g.dim();
  Json entries = Json::array();
  for (const StructureEntry& e : g.entries()) {
    Json entry;
    entry["i"] = e.i + 1;
    entry["j"] = e.j + 1;
    entry["k"] = e.k + 1;
    entry["c"] = rational_str(e.c);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json graded_to_json(const GradedLieAlgebra& g) {
  Json j = algebra_to_json(g.algebra());
  j["layer_dims"] = g.layer_dims();
  return j;
}

namespace {

Json side_to_json(const ObstructionSide& side) {
  Json j;
  j["label"] = side.label;
  j["dim"] = side.dim;
  j["class"] = side.nilpotency_class;
  j["layer_dims"] = side.layer_dims;
  j["betti"] = side.betti.betti;
  j["N_k"] = rational_str(side.n_k);
  j["alpha"] = rational_str(side.alpha_value);
  j["growth_degree"] = rational_str(side.growth);
  j["one_sided_threshold"] = rational_str(side.threshold);
  return j;
}

}  // namespace

Json obstruction_to_json(const ObstructionReport& report) {
  Json j;
  j["k"] = report.k;
  j["a"] = side_to_json(report.a);
  j["b"] = side_to_json(report.b);
  j["N"] = rational_str(report.n_value);
  j["M"] = rational_str(report.m_value);
  j["exact"] = report.exact;
  j["d_growth"] = rational_str(report.d_growth);
  j["p_threshold"] = rational_str(report.p_threshold);
  j["verdict"] = report.obstructed ? "OBSTRUCTED" : "NOT_OBSTRUCTED";
  Json trace = Json::array();
  for (const TraceEntry& t : report.trace) {
    Json entry;
    entry["name"] = t.name;
    entry["value"] = rational_str(t.value);
    entry["formula"] = t.formula;
    trace.push_back(std::move(entry));
  }
  j["trace"] = std::move(trace);
  return j;
}

Json rank1_row_to_json(const Rank1Row& row) {
  Json j;
  j["k"] = row.k;
  j["N_k"] = rational_str(row.n_k);
  j["induction_range"] = rational_str(row.induction);
  if (row.pansu)
    j["pansu_bound"] = rational_str(*row.pansu);
  else
    j["pansu_bound"] = nullptr;
  if (row.vanishing) {
    j["vanishing_range"] = rational_str(*row.vanishing);
    j["in_corollary_range"] = true;
  } else {
    j["vanishing_range"] = nullptr;
    j["in_corollary_range"] = false;
  }
  return j;
}

Json rank1_table_to_json(const Rank1Params& params, const std::vector<Rank1Row>& rows) {
  Json j;
  j["field"] = params.field_name();
  j["n"] = params.n;
  j["confdim"] = confdim(params);
  Json table = Json::array();
  for (const Rank1Row& row : rows) table.push_back(rank1_row_to_json(row));
  j["rows"] = std::move(table);
  return j;
}

void render_betti_text(std::ostream& out, const BettiProfile& profile) {
  const std::size_t n = profile.betti.size() - 1;
  out << "algebra : " << profile.algebra_label << "  (dim " << n << ")\n";
  auto row = [&](const char* name, const std::vector<Eigen::Index>& values) {
    out << std::left << std::setw(9) << name << ":";
    for (Eigen::Index v : values) out << " " << v;
    out << "\n";
  };
  std::vector<Eigen::Index> ks;
  for (std::size_t k = 0; k <= n; ++k) ks.push_back(static_cast<Eigen::Index>(k));
  row("k", ks);
  row("dim", profile.cochain_dims);
  row("rank d_k", profile.differential_ranks);
  row("betti", profile.betti);
}

void render_obstruction_text(std::ostream& out, const ObstructionReport& report) {
  auto side = [&](const char* tag, const ObstructionSide& s) {
    out << tag << ": " << s.label << "  dim " << s.dim << ", class " << s.nilpotency_class
        << ", gr layers (";
    for (std::size_t i = 0; i < s.layer_dims.size(); ++i)
      out << (i ? ", " : "") << s.layer_dims[i];
    out << ")\n   betti:";
    for (Eigen::Index b : s.betti.betti) out << " " << b;
    out << "\n";
  };
  side("A", report.a);
  side("B", report.b);
  out << "k = " << report.k << ", b_k(A) = " << report.a.betti.b(report.k)
      << ", b_k(B) = " << report.b.betti.b(report.k) << "\n";
  out << "trace:\n";
  for (const TraceEntry& t : report.trace)
    out << "  " << std::left << std::setw(20) << t.name << " = " << std::setw(16)
        << rational_approx(t.value) << "  [" << t.formula << "]\n";
  out << "p_threshold = " << rational_approx(report.p_threshold)
      << (report.exact ? "" : "  (infimum, not attained)") << "\n";
  out << "verdict: " << (report.obstructed ? "OBSTRUCTED" : "NOT_OBSTRUCTED");
  if (report.obstructed)
    out << "  (no mutually cobounded L^p-ME for p > " << rational_approx(report.p_threshold)
        << ")";
  out << "\n";
}

void render_rank1_table_text(std::ostream& out, const Rank1Params& params,
                             const std::vector<Rank1Row>& rows) {
  out << "field " << params.field_name() << ", n = " << params.n
      << ", confdim = " << confdim(params) << "\n";
  out << std::left << std::setw(4) << "k" << std::setw(8) << "N_k" << std::setw(22) << "induction"
      << std::setw(22) << "pansu" << std::setw(22) << "vanishing" << "\n";
  for (const Rank1Row& row : rows) {
    out << std::left << std::setw(4) << row.k << std::setw(8) << row.n_k.str() << std::setw(22)
        << rational_approx(row.induction) << std::setw(22)
        << (row.pansu ? rational_approx(*row.pansu) : "-") << std::setw(22)
        << (row.vanishing ? rational_approx(*row.vanishing) : "outside corollary range") << "\n";
  }
}

}  // namespace nilcoh
