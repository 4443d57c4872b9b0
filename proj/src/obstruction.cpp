#include "nilcoh/obstruction.hpp"

#include <algorithm>

namespace nilcoh {

const Rational& FillingDegrees::at(int j) const {
  auto it = degrees.find(j);
  if (it == degrees.end()) throw MissingDegree(j);
  return it->second;
}

void FillingDegrees::set(int j, const Rational& degree) {
  if (j < 2) fail(errc::degree_out_of_range, "filling degrees start at j = 2");
  if (degree < Rational(1))
    fail(errc::degree_out_of_range, "filling degree for j = " + std::to_string(j) +
                                        " must be >= 1, got " + degree.str());
  degrees[j] = degree;
}

FillingDegrees FillingDegrees::all_equal(const Rational& degree, int j_max, bool exact) {
  FillingDegrees f;
  f.exact = exact;
  for (int j = 2; j <= j_max; ++j) f.set(j, degree);
  return f;
}

Rational nk_constant(const FillingDegrees& f, int k) {
  if (k < 1) fail(errc::degree_out_of_range, "N_k requires k >= 1");
  Rational product(1);
  for (int j = 2; j <= k; ++j) product *= f.at(j);
  return product;
}

Rational alpha(const Rational& n_value, int i, const FillingDegrees& f) {
  if (i < 1) fail(errc::degree_out_of_range, "alpha requires i >= 1");
  Rational value = n_value + Rational(1);
  Rational running_product(1);
  for (int step = 2; step <= i; ++step) {
    running_product *= f.at(step);
    value = std::max((n_value + Rational(1)) * running_product, running_product + value);
  }
  return value;
}

Rational alpha_polynomial_bound(const Rational& n_value, int i) {
  if (i < 1) fail(errc::degree_out_of_range, "alpha requires i >= 1");
  if (n_value < Rational(2))
    fail(errc::degree_out_of_range,
         "the closed form N^2 + (i-1)N requires N >= 2, got N = " + n_value.str());
  return n_value * n_value + Rational(i - 1) * n_value;
}

int growth_degree(const GradedLieAlgebra& g) { return homogeneous_dimension(g); }

FillingDegrees default_filling_degrees(const LieAlgebra& g, int k_max) {
  if (k_max < 2) fail(errc::degree_out_of_range, "k_max must be >= 2");
  FillingDegrees f;
  f.exact = false;
  f.set(2, Rational(nilpotency_class(g) + 1));
  return f;
}

Rational lp_threshold(const Rational& d_growth, int k, const Rational& m_value) {
  return d_growth * Rational(k) + Rational(2) * m_value + Rational(1);
}

namespace {

ObstructionSide make_side(const LieAlgebra& g, int k, const FillingDegrees& f,
                          const Rational& common_n, const std::optional<Rational>& growth_override) {
  ObstructionSide side;
  side.label = g.label();
  side.dim = g.dim();
  side.nilpotency_class = nilpotency_class(g);
  GradedLieAlgebra graded = carnotification(g);
  side.layer_dims = graded.layer_dims();
  side.betti = betti_profile(g);
  side.n_k = nk_constant(f, k);
  side.alpha_value = alpha(common_n, k - 1, f);
  side.growth = growth_override ? *growth_override : Rational(growth_degree(graded));
  return side;
}

void push(std::vector<TraceEntry>& trace, std::string name, Rational value, std::string formula) {
  trace.push_back({std::move(name), std::move(value), std::move(formula)});
}

}  // namespace

ObstructionReport compare_groups(const LieAlgebra& a, const LieAlgebra& b, int k,
                                 const FillingDegrees& fa, const FillingDegrees& fb,
                                 const std::optional<Rational>& growth_override_a,
                                 const std::optional<Rational>& growth_override_b) {
  if (k < 2) fail(errc::degree_out_of_range, "comparison degree k must be >= 2");

  ObstructionReport report;
  report.k = k;
  report.exact = fa.exact && fb.exact;

  const Rational nk_a = nk_constant(fa, k);
  const Rational nk_b = nk_constant(fb, k);
  report.n_value = std::max(nk_a, nk_b);

  report.a = make_side(a, k, fa, report.n_value, growth_override_a);
  report.b = make_side(b, k, fb, report.n_value, growth_override_b);

  report.m_value = std::max(report.a.alpha_value, report.b.alpha_value);
  report.d_growth = std::max(report.a.growth, report.b.growth);
  report.a.threshold = lp_threshold(report.a.growth, k, report.m_value);
  report.b.threshold = lp_threshold(report.b.growth, k, report.m_value);
  report.p_threshold = lp_threshold(report.d_growth, k, report.m_value);
  report.obstructed = report.a.betti.b(k) != report.b.betti.b(k);

  auto& t = report.trace;
  push(t, "N_k(A)", report.a.n_k, "prod_{j=2}^{k} deg cFV^j of A");
  push(t, "N_k(B)", report.b.n_k, "prod_{j=2}^{k} deg cFV^j of B");
  push(t, "N", report.n_value, "max(N_k(A), N_k(B))");
  push(t, "alpha_{k-1}(N; A)", report.a.alpha_value, "alpha recursion with A's degrees");
  push(t, "alpha_{k-1}(N; B)", report.b.alpha_value, "alpha recursion with B's degrees");
  push(t, "M", report.m_value, "max of the two alpha values");
  push(t, "d(A)", report.a.growth,
       growth_override_a ? "user-supplied growth degree" : "homogeneous dimension of gr(A)");
  push(t, "d(B)", report.b.growth,
       growth_override_b ? "user-supplied growth degree" : "homogeneous dimension of gr(B)");
  push(t, "d", report.d_growth, "max(d(A), d(B))");
  push(t, "p(A)", report.a.threshold, "d(A)*k + 2M + 1");
  push(t, "p(B)", report.b.threshold, "d(B)*k + 2M + 1");
  push(t, "p_threshold", report.p_threshold, "d*k + 2M + 1");
  push(t, "b_k(A)", Rational(report.a.betti.b(k)), "Betti number of A in degree k");
  push(t, "b_k(B)", Rational(report.b.betti.b(k)), "Betti number of B in degree k");

  if (!report.exact)
    report.warnings.push_back(
        "filling degrees are polynomial bounds only: the threshold is an infimum, not attained");
  return report;
}

}  // namespace nilcoh
