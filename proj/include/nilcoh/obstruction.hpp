#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcoh/cohomology.hpp"
#include "nilcoh/lie_algebra.hpp"

namespace nilcoh {

class MissingDegree : public Error {
public:
  explicit MissingDegree(int j)
      : Error(errc::missing_degree,
              "no filling degree supplied for j = " + std::to_string(j)),
        degree(j) {}
  int degree;
};

// Polynomial growth degrees of the combinatorial filling functions,
// deg cFV^j for j >= 2. `exact` records that the filling functions are
// known to be polynomial, not merely polynomially bounded, in which case
// downstream thresholds are attained rather than infima.
struct FillingDegrees {
  std::map<int, Rational> degrees;
  bool exact = false;

  bool has(int j) const { return degrees.count(j) > 0; }
  const Rational& at(int j) const;                // throws MissingDegree
  void set(int j, const Rational& degree);        // validates j >= 2, degree >= 1
  static FillingDegrees all_equal(const Rational& degree, int j_max, bool exact = true);
};

// N_1 = 1; N_k = prod_{j=2}^k deg cFV^j.
Rational nk_constant(const FillingDegrees& f, int k);

// The comparison-degree functions: alpha_1(N) = N + 1 and
//   alpha_i(N) = max{ (N+1) P_i, P_i + alpha_{i-1}(N) },  P_i = prod_{j<=i} deg cFV^j.
Rational alpha(const Rational& n_value, int i, const FillingDegrees& f);

// The non-hyperbolic closed form N^2 + (i-1) N, requiring N >= 2. It
// dominates the exact recursion whenever every running degree product is
// <= N (for i = 1 the recursion gives the smaller N + 1); it is the value
// quoted for CAT(0) degree profiles, where it evaluates to 2k^2 - 2k at
// N = N_k = k, i = k - 1.
Rational alpha_polynomial_bound(const Rational& n_value, int i);

// Growth degree of the group: Bass-Guivarc'h homogeneous dimension of the
// Carnot grading (ball-growth convention).
int growth_degree(const GradedLieAlgebra& g);

// Catalog default: degrees[2] = nilpotency class + 1 (the classical bound
// for the Dehn function of a class-c nilpotent group). Degrees for j >= 3
// are never defaulted; callers must supply them. `exact` is false.
FillingDegrees default_filling_degrees(const LieAlgebra& g, int k_max = 2);

// d * k + 2M + 1: mutually cobounded L^p-ME is obstructed for every
// p strictly above this value when the degree-k Betti numbers differ.
Rational lp_threshold(const Rational& d_growth, int k, const Rational& m_value);

struct TraceEntry {
  std::string name;
  Rational value;
  std::string formula;
};

struct ObstructionSide {
  std::string label;
  Eigen::Index dim = 0;
  int nilpotency_class = 0;
  std::vector<Eigen::Index> layer_dims;  // of the Carnotification
  BettiProfile betti;
  Rational n_k;           // N_k with this side's degrees
  Rational alpha_value;   // alpha_{k-1}(N) with this side's degrees
  Rational growth;        // growth degree used for this side
  Rational threshold;     // one-sided d_side * k + 2M + 1
};

struct ObstructionReport {
  ObstructionSide a, b;
  int k = 2;
  Rational n_value;       // N = max(N_k(a), N_k(b))
  Rational m_value;       // M = max of the two alpha_{k-1}(N)
  bool exact = false;     // true: threshold attained; false: infimum
  Rational d_growth;      // max of the two growth degrees
  Rational p_threshold;   // d_growth * k + 2M + 1
  bool obstructed = false;
  std::vector<TraceEntry> trace;
  std::vector<std::string> warnings;
};

// Pairwise comparison of two nilpotent Lie algebras at cohomology degree
// k >= 2. Symmetric in its two sides. Growth overrides replace the computed
// homogeneous dimensions when supplied.
ObstructionReport compare_groups(const LieAlgebra& a, const LieAlgebra& b, int k,
                                 const FillingDegrees& fa, const FillingDegrees& fb,
                                 const std::optional<Rational>& growth_override_a = std::nullopt,
                                 const std::optional<Rational>& growth_override_b = std::nullopt);

}  // namespace nilcoh
