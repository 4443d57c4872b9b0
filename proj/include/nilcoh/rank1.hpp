#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcoh/obstruction.hpp"
#include "nilcoh/rational.hpp"

namespace nilcoh {

class UnknownDegree : public Error {
public:
  explicit UnknownDegree(int j, const std::string& why)
      : Error(errc::unknown_degree,
              "filling degree for j = " + std::to_string(j) + " is not known: " + why),
        degree(j) {}
  int degree;
};

// Non-cocompact lattice in the isometry group of the hyperbolic space
// H^n_K. The coefficient field determines d = dim_R K and the curvature
// pinching (delta = -1 for R, -1/4 for C and H, so sqrt(-delta) is the
// exact rational 1 or 1/2). The octonionic plane is not supported.
enum class Rank1Field { real, complex, quaternion };

struct Rank1Params {
  Rank1Field field;
  int n;  // dimension over K, n >= 2

  int d() const;
  Rational sqrt_minus_delta() const;
  std::string field_name() const;  // "R", "C", "H"
};

Rank1Params make_rank1_params(Rank1Field field, int n);
std::optional<Rank1Field> rank1_field_from_string(std::string_view name);

// Conformal dimension of the boundary: d(n+1) - 2.
int confdim(const Rank1Params& p);

// deg cFV^j per the known tables:
//   R: j/(j-1) for j = 2..n-1, 1 at j = n;
//   C: j/(j-1) for j = 2..n-1, (n+1)/(n-1) at j = n, (j+1)/j for
//      j = n+1..2n-1, 1 at j = 2n;
//   H: j/(j-1) for j = 2..n-1, 1 at j = 4n; everything in between is not
//      known and raises UnknownDegree.
Rational rank1_filling_degree(const Rank1Params& p, int j);

// All known degrees as a FillingDegrees table; exact flag true.
FillingDegrees filling_degree_table(const Rank1Params& p);

// N_k as the product of the table degrees (UnknownDegree on gaps). Closed
// forms: R: N_k = k for k <= n-1, N_n = n-1; C: N_k = k for k <= n-1,
// k+1 for n <= k <= 2n-1, N_2n = 2n; H: N_k = k for k <= n-1.
Rational nk_rank1(const Rank1Params& p, int k);

// Largest k with a computable N_k: n for R, 2n for C, n-1 for H.
int max_known_k(const Rank1Params& p);

// 1 + ((dn - k - 1)/k) sqrt(-delta); requires dn - k - 1 > 0
// (errc::degree_too_high otherwise).
Rational pansu_bound(const Rank1Params& p, int k);

// Degree window of the vanishing corollary:
// R: 1 <= k <= n-2; C: 1 <= k < 2n-2; H: 1 <= k <= n-1.
bool in_vanishing_window(const Rank1Params& p, int k);

// min(confdim/N_k, pansu_bound), which must equal the corollary closed form
// (n-1)/k, (2n+k-1)/(2k) or (4n+k-1)/(2k); errc::degree_out_of_range
// outside the window, errc::internal_inconsistency if the min disagrees
// with the closed form.
Rational lp_vanishing_range(const Rank1Params& p, int k);

// confdim / N_k.
Rational induction_range(const Rank1Params& p, int k);

struct Rank1Row {
  int k = 0;
  Rational n_k;
  Rational induction;                 // confdim / N_k
  std::optional<Rational> pansu;      // absent when dn - k - 1 <= 0
  std::optional<Rational> vanishing;  // absent outside the corollary window
};

// Rows k = 1..max_known_k(p).
std::vector<Rank1Row> rank1_table(const Rank1Params& p);

}  // namespace nilcoh
