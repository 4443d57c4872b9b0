#include "nilcoh/rank1.hpp"

namespace nilcoh {

int Rank1Params::d() const {
  switch (field) {
    case Rank1Field::real: return 1;
    case Rank1Field::complex: return 2;
    case Rank1Field::quaternion: return 4;
  }
  return 0;
}

Rational Rank1Params::sqrt_minus_delta() const {
  return field == Rank1Field::real ? Rational(1) : Rational(1, 2);
}

std::string Rank1Params::field_name() const {
  switch (field) {
    case Rank1Field::real: return "R";
    case Rank1Field::complex: return "C";
    case Rank1Field::quaternion: return "H";
  }
  return "?";
}

Rank1Params make_rank1_params(Rank1Field field, int n) {
  if (n < 2) fail(errc::index_out_of_range, "hyperbolic dimension n must be >= 2");
  return Rank1Params{field, n};
}

std::optional<Rank1Field> rank1_field_from_string(std::string_view name) {
  if (name == "R" || name == "r" || name == "real") return Rank1Field::real;
  if (name == "C" || name == "c" || name == "complex") return Rank1Field::complex;
  if (name == "H" || name == "h" || name == "quaternion") return Rank1Field::quaternion;
  return std::nullopt;
}

int confdim(const Rank1Params& p) { return p.d() * (p.n + 1) - 2; }

Rational rank1_filling_degree(const Rank1Params& p, int j) {
  const int n = p.n;
  if (j < 2) fail(errc::degree_out_of_range, "filling degrees start at j = 2");
  switch (p.field) {
    case Rank1Field::real:
      if (j <= n - 1) return Rational(j, j - 1);
      if (j == n) return Rational(1);
      throw UnknownDegree(j, "real case degrees are stated for j <= n only");
    case Rank1Field::complex:
      if (j <= n - 1) return Rational(j, j - 1);
      if (j == n) return Rational(n + 1, n - 1);
      if (j <= 2 * n - 1) return Rational(j + 1, j);
      if (j == 2 * n) return Rational(1);
      throw UnknownDegree(j, "complex case degrees are stated for j <= 2n only");
    case Rank1Field::quaternion:
      if (j <= n - 1) return Rational(j, j - 1);
      if (j == 4 * n) return Rational(1);
      throw UnknownDegree(j, "no computations are known for quaternionic degrees n..4n-1");
  }
  fail(errc::internal_inconsistency, "unhandled field");
}

FillingDegrees filling_degree_table(const Rank1Params& p) {
  FillingDegrees f;
  f.exact = true;
  const int top = p.field == Rank1Field::quaternion ? 4 * p.n
                  : p.field == Rank1Field::complex  ? 2 * p.n
                                                    : p.n;
  for (int j = 2; j <= top; ++j) {
    if (p.field == Rank1Field::quaternion && j >= p.n && j < 4 * p.n) continue;
    f.set(j, rank1_filling_degree(p, j));
  }
  return f;
}

Rational nk_rank1(const Rank1Params& p, int k) {
  if (k < 1) fail(errc::degree_out_of_range, "N_k requires k >= 1");
  Rational product(1);
  for (int j = 2; j <= k; ++j) product *= rank1_filling_degree(p, j);
  return product;
}

int max_known_k(const Rank1Params& p) {
  switch (p.field) {
    case Rank1Field::real: return p.n;
    case Rank1Field::complex: return 2 * p.n;
    case Rank1Field::quaternion: return p.n - 1;
  }
  return 0;
}

Rational pansu_bound(const Rank1Params& p, int k) {
  if (k < 1) fail(errc::degree_out_of_range, "pansu_bound requires k >= 1");
  const int numerator = p.d() * p.n - k - 1;
  if (numerator <= 0)
    fail(errc::degree_too_high,
         "the vanishing bound requires dn - k - 1 > 0, got " + std::to_string(numerator));
  return Rational(1) + Rational(numerator, k) * p.sqrt_minus_delta();
}

bool in_vanishing_window(const Rank1Params& p, int k) {
  if (k < 1) return false;
  switch (p.field) {
    case Rank1Field::real: return k <= p.n - 2;
    case Rank1Field::complex: return k < 2 * p.n - 2;
    case Rank1Field::quaternion: return k <= p.n - 1;
  }
  return false;
}

Rational lp_vanishing_range(const Rank1Params& p, int k) {
  if (!in_vanishing_window(p, k))
    fail(errc::degree_out_of_range,
         "k = " + std::to_string(k) + " is outside the corollary window for K = " +
             p.field_name() + ", n = " + std::to_string(p.n));
  const Rational value = std::min(induction_range(p, k), pansu_bound(p, k));

  Rational closed_form;
  switch (p.field) {
    case Rank1Field::real: closed_form = Rational(p.n - 1, k); break;
    case Rank1Field::complex: closed_form = Rational(2 * p.n + k - 1, 2 * k); break;
    case Rank1Field::quaternion: closed_form = Rational(4 * p.n + k - 1, 2 * k); break;
  }
  if (value != closed_form)
    fail(errc::internal_inconsistency,
         "vanishing range " + value.str() + " disagrees with the closed form " +
             closed_form.str());
  return value;
}

Rational induction_range(const Rank1Params& p, int k) {
  return Rational(confdim(p)) / nk_rank1(p, k);
}

std::vector<Rank1Row> rank1_table(const Rank1Params& p) {
  std::vector<Rank1Row> rows;
  for (int k = 1; k <= max_known_k(p); ++k) {
    Rank1Row row;
    row.k = k;
    row.n_k = nk_rank1(p, k);
    row.induction = induction_range(p, k);
    if (p.d() * p.n - k - 1 > 0) row.pansu = pansu_bound(p, k);
    if (in_vanishing_window(p, k)) row.vanishing = lp_vanishing_range(p, k);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nilcoh
