#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "nilcoh/cohomology.hpp"
#include "nilcoh/obstruction.hpp"
#include "nilcoh/rank1.hpp"

namespace nilcoh {

using Json = nlohmann::ordered_json;

// Command result envelope. Serialization is deterministic: insertion-order
// keys, rationals as "p/q" strings, no timestamps.
struct Report {
  std::string command;
  Json inputs;
  Json result;
  std::vector<std::string> warnings;
};

Json to_json(const Report& report);

std::string rational_str(const Rational& r);             // always "p/q"
std::string rational_approx(const Rational& r);          // "p/q (~ 1.2345)" for text tables

Json betti_to_json(const BettiProfile& profile);
Json algebra_to_json(const LieAlgebra& g);
Json graded_to_json(const GradedLieAlgebra& g);
Json obstruction_to_json(const ObstructionReport& report);
Json rank1_row_to_json(const Rank1Row& row);
Json rank1_table_to_json(const Rank1Params& params, const std::vector<Rank1Row>& rows);

void render_betti_text(std::ostream& out, const BettiProfile& profile);
void render_obstruction_text(std::ostream& out, const ObstructionReport& report);
void render_rank1_table_text(std::ostream& out, const Rank1Params& params,
                             const std::vector<Rank1Row>& rows);

}  // namespace nilcoh
