#include "nilcoh/io.hpp"

#include <fstream>
#include <sstream>

namespace nilcoh {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

LieAlgebra parse_structure_file(std::istream& in, std::string label) {
  std::string line;
  std::size_t line_no = 0;
  long dim = -1;
  std::vector<StructureEntry> entries;
  std::vector<std::size_t> entry_lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only

    if (dim < 0) {
      if (first != "dim") parse_fail(line_no, "expected 'dim N' before any entries");
      if (!(fields >> dim) || dim < 1) parse_fail(line_no, "invalid dimension");
      std::string extra;
      if (fields >> extra) parse_fail(line_no, "trailing data after the dim line");
      continue;
    }

    long i = 0, j = 0, k = 0;
    std::string value;
    std::istringstream entry_fields(line);
    if (!(entry_fields >> i >> j >> k >> value))
      parse_fail(line_no, "expected 'i j k p/q'");
    std::string extra;
    if (entry_fields >> extra) parse_fail(line_no, "trailing data after the entry");
    if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim)
      parse_fail(line_no, "index out of range 1.." + std::to_string(dim));
    if (!(i < j)) parse_fail(line_no, "entries require i < j");
    std::optional<Rational> c = Rational::parse(value);
    if (!c) parse_fail(line_no, "invalid rational '" + value + "'");
    entries.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), static_cast<int>(k - 1),
                       *c});
    entry_lines.push_back(line_no);
  }
  if (dim < 0) fail(errc::parse_error, "missing 'dim N' line");

  // Report duplicates with the offending line number.
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a + 1; b < entries.size(); ++b)
      if (entries[a].i == entries[b].i && entries[a].j == entries[b].j &&
          entries[a].k == entries[b].k)
        parse_fail(entry_lines[b], "duplicate entry for (i, j, k)");

  return from_structure_constants(dim, entries, std::move(label));
}

LieAlgebra load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return parse_structure_file(in, path);
}

void write_structure_file(std::ostream& out, const LieAlgebra& g) {
  out << "# " << g.label() << "\n";
  out << "dim " << g.dim() << "\n";
  for (const StructureEntry& e : g.entries())
    out << e.i + 1 << " " << e.j + 1 << " " << e.k + 1 << " " << e.c.str() << "\n";
}

void write_structure_file(std::ostream& out, const GradedLieAlgebra& g) {
  out << "# " << g.algebra().label() << "\n";
  out << "# layers:";
  for (Eigen::Index d : g.layer_dims()) out << " " << d;
  out << "\n";
  out << "dim " << g.algebra().dim() << "\n";
  for (const StructureEntry& e : g.algebra().entries())
    out << e.i + 1 << " " << e.j + 1 << " " << e.k + 1 << " " << e.c.str() << "\n";
}

}  // namespace nilcoh
