#pragma once

// Structured-text (JSON) file formats.
//
// Presentation:  {"name": "rp3", "n": 1, "B": [[2]], "c": [1]}
// Scheme:        {"base_size": 1, "B_full": [[2,0],[0,0]], "c_base": [1], "extras_c": [1]}
// Seifert:       {"name": "trefoil", "V": [[-1,1],[0,-1]]}
// Knot table:    {"unknot": [], "trefoil": [[-1,1],[0,-1]], ...}
//
// Integer entries are JSON integers; entries outside the 64-bit range are
// written (and accepted) as decimal strings. Unknown fields are rejected.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "spinkirby/invariants.hpp"
#include "spinkirby/presentation.hpp"

namespace spinkirby {

struct PresentationFile {
  std::optional<std::string> name;
  IntSymMatrix b;
  std::optional<BitVector> c;

  // The declared spin structure, or the unique one when c is absent.
  // Throws MissingCharacteristicVector otherwise.
  SpinPresentation spin_presentation() const;
};

// Throws ParseError (position = line for syntax errors), NotSymmetric,
// NotCharacteristic.
PresentationFile parse_presentation_file(std::string_view text);
SpinPresentation parse_presentation(std::string_view text);

std::string print_presentation(const SpinPresentation& p, const std::optional<std::string>& name = std::nullopt);
std::string print_presentation_file(const PresentationFile& f);

struct SchemeFile {
  std::optional<std::string> name;
  SurgeryScheme scheme;
};

// Throws ParseError, NotSymmetric, NotCharacteristic (base block), InvalidScheme.
SchemeFile parse_scheme_file(std::string_view text);

struct SeifertFile {
  std::optional<std::string> name;
  SeifertMatrix v;
};

// Throws ParseError, InvalidSeifertMatrix.
SeifertFile parse_seifert_file(std::string_view text);

using KnotTable = std::map<std::string, SeifertMatrix>;

KnotTable parse_knot_table(std::string_view text);
// The table shipped as data/knots.json, compiled in.
const std::string& builtin_knot_table_text();
const KnotTable& builtin_knot_table();
// Throws UnknownKnot.
const SeifertMatrix& lookup_knot(const KnotTable& table, const std::string& name);

// Throws InvalidArgument when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace spinkirby
