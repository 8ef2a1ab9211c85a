#include "spinkirby/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spinkirby/error.hpp"

namespace spinkirby {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": malformed input", line);
  }
}

void reject_unknown(const json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) field_error(item.key(), "unknown field");
}

Integer parse_integer(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<unsigned long>());
    return Integer(v.get<long>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    Integer out;
    const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                  [](char ch) { return ch >= '0' && ch <= '9'; });
    if (!digits || s == "-" || out.set_str(s, 10) != 0) field_error(field, "'" + s + "' is not an integer");
    return out;
  }
  field_error(field, "expected an integer");
}

std::vector<std::vector<Integer>> parse_square(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of rows");
  const std::size_t n = j.size();
  std::vector<std::vector<Integer>> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = j[r];
    const std::string where = field + "[" + std::to_string(r) + "]";
    if (!row.is_array()) field_error(where, "expected an array");
    if (row.size() != n)
      field_error(where, "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    std::vector<Integer> out;
    for (std::size_t c = 0; c < n; ++c) out.push_back(parse_integer(row[c], where + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(out));
  }
  return rows;
}

BitVector parse_bits(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array of 0/1");
  BitVector out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer() || (j[k] != 0 && j[k] != 1))
      field_error(field + "[" + std::to_string(k) + "]", "expected 0 or 1");
    out.set(k, j[k] == 1);
  }
  return out;
}

std::optional<std::string> parse_name(const json& j) {
  if (!j.contains("name")) return std::nullopt;
  if (!j["name"].is_string()) field_error("name", "expected a string");
  return j["name"].get<std::string>();
}

std::size_t parse_count(const json& j, const std::string& field) {
  if (!j.contains(field)) field_error(field, "missing");
  if (!j[field].is_number_unsigned() && !(j[field].is_number_integer() && j[field] == 0))
    field_error(field, "expected a non-negative integer");
  return j[field].get<std::size_t>();
}

std::string integer_literal(const Integer& x) {
  if (x.fits_slong_p()) return x.get_str();
  return "\"" + x.get_str() + "\"";
}

std::string bits_literal(const BitVector& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ", ";
    out += c[k] ? '1' : '0';
  }
  return out + "]";
}

}  // namespace

SpinPresentation PresentationFile::spin_presentation() const {
  if (c) return SpinPresentation::validate(b, *c);
  auto solutions = characteristic_solutions(b);
  if (solutions.nullity() != 0)
    throw Error(ErrorCode::MissingCharacteristicVector,
                "no characteristic vector given and the presentation has " + std::to_string(spin_count(b)) +
                    " spin structures");
  return SpinPresentation::validate(b, *solutions.particular);
}

PresentationFile parse_presentation_file(std::string_view text) {
  const json j = parse_json(text);
  reject_unknown(j, {"name", "n", "B", "c"});
  PresentationFile f;
  f.name = parse_name(j);
  const std::size_t n = parse_count(j, "n");
  if (!j.contains("B")) field_error("B", "missing");
  auto rows = parse_square(j["B"], "B");
  if (rows.size() != n) field_error("B", "has " + std::to_string(rows.size()) + " rows but n = " + std::to_string(n));
  f.b = IntSymMatrix::from_integer_rows(rows);
  if (j.contains("c")) {
    auto c = parse_bits(j["c"], "c");
    if (c.size() != n) field_error("c", "has length " + std::to_string(c.size()) + " but n = " + std::to_string(n));
    SpinPresentation::validate(f.b, c);
    f.c = std::move(c);
  }
  return f;
}

SpinPresentation parse_presentation(std::string_view text) {
  return parse_presentation_file(text).spin_presentation();
}

std::string print_presentation_file(const PresentationFile& f) {
  std::ostringstream os;
  os << "{\n";
  if (f.name) os << "  \"name\": " << json(*f.name).dump() << ",\n";
  const std::size_t n = f.b.size();
  os << "  \"n\": " << n << ",\n";
  os << "  \"B\": [";
  for (std::size_t i = 0; i < n; ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << integer_literal(f.b(i, j));
    os << "]";
  }
  os << (n ? "\n  ]" : "]");
  if (f.c) os << ",\n  \"c\": " << bits_literal(*f.c);
  os << "\n}\n";
  return os.str();
}

std::string print_presentation(const SpinPresentation& p, const std::optional<std::string>& name) {
  return print_presentation_file(PresentationFile{name, p.matrix(), p.characteristic()});
}

SchemeFile parse_scheme_file(std::string_view text) {
  const json j = parse_json(text);
  reject_unknown(j, {"name", "base_size", "B_full", "c_base", "extras_c"});
  const auto name = parse_name(j);
  const std::size_t n = parse_count(j, "base_size");
  if (!j.contains("B_full")) field_error("B_full", "missing");
  const auto full = IntSymMatrix::from_integer_rows(parse_square(j["B_full"], "B_full"));
  if (full.size() < n) field_error("B_full", "smaller than base_size");
  if (!j.contains("c_base")) field_error("c_base", "missing");
  auto c_base = parse_bits(j["c_base"], "c_base");
  if (c_base.size() != n) field_error("c_base", "length does not match base_size");

  std::vector<std::size_t> base_idx(n);
  for (std::size_t k = 0; k < n; ++k) base_idx[k] = k;
  auto base = SpinPresentation::validate(full.principal_submatrix(base_idx), std::move(c_base));

  std::optional<BitVector> extras_c;
  if (j.contains("extras_c")) {
    extras_c = parse_bits(j["extras_c"], "extras_c");
    if (extras_c->size() != full.size() - n) field_error("extras_c", "length does not match the number of extras");
  }
  return SchemeFile{name, SurgeryScheme::make(std::move(base), full, std::move(extras_c))};
}

namespace {

SeifertMatrix parse_seifert_value(const json& v, const std::string& field) {
  auto rows = parse_square(v, field);
  return SeifertMatrix::validate(IntMatrix::from_integer_rows(rows));
}

}  // namespace

SeifertFile parse_seifert_file(std::string_view text) {
  const json j = parse_json(text);
  reject_unknown(j, {"name", "V"});
  if (!j.contains("V")) field_error("V", "missing");
  return SeifertFile{parse_name(j), parse_seifert_value(j["V"], "V")};
}

KnotTable parse_knot_table(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "knot table must be an object");
  KnotTable table;
  for (const auto& item : j.items()) table.emplace(item.key(), parse_seifert_value(item.value(), item.key()));
  return table;
}

const std::string& builtin_knot_table_text() {
  static const std::string text = R"({
  "unknot": [],
  "trefoil": [[-1, 1], [0, -1]],
  "figure8": [[1, 1], [0, -1]]
}
)";
  return text;
}

const KnotTable& builtin_knot_table() {
  static const KnotTable table = parse_knot_table(builtin_knot_table_text());
  return table;
}

const SeifertMatrix& lookup_knot(const KnotTable& table, const std::string& name) {
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::UnknownKnot, "unknown knot '" + name + "'");
  return it->second;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace spinkirby
