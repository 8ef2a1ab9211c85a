#include <filesystem>

#include "doctest.h"
#include "spinkirby/error.hpp"
#include "spinkirby/io.hpp"

using namespace spinkirby;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse_presentation examples") {
  const auto rp3 = parse_presentation(R"({"n":1,"B":[[2]],"c":[1]})");
  CHECK(rp3.matrix() == IntSymMatrix::from_rows({{2}}));
  CHECK(rp3.characteristic() == BitVector::from_string("1"));
  CHECK(parse_presentation(R"({"n":0,"B":[]})") == SpinPresentation());
  CHECK(code_of([] { parse_presentation(R"({"n":1,"B":[[1]],"c":[0]})"); }) == ErrorCode::NotCharacteristic);
}

TEST_CASE("parse errors distinguish syntax from mathematics") {
  CHECK(code_of([] { parse_presentation_file(R"({"n":2,"B":[[1,2],[3,1]]})"); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([] { parse_presentation_file(R"({"n":2,"B":[[1,0],[0]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file(R"({"n":2,"B":[[1]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file(R"({"n":1,"B":[[1.5]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file(R"({"n":1,"B":[[1]],"c":[2]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file(R"({"n":1,"B":[[1]],"c":[1,0]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file(R"({"n":-1,"B":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file(R"({"B":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file(R"({"n":0,"B":[],"extra":1})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_presentation_file("[1, 2]"); }) == ErrorCode::ParseError);
  try {
    parse_presentation_file("{\n  \"n\": 1,\n  \"B\": [[2]\n}\n");
    FAIL("accepted malformed input");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.position() == std::optional<std::size_t>(4));
  }
}

TEST_CASE("missing characteristic vector") {
  const auto f = parse_presentation_file(R"({"n":1,"B":[[3]]})");
  CHECK_FALSE(f.c.has_value());
  CHECK(f.spin_presentation().characteristic() == BitVector::from_string("1"));
  const auto g = parse_presentation_file(R"({"n":1,"B":[[2]]})");
  CHECK(code_of([&] { g.spin_presentation(); }) == ErrorCode::MissingCharacteristicVector);
}

TEST_CASE("big entries round trip as strings") {
  IntSymMatrix b(2);
  b.set(0, 0, Integer("123456789012345678901234567890"));
  b.set(0, 1, Integer("-98765432109876543210"));
  b.set(1, 1, 2);
  const auto p = SpinPresentation::validate(b, BitVector::from_string("00"));
  const auto text = print_presentation(p, "big");
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(parse_presentation(text) == p);
  CHECK(code_of([] { parse_presentation_file(R"({"n":1,"B":[["12x"]]})"); }) == ErrorCode::ParseError);
}

TEST_CASE("corpus files are printed canonically") {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SPINKIRBY_DATA_DIR "/corpus")) {
    const auto text = read_text_file(entry.path().string());
    const auto f = parse_presentation_file(text);
    CHECK(print_presentation_file(f) == text);
    const auto p = f.spin_presentation();
    CHECK(parse_presentation(print_presentation(p, f.name)) == p);
    ++files;
  }
  CHECK(files >= 12);
}

TEST_CASE("scheme files") {
  const auto sf = parse_scheme_file(read_text_file(SPINKIRBY_DATA_DIR "/schemes/rp3_c1_two_extras.json"));
  CHECK(sf.name == std::optional<std::string>("rp3_c1_two_extras"));
  CHECK(sf.scheme.base_size() == 1);
  CHECK(sf.scheme.extra_count() == 2);
  CHECK(*sf.scheme.extras_c() == BitVector::from_string("11"));

  CHECK(code_of([] { parse_scheme_file(R"({"base_size":1,"B_full":[[1]],"c_base":[0]})"); }) ==
        ErrorCode::NotCharacteristic);
  CHECK(code_of([] { parse_scheme_file(R"({"base_size":2,"B_full":[[1]],"c_base":[1,1]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_scheme_file(R"({"base_size":0,"B_full":[[0]],"c_base":[],"extras_c":[1,1]})"); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("knot table") {
  const auto shipped = parse_knot_table(read_text_file(SPINKIRBY_DATA_DIR "/knots.json"));
  CHECK(read_text_file(SPINKIRBY_DATA_DIR "/knots.json") == builtin_knot_table_text());
  CHECK(shipped.size() == 3);
  for (const char* name : {"unknot", "trefoil", "figure8"})
    CHECK(lookup_knot(shipped, name).matrix() == lookup_knot(builtin_knot_table(), name).matrix());
  CHECK(code_of([] { lookup_knot(builtin_knot_table(), "cinquefoil"); }) == ErrorCode::UnknownKnot);
  CHECK(code_of([] { parse_knot_table(R"({"bad": [[1,0],[0,1]]})"); }) == ErrorCode::InvalidSeifertMatrix);

  const auto s = parse_seifert_file(read_text_file(SPINKIRBY_DATA_DIR "/seifert/stevedore.json"));
  CHECK(s.name == std::optional<std::string>("stevedore"));
  CHECK(s.v.genus() == 1);
}

TEST_CASE("read_text_file") {
  CHECK(code_of([] { read_text_file("/nonexistent/file.json"); }) == ErrorCode::InvalidArgument);
}
