#include <filesystem>
#include <string>

#include "doctest.h"
#include "mtclab/catalog.hpp"
#include "mtclab/errors.hpp"
#include "mtclab/io.hpp"

using namespace mtclab;

namespace {

std::string error_of(const std::string& text) {
  try {
    (void)parse_fusion_ring(text, "case");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ring serialization round-trips bit-exactly") {
  for (const auto& ex : ring_catalog()) {
    CAPTURE(ex.name);
    const auto text = write_fusion_ring(ex.ring);
    const auto back = parse_fusion_ring(text);
    CHECK(back == ex.ring);
    CHECK(write_fusion_ring(back) == text);
  }
}

TEST_CASE("modular data serialization round-trips bit-exactly") {
  for (const auto& ex : modular_catalog()) {
    CAPTURE(ex.name);
    const auto text = write_modular_data(ex.md);
    const auto back = parse_modular_data(text);
    CHECK(back == ex.md);
    CHECK(write_modular_data(back) == text);
  }
}

TEST_CASE("malformed ring input is rejected with a location") {
  CHECK(error_of("{\"rank\": 2,").find("malformed JSON") != std::string::npos);
  CHECK(error_of("{\"dual\": [0], \"coeffs\": []}").find("rank") != std::string::npos);
  CHECK(error_of(R"({"rank": 2, "dual": [0, 1], "coeffs": [[0,0,0,1],[0,1,5,1]]})").find("coeffs[1]") !=
        std::string::npos);
  CHECK(error_of(R"({"rank": 1, "dual": [0], "coeffs": [[0,0,0,1],[0,0,0,1]]})").find("case") == 0);
  CHECK(error_of(R"({"rank": 1, "dual": [0], "coeffs": [[0,0,0,"x"]]})") != "");
  CHECK(error_of(R"({"rank": 1, "dual": [0], "coeffs": [[0,0,0,1]]})") == "");
}

TEST_CASE("modular data may reference a ring file") {
  const auto dir = std::filesystem::temp_directory_path() / "mtclab_io_test";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "z3.ring", write_fusion_ring(cyclic_group_ring(3)));
  const auto md = pointed_modular(3);
  std::string text = write_modular_data(md);
  // Swap the inline ring for a relative path.
  const auto start = text.find("\"ring\"");
  REQUIRE(start != std::string::npos);
  const auto ring_pos = text.find('{', start);
  int depth = 0;
  std::size_t end = ring_pos;
  for (; end < text.size(); ++end) {
    if (text[end] == '{') ++depth;
    if (text[end] == '}' && --depth == 0) break;
  }
  text.replace(ring_pos, end - ring_pos + 1, "\"z3.ring\"");
  CHECK(parse_modular_data(text, dir) == md);
  CHECK_THROWS_AS((void)parse_modular_data(text, dir / "missing"), InputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bad rationals in S are rejected") {
  auto text = write_modular_data(pointed_modular(3));
  const auto pos = text.find("\"1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "\"1/0\"");
  CHECK_THROWS_AS((void)parse_modular_data(text), InputError);
  CHECK_THROWS_AS((void)read_modular_data("/nonexistent/x.modular"), InputError);
}
