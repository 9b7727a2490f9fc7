#include <filesystem>
#include <functional>
#include <random>

#include "doctest.h"
#include "dpg/error.hpp"
#include "dpg/io.hpp"
#include "expect.hpp"
#include "graphs.hpp"

using namespace dpg;
using namespace dpg::testing;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("graph files") {
  auto g = io::parse_graph("3 2\n0 1\n1 2\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(io::format_graph(g) == "3 2\n0 1\n1 2\n");
  CHECK(io::parse_graph("1 0\n").n() == 1);

  CHECK(code_of([] { io::parse_graph(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_graph("3 2\n0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_graph("3 1\n1 0\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_graph("3 1\n0 3\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_graph("3 1\n0 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_graph("3 2\n0 1\n0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_graph("3\n"); }) == ErrorCode::ParseError);
  CHECK(message_of([] { io::parse_graph("3 2\n0 1\n2 2\n"); }).find("line 3") != std::string::npos);
}

TEST_CASE("stubbornness files") {
  auto p = io::parse_stubbornness("1/3\n9/10\n1/2\n");
  CHECK(p.size() == 3);
  CHECK(p.a(1) == 9);
  CHECK(io::format_stubbornness(p) == "1/3\n9/10\n1/2\n");
  CHECK(code_of([] { io::parse_stubbornness("1/3\n1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_stubbornness("0/3\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_stubbornness("abc\n"); }) == ErrorCode::ParseError);
  CHECK(message_of([] { io::parse_stubbornness("1/3\n1/2\n5/4\n"); }).find("line 3") != std::string::npos);
}

TEST_CASE("bit and script files") {
  CHECK(io::parse_bits("0101\n") == std::vector<std::uint8_t>{0, 1, 0, 1});
  CHECK(io::format_bits({1, 0, 1}) == "101\n");
  CHECK(code_of([] { io::parse_bits("0121\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_bits("01\n10\n"); }) == ErrorCode::ParseError);
  CHECK(io::parse_script("3\n0\n2\n") == std::vector<Vertex>{3, 0, 2});
  CHECK(code_of([] { io::parse_script("1 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_script("-1\n"); }) == ErrorCode::ParseError);
  CHECK(io::format_lines({"a", "b"}) == "a\nb\n");
}

TEST_CASE("files on disk") {
  auto dir = std::filesystem::temp_directory_path() / ("dpg_io_test_" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  io::write_file(dir / "g.txt", "5 0\n");
  CHECK(io::read_file(dir / "g.txt") == "5 0\n");
  CHECK(code_of([&] { io::read_file(dir / "missing.txt"); }) == ErrorCode::ParseError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("property: round trips") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    Vertex n = 1 + static_cast<Vertex>(rng() % 30);
    Graph g = random_graph(n, 0.3, rng);
    auto g2 = io::parse_graph(io::format_graph(g));
    CHECK(g2.edges() == g.edges());
    CHECK(g2.n() == g.n());
    auto p = random_rational_profile(n, rng);
    CHECK(io::parse_stubbornness(io::format_stubbornness(p)) == p);
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng() % 2;
    CHECK(io::parse_bits(io::format_bits(bits)) == bits);
  }
}
