#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dpg/game.hpp"
#include "dpg/graph.hpp"

namespace dpg::io {

// Plain-text formats:
//   graph         line 1 "n m", then m lines "u v" with 0 <= u < v < n
//   stubbornness  n lines "p/q"
//   bits          one line of n characters in {0,1}
//   script        one vertex id per line
// Malformed input raises ParseError naming the offending line.

Graph parse_graph(std::string_view text);
StubbornnessProfile parse_stubbornness(std::string_view text);
std::vector<std::uint8_t> parse_bits(std::string_view text);
std::vector<Vertex> parse_script(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_stubbornness(const StubbornnessProfile& profile);
std::string format_bits(const std::vector<std::uint8_t>& bits);
std::string format_lines(const std::vector<std::string>& lines);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace dpg::io
