#include "dpg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dpg/error.hpp"

namespace dpg::io {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Non-empty lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto t = trim(raw);
    if (!t.empty()) out.push_back({number, t});
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::int64_t> integers(const Line& line) {
  std::vector<std::int64_t> out;
  std::string_view s = line.text;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    auto end = s.find_first_of(" \t");
    auto tok = s.substr(0, end);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      parse_fail(line.number, "expected an integer, got '" + std::string(tok) + "'");
    }
    out.push_back(value);
    if (end == std::string_view::npos) break;
    s = s.substr(end);
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorCode::ParseError, "line 1: missing 'n m' header");
  auto header = integers(lines[0]);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    parse_fail(lines[0].number, "header must be 'n m' with non-negative integers");
  }
  const auto n = header[0];
  const auto m = header[1];
  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    parse_fail(lines.back().number, "header declares " + std::to_string(m) + " edges but " +
                                        std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = integers(lines[i]);
    if (uv.size() != 2) parse_fail(lines[i].number, "edge line must be 'u v'");
    if (uv[0] < 0 || uv[1] >= n || uv[0] >= uv[1]) {
      parse_fail(lines[i].number, "edge must satisfy 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  try {
    return Graph(static_cast<Vertex>(n), edges);
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, std::string("graph: ") + e.what());
  }
}

StubbornnessProfile parse_stubbornness(std::string_view text) {
  std::vector<Rational> alpha;
  for (const auto& line : content_lines(text)) {
    try {
      alpha.push_back(Rational::parse(line.text));
      integer_stubbornness(alpha.back());
    } catch (const Error& e) {
      parse_fail(line.number, e.what());
    }
  }
  return StubbornnessProfile(std::move(alpha));
}

std::vector<std::uint8_t> parse_bits(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.size() > 1) parse_fail(lines[1].number, "expected a single line of bits");
  std::vector<std::uint8_t> bits;
  if (lines.empty()) return bits;
  for (char c : lines[0].text) {
    if (c != '0' && c != '1') {
      parse_fail(lines[0].number, std::string("unexpected character '") + c + "' in bit string");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

std::vector<Vertex> parse_script(std::string_view text) {
  std::vector<Vertex> out;
  for (const auto& line : content_lines(text)) {
    auto v = integers(line);
    if (v.size() != 1 || v[0] < 0) parse_fail(line.number, "expected one vertex id");
    out.push_back(static_cast<Vertex>(v[0]));
  }
  return out;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string format_stubbornness(const StubbornnessProfile& profile) {
  std::string out;
  for (const auto& a : profile.alphas()) {
    // Always "p/q", including integral-looking values never produced here.
    out += std::to_string(a.num()) + "/" + std::to_string(a.den()) + "\n";
  }
  return out;
}

std::string format_bits(const std::vector<std::uint8_t>& bits) {
  std::string out;
  for (auto b : bits) out.push_back(b ? '1' : '0');
  out.push_back('\n');
  return out;
}

std::string format_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << contents;
}

}  // namespace dpg::io
