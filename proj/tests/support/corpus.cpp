#include "corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace dpg::testing {

std::string format_corpus_entry(const CorpusEntry& e) {
  std::ostringstream os;
  os << "point " << e.point << "\n";
  os << "graph " << e.graph.n() << " " << e.graph.m() << "\n";
  for (auto [u, v] : e.graph.edges()) os << u << " " << v << "\n";
  os << "alpha";
  for (const auto& a : e.profile.alphas()) os << " " << a.num() << "/" << a.den();
  os << "\nstart ";
  for (auto s : e.start) os << (s ? '1' : '0');
  os << "\n";
  return os.str();
}

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word.starts_with('#')) {
      std::getline(in, word);
      continue;
    }
    if (word != "point") throw std::runtime_error("corpus: expected 'point', got " + word);
    CorpusEntry e;
    Vertex n = 0;
    std::int64_t m = 0;
    in >> e.point >> word >> n >> m;
    std::vector<Edge> edges(m);
    for (auto& [u, v] : edges) in >> u >> v;
    e.graph = Graph(n, edges);
    in >> word;
    std::vector<Rational> alpha;
    for (Vertex v = 0; v < n; ++v) {
      in >> word;
      alpha.push_back(Rational::parse(word));
    }
    e.profile = StubbornnessProfile(std::move(alpha));
    in >> word >> word;
    for (char c : word) e.start.push_back(c == '1' ? 1 : 0);
    if (!in) throw std::runtime_error("corpus: truncated entry");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace dpg::testing
