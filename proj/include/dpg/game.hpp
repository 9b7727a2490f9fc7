#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dpg/graph.hpp"
#include "dpg/rational.hpp"

namespace dpg {

// a = floor(alpha / (1 - alpha)) for alpha in (0,1), by exact integer division.
std::int64_t integer_stubbornness(const Rational& alpha);

class StubbornnessProfile {
 public:
  StubbornnessProfile() = default;
  explicit StubbornnessProfile(std::vector<Rational> alpha);

  static StubbornnessProfile uniform(Vertex n, const Rational& alpha);

  Vertex size() const noexcept { return static_cast<Vertex>(alpha_.size()); }
  const Rational& alpha(Vertex v) const { return alpha_[v]; }
  std::int64_t a(Vertex v) const { return a_[v]; }
  const std::vector<Rational>& alphas() const noexcept { return alpha_; }

  friend bool operator==(const StubbornnessProfile&, const StubbornnessProfile&) = default;

 private:
  std::vector<Rational> alpha_;
  std::vector<std::int64_t> a_;
};

// Length-n 0/1 vector. The tag keeps private beliefs and declared opinions
// from being mixed up at call sites.
template <class Tag>
struct BitVector {
  std::vector<std::uint8_t> bits;

  BitVector() = default;
  explicit BitVector(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
  BitVector(Vertex n, std::uint8_t value) : bits(static_cast<std::size_t>(n), value) {}

  Vertex size() const noexcept { return static_cast<Vertex>(bits.size()); }
  std::uint8_t operator[](Vertex v) const { return bits[v]; }
  std::uint8_t& operator[](Vertex v) { return bits[v]; }

  Vertex ones() const {
    Vertex c = 0;
    for (auto b : bits) c += b;
    return c;
  }
  Vertex zeros() const { return size() - ones(); }

  std::string str() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
};

struct BeliefTag;
struct OpinionTag;
using BeliefAssignment = BitVector<BeliefTag>;
using OpinionState = BitVector<OpinionTag>;

OpinionState truthful_state(const BeliefAssignment& beliefs);

bool is_stubborn(const Graph& g, const StubbornnessProfile& profile, Vertex v);
bool all_stubborn(const Graph& g, const StubbornnessProfile& profile);

// c_i(s) = alpha_i |s(i) - b(i)| + (1 - alpha_i) * #{j in N(i) : s(j) != s(i)}.
Rational cost(const Graph& g, const StubbornnessProfile& profile,
              const BeliefAssignment& beliefs, const OpinionState& state, Vertex i);

// True iff flipping s(i) strictly lowers c_i. Integer test: with alpha = p/q,
// (q - p)(d_diff - d_same) > p * sigma, sigma = +1 when s(i) = b(i), else -1.
bool improving_flip(const Graph& g, const StubbornnessProfile& profile,
                    const BeliefAssignment& beliefs, const OpinionState& state, Vertex i);

// c_i(s) - c_i(s with i flipped); positive iff the flip is improving.
Rational flip_gain(const Graph& g, const StubbornnessProfile& profile,
                   const BeliefAssignment& beliefs, const OpinionState& state, Vertex i);

bool is_equilibrium(const Graph& g, const StubbornnessProfile& profile,
                    const BeliefAssignment& beliefs, const OpinionState& state);

// 1 iff at least (n+1)/2 entries are 1. Throws EvenN for even length.
template <class Tag>
int majority(const BitVector<Tag>& v);

int majority_of(Vertex n, Vertex ones);

void check_game_sizes(const Graph& g, const StubbornnessProfile& profile,
                      const BeliefAssignment& beliefs);

template <class Tag>
int majority(const BitVector<Tag>& v) {
  return majority_of(v.size(), v.ones());
}

}  // namespace dpg
