// Differential test of the regex pipeline: a test-side AST with a naive
// backtracking matcher generates regex strings, and the compiled minimal
// DFA must agree with the matcher on every short word.

#include <doctest.h>

#include <random>

#include "fo2/language.hpp"
#include "fo2/oracles.hpp"

using namespace fo2;

namespace {

struct Re {
  enum class Kind { eps, lit, cat, alt, star, plus, opt } kind;
  char letter = 0;
  std::vector<Re> kids;
};

Re random_re(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 6 : 1);
  std::uniform_int_distribution<int> letter(0, 1);
  switch (kind(rng)) {
    case 0:
      return {Re::Kind::eps, 0, {}};
    case 1:
      return {Re::Kind::lit, "ab"[letter(rng)], {}};
    case 2:
    case 3: {
      Re node{kind(rng) % 2 ? Re::Kind::cat : Re::Kind::alt, 0, {}};
      node.kids.push_back(random_re(rng, depth - 1));
      node.kids.push_back(random_re(rng, depth - 1));
      return node;
    }
    case 4:
      return {Re::Kind::star, 0, {random_re(rng, depth - 1)}};
    case 5:
      return {Re::Kind::plus, 0, {random_re(rng, depth - 1)}};
    default:
      return {Re::Kind::opt, 0, {random_re(rng, depth - 1)}};
  }
}

std::string to_string(const Re& re) {
  switch (re.kind) {
    case Re::Kind::eps:
      return "()";
    case Re::Kind::lit:
      return std::string(1, re.letter);
    case Re::Kind::cat:
      return "(" + to_string(re.kids[0]) + ")(" + to_string(re.kids[1]) + ")";
    case Re::Kind::alt:
      return "(" + to_string(re.kids[0]) + "|" + to_string(re.kids[1]) + ")";
    case Re::Kind::star:
      return "(" + to_string(re.kids[0]) + ")*";
    case Re::Kind::plus:
      return "(" + to_string(re.kids[0]) + ")+";
    case Re::Kind::opt:
      return "(" + to_string(re.kids[0]) + ")?";
  }
  return {};
}

bool matches(const Re& re, std::string_view w);

bool matches_star(const Re& body, std::string_view w) {
  if (w.empty()) return true;
  for (std::size_t cut = 1; cut <= w.size(); ++cut)
    if (matches(body, w.substr(0, cut)) && matches_star(body, w.substr(cut)))
      return true;
  return false;
}

bool matches(const Re& re, std::string_view w) {
  switch (re.kind) {
    case Re::Kind::eps:
      return w.empty();
    case Re::Kind::lit:
      return w.size() == 1 && w[0] == re.letter;
    case Re::Kind::cat:
      for (std::size_t cut = 0; cut <= w.size(); ++cut)
        if (matches(re.kids[0], w.substr(0, cut)) && matches(re.kids[1], w.substr(cut)))
          return true;
      return false;
    case Re::Kind::alt:
      return matches(re.kids[0], w) || matches(re.kids[1], w);
    case Re::Kind::star:
      return matches_star(re.kids[0], w);
    case Re::Kind::plus:
      // One mandatory repetition, possibly of the empty word, then a star.
      for (std::size_t cut = 0; cut <= w.size(); ++cut)
        if (matches(re.kids[0], w.substr(0, cut)) && matches_star(re.kids[0], w.substr(cut)))
          return true;
      return false;
    case Re::Kind::opt:
      return w.empty() || matches(re.kids[0], w);
  }
  return false;
}

}  // namespace

TEST_CASE("compiled DFAs agree with a naive matcher on random regexes") {
  std::mt19937 rng(271828);
  const std::vector<std::string> words = slow::enumerate_words("ab", 6);
  int checked = 0;
  for (int round = 0; round < 250; ++round) {
    Re re = random_re(rng, 3);
    Dfa d = compile_language(to_string(re), "ab");
    for (const std::string& w : words)
      CHECK(d.accepts(w) == matches(re, w));
    ++checked;
  }
  CHECK(checked == 250);
}
