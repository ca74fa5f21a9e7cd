#include "fo2/simon.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fo2 {

bool length_lex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool SubwordClass::contains(std::string_view w) const {
  return std::binary_search(members.begin(), members.end(), w,
                            [](std::string_view x, std::string_view y) {
                              return length_lex_less(x, y);
                            });
}

SubwordClass subword_class(std::string_view w, int k, std::string_view alphabet) {
  if (k < 0) throw IndexOutOfRangeError("subword length bound must be >= 0");
  std::string letters;
  if (alphabet.empty()) {
    letters.assign(w);
  } else {
    letters.assign(alphabet);
    for (char c : w)
      if (alphabet.find(c) == std::string_view::npos) throw UnknownLetterError(c);
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  std::set<std::string> subwords = {""};
  for (char c : w) {
    std::vector<std::string> grown;
    for (const std::string& u : subwords)
      if (static_cast<int>(u.size()) < k) grown.push_back(u + c);
    subwords.insert(grown.begin(), grown.end());
  }

  SubwordClass out;
  out.alphabet = std::move(letters);
  out.k = k;
  out.members.assign(subwords.begin(), subwords.end());
  std::sort(out.members.begin(), out.members.end(),
            [](const std::string& a, const std::string& b) {
              return length_lex_less(a, b);
            });
  return out;
}

bool equivalent_k(std::string_view u, std::string_view v, int k) {
  return subword_class(u, k).members == subword_class(v, k).members;
}

namespace {

// Words of length <= k over the alphabet, in length-lex order, with an
// index lookup. Small by construction: the quotient budget bounds usage.
struct WordUniverse {
  std::vector<std::string> words;
  std::map<std::string, int> index;

  WordUniverse(const std::string& alphabet, int k) {
    words.push_back("");
    for (std::size_t begin = 0, level = 0; level < static_cast<std::size_t>(k); ++level) {
      std::size_t end = words.size();
      for (std::size_t i = begin; i < end; ++i)
        for (char c : alphabet) words.push_back(words[i] + c);
      begin = end;
    }
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
  }
};

}  // namespace

Morphism simon_quotient(const std::string& alphabet, int k, int size_budget) {
  std::string letters = alphabet;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  if (letters.empty()) throw EmptyAlphabetError();
  if (k < 0) throw IndexOutOfRangeError("subword length bound must be >= 0");

  // Member sets are bitsets over all words of length <= k; bail out before
  // materializing a universe that cannot fit.
  constexpr std::uint64_t kUniverseCap = 1u << 20;
  std::uint64_t universe_size = 1, layer = 1;
  for (int i = 0; i < k && universe_size <= kUniverseCap; ++i) {
    layer *= letters.size();
    universe_size += layer;
  }
  if (universe_size > kUniverseCap)
    throw BudgetExceededError("simon_quotient: subword universe too large",
                              universe_size, kUniverseCap);

  const WordUniverse universe(letters, k);
  const int uni = static_cast<int>(universe.words.size());

  // A class is the bitset of its member words over the universe.
  auto class_of_letter = [&](char c) {
    Bitset b(uni);
    b.set(0);  // empty word
    if (k >= 1) b.set(universe.index.at(std::string(1, c)));
    return b;
  };
  // Members of x*y are exactly the short-enough concatenations r+s.
  auto product = [&](const Bitset& x, const Bitset& y) {
    Bitset out(uni);
    for (int r : x.to_indices()) {
      const std::string& left = universe.words[r];
      for (int s : y.to_indices()) {
        const std::string& right = universe.words[s];
        if (static_cast<int>(left.size() + right.size()) <= k)
          out.set(universe.index.at(left + right));
      }
    }
    return out;
  };

  std::map<Bitset, int> ids;
  std::vector<Bitset> classes;
  std::vector<std::string> names;
  std::deque<int> queue;
  auto intern = [&](const Bitset& b, const std::string& witness) {
    auto [it, fresh] = ids.emplace(b, static_cast<int>(classes.size()));
    if (fresh) {
      if (static_cast<int>(classes.size()) >= size_budget)
        throw BudgetExceededError("simon_quotient: class budget exceeded",
                                  classes.size() + 1,
                                  static_cast<std::uint64_t>(size_budget));
      classes.push_back(b);
      names.push_back(witness.empty() ? "1" : witness);
      queue.push_back(it->second);
    }
    return it->second;
  };

  Bitset eps(uni);
  eps.set(0);
  intern(eps, "");

  std::vector<int> letter_class(letters.size());
  for (std::size_t a = 0; a < letters.size(); ++a)
    letter_class[a] = intern(class_of_letter(letters[a]), std::string(1, letters[a]));

  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    Bitset base = classes[e];
    for (std::size_t a = 0; a < letters.size(); ++a)
      intern(product(base, classes[letter_class[a]]),
             names[e] == "1" ? std::string(1, letters[a]) : names[e] + letters[a]);
  }

  const int size = static_cast<int>(classes.size());
  std::vector<int> flat(static_cast<std::size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) flat[x * size + y] = ids.at(product(classes[x], classes[y]));

  FiniteMonoid monoid = FiniteMonoid::from_flat(size, std::move(flat), 0, names);
  return Morphism(letters, std::move(monoid), std::move(letter_class));
}

}  // namespace fo2
