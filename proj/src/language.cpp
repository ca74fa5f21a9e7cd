#include "fo2/language.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace fo2 {

int Dfa::step(int state, char letter) const {
  std::size_t idx = alphabet.find(letter);
  if (idx == std::string::npos) throw UnknownLetterError(letter);
  return delta[state][idx];
}

bool Dfa::accepts(std::string_view word) const {
  int state = initial;
  for (char letter : word) state = step(state, letter);
  return accepting.test(state);
}

void validate(const Dfa& d) {
  if (d.alphabet.empty()) throw EmptyAlphabetError();
  std::string sorted = d.alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw IndexOutOfRangeError("dfa: duplicate letter in alphabet");
  if (d.state_count <= 0) throw IndexOutOfRangeError("dfa: no states");
  if (d.initial < 0 || d.initial >= d.state_count)
    throw IndexOutOfRangeError("dfa: initial state out of range");
  if (d.accepting.universe() != d.state_count)
    throw IndexOutOfRangeError("dfa: accepting set universe mismatch");
  if (static_cast<int>(d.delta.size()) != d.state_count)
    throw IndexOutOfRangeError("dfa: delta row count mismatch");
  for (const auto& row : d.delta) {
    if (row.size() != d.alphabet.size())
      throw IndexOutOfRangeError("dfa: delta row length mismatch");
    for (int target : row)
      if (target < 0 || target >= d.state_count)
        throw IndexOutOfRangeError("dfa: transition out of range");
  }
}

namespace {

// ---------------------------------------------------------------------
// Regex front end: Thompson construction over an explicit NFA.

struct Nfa {
  // eps[s] = epsilon successors; step[s] = (letter index, target) list.
  std::vector<std::vector<int>> eps;
  std::vector<std::vector<std::pair<int, int>>> step;
  int new_state() {
    eps.emplace_back();
    step.emplace_back();
    return static_cast<int>(eps.size()) - 1;
  }
};

struct Fragment {
  int start, accept;
};

class RegexParser {
 public:
  RegexParser(std::string_view text, const std::string& alphabet, Nfa& nfa)
      : text_(text), alphabet_(alphabet), nfa_(nfa) {}

  Fragment parse() {
    Fragment f = alternation();
    if (pos_ < text_.size()) throw ParseError("unexpected ')'", pos_ + 1);
    return f;
  }

 private:
  bool at_atom_start() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c != '|' && c != ')' && c != '*' && c != '+' && c != '?';
  }

  Fragment epsilon_fragment() {
    int s = nfa_.new_state();
    return {s, s};
  }

  Fragment alternation() {
    Fragment acc = concatenation();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      Fragment rhs = concatenation();
      int start = nfa_.new_state(), accept = nfa_.new_state();
      nfa_.eps[start] = {acc.start, rhs.start};
      nfa_.eps[acc.accept].push_back(accept);
      nfa_.eps[rhs.accept].push_back(accept);
      acc = {start, accept};
    }
    return acc;
  }

  Fragment concatenation() {
    Fragment acc = epsilon_fragment();
    while (at_atom_start()) {
      Fragment next = repetition();
      nfa_.eps[acc.accept].push_back(next.start);
      acc = {acc.start, next.accept};
    }
    return acc;
  }

  Fragment repetition() {
    Fragment f = atom();
    while (pos_ < text_.size() &&
           (text_[pos_] == '*' || text_[pos_] == '+' || text_[pos_] == '?')) {
      char op = text_[pos_++];
      int start = nfa_.new_state(), accept = nfa_.new_state();
      nfa_.eps[start].push_back(f.start);
      nfa_.eps[f.accept].push_back(accept);
      if (op != '+') nfa_.eps[start].push_back(accept);  // may skip
      if (op != '?') nfa_.eps[f.accept].push_back(f.start);  // may repeat
      f = {start, accept};
    }
    return f;
  }

  Fragment atom() {
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Fragment f = alternation();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("unmatched '('", open + 1);
      ++pos_;
      return f;
    }
    // Two-byte UTF-8 epsilon.
    if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < text_.size() &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0xB5) {
      pos_ += 2;
      return epsilon_fragment();
    }
    std::size_t letter_index = alphabet_.find(c);
    if (letter_index == std::string::npos)
      throw ParseError(std::string("letter '") + c + "' not in alphabet", pos_ + 1);
    ++pos_;
    int start = nfa_.new_state(), accept = nfa_.new_state();
    nfa_.step[start].push_back({static_cast<int>(letter_index), accept});
    return {start, accept};
  }

  std::string_view text_;
  const std::string& alphabet_;
  Nfa& nfa_;
  std::size_t pos_ = 0;
};

std::string infer_alphabet(std::string_view regex) {
  std::string letters;
  for (std::size_t i = 0; i < regex.size(); ++i) {
    char c = regex[i];
    if (c == '(' || c == ')' || c == '|' || c == '*' || c == '+' || c == '?')
      continue;
    if (static_cast<unsigned char>(c) == 0xCE && i + 1 < regex.size() &&
        static_cast<unsigned char>(regex[i + 1]) == 0xB5) {
      ++i;
      continue;
    }
    letters.push_back(c);
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

Bitset epsilon_closure(const Nfa& nfa, Bitset set) {
  std::deque<int> queue;
  for (int s : set.to_indices()) queue.push_back(s);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : nfa.eps[s])
      if (!set.test(t)) {
        set.set(t);
        queue.push_back(t);
      }
  }
  return set;
}

Dfa determinize(const Nfa& nfa, const Fragment& f, const std::string& alphabet) {
  const int nfa_size = static_cast<int>(nfa.eps.size());
  Dfa out;
  out.alphabet = alphabet;

  std::map<Bitset, int> ids;
  std::vector<Bitset> sets;
  std::deque<int> queue;
  auto intern = [&](const Bitset& set) {
    auto [it, fresh] = ids.emplace(set, static_cast<int>(sets.size()));
    if (fresh) {
      sets.push_back(set);
      queue.push_back(it->second);
    }
    return it->second;
  };

  Bitset start(nfa_size);
  start.set(f.start);
  out.initial = intern(epsilon_closure(nfa, start));

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    Bitset current = sets[id];  // copy: intern may reallocate sets
    std::vector<int> row(alphabet.size());
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      Bitset next(nfa_size);
      for (int s : current.to_indices())
        for (auto [letter, target] : nfa.step[s])
          if (letter == static_cast<int>(a)) next.set(target);
      row[a] = intern(epsilon_closure(nfa, next));
    }
    out.delta.resize(sets.size());
    out.delta[id] = std::move(row);
  }

  out.state_count = static_cast<int>(sets.size());
  out.accepting = Bitset(out.state_count);
  for (int s = 0; s < out.state_count; ++s)
    if (sets[s].test(f.accept)) out.accepting.set(s);
  return out;
}

// ---------------------------------------------------------------------
// Minimization: accessible part, Moore refinement, canonical BFS order.

Dfa reachable_part(const Dfa& d) {
  std::vector<int> id(d.state_count, -1);
  std::vector<int> order;
  std::deque<int> queue;
  id[d.initial] = 0;
  order.push_back(d.initial);
  queue.push_back(d.initial);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : d.delta[s])
      if (id[t] < 0) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
  }
  Dfa out;
  out.alphabet = d.alphabet;
  out.state_count = static_cast<int>(order.size());
  out.initial = 0;
  out.accepting = Bitset(out.state_count);
  out.delta.resize(out.state_count);
  for (int s = 0; s < out.state_count; ++s) {
    if (d.accepting.test(order[s])) out.accepting.set(s);
    out.delta[s].reserve(d.alphabet.size());
    for (int t : d.delta[order[s]]) out.delta[s].push_back(id[t]);
  }
  return out;
}

Dfa moore_minimize(const Dfa& d) {
  std::vector<int> cls(d.state_count, 0);
  bool has_acc = !d.accepting.empty();
  bool has_rej = d.accepting.count() < d.state_count;
  if (has_acc && has_rej)
    for (int s = 0; s < d.state_count; ++s) cls[s] = d.accepting.test(s) ? 1 : 0;

  int count = has_acc && has_rej ? 2 : 1;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(d.state_count);
    for (int s = 0; s < d.state_count; ++s) {
      std::vector<int> sig;
      sig.reserve(d.alphabet.size() + 1);
      sig.push_back(cls[s]);
      for (int t : d.delta[s]) sig.push_back(cls[t]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      (void)fresh;
      next[s] = it->second;
    }
    int next_count = static_cast<int>(sig_ids.size());
    cls = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }

  Dfa out;
  out.alphabet = d.alphabet;
  out.state_count = count;
  out.initial = cls[d.initial];
  out.accepting = Bitset(count);
  out.delta.assign(count, std::vector<int>(d.alphabet.size(), -1));
  for (int s = 0; s < d.state_count; ++s) {
    if (d.accepting.test(s)) out.accepting.set(cls[s]);
    for (std::size_t a = 0; a < d.alphabet.size(); ++a)
      out.delta[cls[s]][a] = cls[d.delta[s][a]];
  }
  return out;
}

Dfa canonicalize(const Dfa& d) { return reachable_part(d); }

Dfa sort_alphabet(const Dfa& d) {
  std::vector<int> perm(d.alphabet.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return d.alphabet[a] < d.alphabet[b]; });
  Dfa out = d;
  for (std::size_t i = 0; i < perm.size(); ++i) out.alphabet[i] = d.alphabet[perm[i]];
  for (int s = 0; s < d.state_count; ++s)
    for (std::size_t i = 0; i < perm.size(); ++i)
      out.delta[s][i] = d.delta[s][perm[i]];
  return out;
}

}  // namespace

Dfa compile_language(std::string_view regex, std::string_view declared_alphabet) {
  std::string alphabet;
  if (declared_alphabet.empty()) {
    alphabet = infer_alphabet(regex);
  } else {
    alphabet.assign(declared_alphabet);
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  }
  Nfa nfa;
  Fragment f = RegexParser(regex, alphabet, nfa).parse();
  if (alphabet.empty()) throw EmptyAlphabetError();
  Dfa d = determinize(nfa, f, alphabet);
  return canonicalize(moore_minimize(reachable_part(d)));
}

Dfa compile_language(const Dfa& d) {
  validate(d);
  return canonicalize(moore_minimize(reachable_part(sort_alphabet(d))));
}

RecognizedLanguage syntactic_monoid(const Dfa& input) {
  // Always rebuild from the canonical minimal automaton.
  Dfa d = compile_language(input);
  const int n = d.state_count;
  const std::size_t letters = d.alphabet.size();
  constexpr int kTransitionMonoidCap = 1'000'000;

  std::vector<std::vector<int>> letter_transform(letters, std::vector<int>(n));
  for (std::size_t a = 0; a < letters; ++a)
    for (int s = 0; s < n; ++s) letter_transform[a][s] = d.delta[s][a];

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> elems;
  std::vector<std::string> names;
  std::deque<int> queue;
  auto intern = [&](std::vector<int> t, const std::string& witness) {
    auto [it, fresh] = ids.emplace(std::move(t), static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(it->first);
      names.push_back(witness.empty() ? "1" : witness);
      queue.push_back(it->second);
      if (static_cast<int>(elems.size()) > kTransitionMonoidCap)
        throw BudgetExceededError("syntactic_monoid: transition monoid too large",
                                  elems.size(), kTransitionMonoidCap);
    }
    return it->second;
  };

  std::vector<int> id_transform(n);
  for (int s = 0; s < n; ++s) id_transform[s] = s;
  intern(id_transform, "");

  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    std::vector<int> base = elems[e];
    for (std::size_t a = 0; a < letters; ++a) {
      std::vector<int> next(n);
      for (int s = 0; s < n; ++s) next[s] = letter_transform[a][base[s]];
      intern(std::move(next), names[e] == "1" ? std::string(1, d.alphabet[a])
                                              : names[e] + d.alphabet[a]);
    }
  }

  const int size = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      std::vector<int> prod(n);
      for (int s = 0; s < n; ++s) prod[s] = elems[y][elems[x][s]];
      flat[x * size + y] = ids.at(prod);
    }
  FiniteMonoid monoid = FiniteMonoid::from_flat(size, std::move(flat), 0, names);

  std::vector<int> images;
  images.reserve(letters);
  for (std::size_t a = 0; a < letters; ++a) images.push_back(ids.at(letter_transform[a]));

  ElementSubset accepting(size);
  for (int e = 0; e < size; ++e)
    if (d.accepting.test(elems[e][d.initial])) accepting.set(e);

  return RecognizedLanguage{Morphism(d.alphabet, std::move(monoid), std::move(images)),
                            accepting};
}

bool recognizes(const RecognizedLanguage& r, std::string_view word) {
  return r.accepting.test(r.morphism.apply(word));
}

}  // namespace fo2
