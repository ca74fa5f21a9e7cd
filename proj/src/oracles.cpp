#include "fo2/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fo2::slow {

std::vector<std::string> enumerate_words(const std::string& alphabet, int max_len) {
  std::vector<std::string> words = {""};
  std::size_t begin = 0;
  for (int level = 0; level < max_len; ++level) {
    std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : alphabet) words.push_back(words[i] + c);
    begin = end;
  }
  return words;
}

std::vector<std::vector<std::string>> brute_syntactic_congruence(const Dfa& d,
                                                                 int max_len) {
  validate(d);
  const std::vector<std::string> words = enumerate_words(d.alphabet, max_len);

  // after[v] = state reached from the initial state reading v;
  // accept_from[s][w] = does reading w from s end in an accepting state.
  std::vector<int> after(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    int s = d.initial;
    for (char c : words[i]) s = d.step(s, c);
    after[i] = s;
  }
  std::vector<std::vector<char>> accept_from(
      d.state_count, std::vector<char>(words.size(), 0));
  for (int s = 0; s < d.state_count; ++s)
    for (std::size_t i = 0; i < words.size(); ++i) {
      int t = s;
      for (char c : words[i]) t = d.step(t, c);
      accept_from[s][i] = d.accepting.test(t) ? 1 : 0;
    }

  // Signature of u: acceptance of v u w over all context pairs (v, w).
  std::vector<int> transform_cache(d.state_count);
  std::map<std::vector<char>, int> signature_ids;
  std::vector<std::vector<std::string>> classes;
  for (const std::string& u : words) {
    for (int s = 0; s < d.state_count; ++s) {
      int t = s;
      for (char c : u) t = d.step(t, c);
      transform_cache[s] = t;
    }
    std::vector<char> sig;
    sig.reserve(words.size() * words.size());
    for (std::size_t vi = 0; vi < words.size(); ++vi) {
      int mid = transform_cache[after[vi]];
      for (std::size_t wi = 0; wi < words.size(); ++wi)
        sig.push_back(accept_from[mid][wi]);
    }
    auto [it, fresh] = signature_ids.emplace(std::move(sig),
                                             static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(u);
  }
  return classes;
}

SimonClassCount brute_simon_classes(const std::string& alphabet, int k, int max_len) {
  std::string letters = alphabet;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  if (letters.empty()) throw EmptyAlphabetError();

  SimonClassCount out;
  std::set<std::vector<std::string>> seen;
  std::set<std::vector<std::string>> seen_shorter;
  for (const std::string& w : enumerate_words(letters, max_len)) {
    auto members = subword_class(w, k, letters).members;
    if (static_cast<int>(w.size()) < max_len) seen_shorter.insert(members);
    if (seen.insert(std::move(members)).second) out.representatives.push_back(w);
  }
  out.count = static_cast<int>(seen.size());
  out.stabilized = seen.size() == seen_shorter.size();
  return out;
}

bool subword_stable(std::string_view z, std::string_view B, int k) {
  SubwordClass base = subword_class(z, k);
  for (char b : B) {
    std::string zb(z);
    zb.push_back(b);
    if (!(subword_class(zb, k, base.alphabet).members == base.members)) return false;
  }
  return true;
}

namespace {

std::string letter_content(std::string_view w) {
  std::string out(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains_all(std::string_view haystack_sorted, std::string_view needles_sorted) {
  return std::includes(haystack_sorted.begin(), haystack_sorted.end(),
                       needles_sorted.begin(), needles_sorted.end());
}

// Greedy maximal count of consecutive blocks of z' each carrying the full
// content C; cut points after each completed block.
std::vector<std::size_t> greedy_cuts(std::string_view suffix, std::string_view content) {
  std::vector<std::size_t> cuts;
  std::set<char> missing(content.begin(), content.end());
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    missing.erase(suffix[i]);
    if (missing.empty()) {
      cuts.push_back(i + 1);
      missing.insert(content.begin(), content.end());
    }
  }
  return cuts;
}

}  // namespace

std::optional<Factorization> suffix_factorization(std::string_view z,
                                                  std::string_view B, int q,
                                                  int k_probe) {
  if (q < 1) throw IndexOutOfRangeError("block count must be positive");
  const std::string required = letter_content(B);
  if (!contains_all(letter_content(z), required))
    throw IndexOutOfRangeError("required letters missing from the word");
  if (k_probe > 0 && !subword_stable(z, required, k_probe)) return std::nullopt;

  // Grow the suffix from the right; its letter content is the forced common
  // content, so the first success uses the shortest workable suffix.
  for (std::size_t start = z.size(); start-- > 0;) {
    std::string_view suffix = z.substr(start);
    std::string content = letter_content(suffix);
    if (!contains_all(content, required)) continue;
    std::vector<std::size_t> cuts = greedy_cuts(suffix, content);
    if (static_cast<int>(cuts.size()) < q) continue;

    Factorization out;
    out.prefix = std::string(z.substr(0, start));
    out.content = std::move(content);
    out.required = required;
    std::size_t block_start = 0;
    for (int i = 0; i + 1 < q; ++i) {
      out.blocks.emplace_back(suffix.substr(block_start, cuts[i] - block_start));
      block_start = cuts[i];
    }
    out.blocks.emplace_back(suffix.substr(block_start));
    return out;
  }
  return std::nullopt;
}

bool brute_arrow_equivalence(const PairClosure& pc, KernelObject src,
                             KernelObject tgt, std::string_view u,
                             std::string_view u_prime, int max_len) {
  const Morphism& phi = pc.phi();
  const Morphism& psi = pc.psi();
  const std::vector<std::string> words = enumerate_words(phi.alphabet(), max_len);

  std::vector<std::string> lefts, rights;
  for (const std::string& v : words) {
    if (psi.apply(v) == src.n1) lefts.push_back(v);
    if (psi.apply(v) == tgt.n2) rights.push_back(v);
  }
  for (const std::string& v : lefts)
    for (const std::string& w : rights)
      if (phi.apply(v + std::string(u) + w) != phi.apply(v + std::string(u_prime) + w))
        return false;
  return true;
}

}  // namespace fo2::slow
