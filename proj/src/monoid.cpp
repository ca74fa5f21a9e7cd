#include "fo2/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace fo2 {

FiniteMonoid FiniteMonoid::from_table(const std::vector<std::vector<int>>& table,
                                      int identity,
                                      std::vector<std::string> names) {
  const int size = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(size) * size);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != size)
      throw IndexOutOfRangeError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat(size, std::move(flat), identity, std::move(names));
}

FiniteMonoid FiniteMonoid::from_flat(int size, std::vector<int> flat, int identity,
                                     std::vector<std::string> names) {
  if (size <= 0) throw IndexOutOfRangeError("monoid must have at least one element");
  if (static_cast<int>(flat.size()) != size * size)
    throw IndexOutOfRangeError("table size mismatch");
  if (identity < 0 || identity >= size)
    throw IndexOutOfRangeError("identity index out of range");
  for (int v : flat)
    if (v < 0 || v >= size) throw IndexOutOfRangeError("table entry out of range");
  if (!names.empty() && static_cast<int>(names.size()) != size)
    throw IndexOutOfRangeError("names length mismatch");

  auto at = [&](int a, int b) { return flat[a * size + b]; };
  for (int a = 0; a < size; ++a)
    if (at(identity, a) != a || at(a, identity) != a) throw BadIdentityError(a);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) throw NonAssociativeError(a, b, c);

  return FiniteMonoid(size, std::move(flat), identity, std::move(names));
}

int FiniteMonoid::omega(int a) const {
  // Direct iteration: the idempotent power a^k with 1 < k <= 2*size always
  // exists (index + period of the power sequence are each at most size).
  int p = mul(a, a);
  for (int k = 2; k <= 2 * size_ + 1; ++k) {
    if (mul(p, p) == p) return p;
    p = mul(p, a);
  }
  throw IllDefinedProductError("no idempotent power found; table corrupt");
}

std::vector<int> FiniteMonoid::idempotents() const {
  std::vector<int> out;
  for (int a = 0; a < size_; ++a)
    if (is_idempotent(a)) out.push_back(a);
  return out;
}

ElementSubset FiniteMonoid::ideal(int a) const {
  ElementSubset left(size_);
  for (int x = 0; x < size_; ++x) left.set(mul(x, a));
  ElementSubset out(size_);
  for (int t : left.to_indices())
    for (int y = 0; y < size_; ++y) out.set(mul(t, y));
  return out;
}

void FiniteMonoid::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != size_)
    throw IndexOutOfRangeError("names length mismatch");
  names_ = std::move(names);
}

Morphism::Morphism(std::string alphabet, FiniteMonoid target,
                   std::vector<int> letter_images)
    : alphabet_(std::move(alphabet)), target_(std::move(target)),
      images_(std::move(letter_images)) {
  if (alphabet_.size() != images_.size())
    throw IndexOutOfRangeError("morphism: one image per letter required");
  lookup_.fill(-1);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    unsigned char letter = static_cast<unsigned char>(alphabet_[i]);
    if (lookup_[letter] >= 0)
      throw IndexOutOfRangeError("morphism: duplicate letter in alphabet");
    if (images_[i] < 0 || images_[i] >= target_.size())
      throw IndexOutOfRangeError("morphism: letter image out of range");
    lookup_[letter] = images_[i];
  }
}

int Morphism::image_of_letter(char letter) const {
  int image = lookup_[static_cast<unsigned char>(letter)];
  if (image < 0) throw UnknownLetterError(letter);
  return image;
}

int Morphism::apply(std::string_view word) const {
  int acc = target_.identity();
  for (char letter : word) acc = target_.mul(acc, image_of_letter(letter));
  return acc;
}

bool is_surjective(const Morphism& m) {
  ElementSubset gens(m.target().size());
  for (int image : m.letter_images()) gens.set(image);
  return closure(m.target(), gens).members.count() == m.target().size();
}

Morphism compose(const Morphism& m, const FiniteMonoid& target,
                 const std::vector<int>& hom) {
  if (static_cast<int>(hom.size()) != m.target().size())
    throw IndexOutOfRangeError("compose: homomorphism must cover the source");
  std::vector<int> images;
  images.reserve(m.letter_images().size());
  for (int image : m.letter_images()) images.push_back(hom[image]);
  return Morphism(m.alphabet(), target, std::move(images));
}

ClosureResult closure(const FiniteMonoid& m, const ElementSubset& generators) {
  if (generators.universe() != m.size())
    throw IndexOutOfRangeError("closure: generator universe mismatch");
  ClosureResult result{ElementSubset(m.size()),
                       std::vector<std::vector<int>>(m.size()), {}};
  const std::vector<int> gens = generators.to_indices();

  std::deque<int> queue;
  auto discover = [&](int e, std::vector<int> witness) {
    result.members.set(e);
    result.witness[e] = std::move(witness);
    result.order.push_back(e);
    queue.push_back(e);
  };
  discover(m.identity(), {});
  for (int g : gens)
    if (!result.members.test(g)) discover(g, {g});

  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int p = m.mul(e, g);
      if (!result.members.test(p)) {
        std::vector<int> witness = result.witness[e];
        witness.push_back(g);
        discover(p, std::move(witness));
      }
    }
  }
  return result;
}

DirectProduct direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const int na = a.size(), nb = b.size();
  std::vector<int> flat(static_cast<std::size_t>(na) * nb * na * nb);
  auto pair_of = [&](int x, int y) { return x * nb + y; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          flat[pair_of(x1, y1) * na * nb + pair_of(x2, y2)] =
              pair_of(a.mul(x1, x2), b.mul(y1, y2));

  std::vector<std::string> names;
  if (a.has_names() || b.has_names()) {
    names.reserve(static_cast<std::size_t>(na) * nb);
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y)
        names.push_back("(" + a.element_name(x) + "," + b.element_name(y) + ")");
  }

  DirectProduct out{FiniteMonoid::from_flat(na * nb, std::move(flat),
                                            pair_of(a.identity(), b.identity()),
                                            std::move(names)),
                    {}, {}, nb};
  out.first.resize(na * nb);
  out.second.resize(na * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      out.first[pair_of(x, y)] = x;
      out.second[pair_of(x, y)] = y;
    }
  return out;
}

bool structural_j_check(const FiniteMonoid& m) {
  std::map<Bitset, int> seen;
  for (int s = 0; s < m.size(); ++s)
    if (!seen.emplace(m.ideal(s), s).second) return false;
  return true;
}

bool structural_da_check(const FiniteMonoid& m) {
  std::vector<ElementSubset> ideals;
  ideals.reserve(m.size());
  for (int x = 0; x < m.size(); ++x) ideals.push_back(m.ideal(x));

  for (int e : m.idempotents()) {
    ElementSubset gens(m.size());
    for (int x = 0; x < m.size(); ++x)
      if (ideals[x].test(e)) gens.set(x);
    ClosureResult sub = closure(m, gens);
    for (int x : sub.members.to_indices())
      if (m.mul(m.mul(e, x), e) != e) return false;
  }
  return true;
}

namespace {

// Greedy generating sequence for a closed subset: repeatedly adjoin the
// smallest element not yet generated.
std::vector<int> generating_sequence(const FiniteMonoid& n,
                                     const std::vector<int>& members) {
  std::vector<int> gens;
  ElementSubset current(n.size());
  auto regenerate = [&] {
    ElementSubset g(n.size());
    for (int x : gens) g.set(x);
    current = closure(n, g).members;
  };
  regenerate();
  for (;;) {
    int next = -1;
    for (int x : members)
      if (!current.test(x)) {
        next = x;
        break;
      }
    if (next < 0) return gens;
    gens.push_back(next);
    regenerate();
  }
}

}  // namespace

bool divides(const FiniteMonoid& m, const FiniteMonoid& n, int size_budget) {
  if (n.size() > size_budget)
    throw BudgetExceededError("divides: |N| above oracle budget",
                              static_cast<std::uint64_t>(n.size()),
                              static_cast<std::uint64_t>(size_budget));
  if (m.size() == 1) return true;

  // Enumerate closed subsets of N containing the identity.
  const int others = n.size() - 1;
  std::vector<int> rest;
  for (int x = 0; x < n.size(); ++x)
    if (x != n.identity()) rest.push_back(x);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others); ++mask) {
    std::vector<int> sub = {n.identity()};
    for (int i = 0; i < others; ++i)
      if ((mask >> i) & 1) sub.push_back(rest[i]);
    if (static_cast<int>(sub.size()) < m.size()) continue;

    ElementSubset in_sub(n.size());
    for (int x : sub) in_sub.set(x);
    bool closed = true;
    for (int a : sub) {
      for (int b : sub)
        if (!in_sub.test(n.mul(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;

    std::vector<int> gens = generating_sequence(n, sub);
    ElementSubset gen_set(n.size());
    for (int g : gens) gen_set.set(g);
    ClosureResult witnesses = closure(n, gen_set);
    std::vector<int> gen_pos(n.size(), -1);
    for (std::size_t i = 0; i < gens.size(); ++i) gen_pos[gens[i]] = static_cast<int>(i);

    // All assignments of generator images; each extends along witness words
    // and is then verified pointwise.
    std::vector<int> assign(gens.size(), 0);
    for (;;) {
      std::vector<int> image(n.size(), -1);
      for (int x : sub) {
        int value = m.identity();
        for (int g : witnesses.witness[x]) value = m.mul(value, assign[gen_pos[g]]);
        image[x] = value;
      }
      bool hom = true;
      for (int a : sub) {
        for (int b : sub)
          if (image[n.mul(a, b)] != m.mul(image[a], image[b])) {
            hom = false;
            break;
          }
        if (!hom) break;
      }
      if (hom) {
        ElementSubset hit(m.size());
        for (int x : sub) hit.set(image[x]);
        if (hit.count() == m.size()) return true;
      }
      // Odometer over assignments.
      std::size_t pos = 0;
      while (pos < assign.size() && ++assign[pos] == m.size()) assign[pos++] = 0;
      if (pos == assign.size()) break;
    }
  }
  return false;
}

}  // namespace fo2
