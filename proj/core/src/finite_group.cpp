#include "galbrauer/finite_group.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace galbrauer {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table,
                                    std::size_t order_cap) {
  const std::size_t n = table.size();
  if (n == 0)
    throw Error("no-identity", "multiplication table is empty");
  if (n > order_cap)
    throw Error("order-cap-exceeded",
                "group order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(order_cap));
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error("no-identity", "multiplication table is not square");
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw Error("no-identity",
                    "table entry out of range at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a)
      if (table[e][a] != a || table[a][e] != a) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (!identity)
    throw Error("no-identity", "no two-sided identity element");

  std::vector<std::size_t> inverse(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == *identity && table[b][a] == *identity) {
        inverse[a] = b;
        found = true;
        break;
      }
    if (!found)
      throw Error("no-inverse",
                  "element " + std::to_string(a) + " has no inverse");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error("not-associative",
                      "associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");

  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = *identity;
  g.inverse_ = std::move(inverse);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(
    const std::vector<std::vector<std::size_t>>& generators,
    std::size_t points, std::size_t order_cap) {
  using Perm = std::vector<std::size_t>;
  for (const Perm& p : generators) {
    if (p.size() != points)
      throw Error("not-a-permutation", "generator has wrong length");
    std::vector<bool> hit(points, false);
    for (std::size_t x : p) {
      if (x >= points || hit[x])
        throw Error("not-a-permutation",
                    "generator is not a bijection on the points");
      hit[x] = true;
    }
  }

  Perm id(points);
  for (std::size_t x = 0; x < points; ++x)
    id[x] = x;

  // Breadth-first closure; compose(a, b)(x) = a(b(x)).
  auto compose = [points](const Perm& a, const Perm& b) {
    Perm r(points);
    for (std::size_t x = 0; x < points; ++x)
      r[x] = a[b[x]];
    return r;
  };

  std::vector<Perm> elements{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Perm& g : generators) {
      Perm next = compose(g, elements[head]);
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
        if (elements.size() > order_cap)
          throw Error("order-cap-exceeded",
                      "permutation closure exceeds cap " +
                          std::to_string(order_cap));
      }
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> table(n,
                                              std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = index.at(compose(elements[a], elements[b]));
  return from_table(std::move(table), order_cap);
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n, std::size_t order_cap) {
  std::vector<std::vector<std::size_t>> table(n,
                                              std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a][b] = (a + b) % n;
  return from_table(std::move(table), order_cap);
}

FiniteGroup FiniteGroup::klein_four() {
  return from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t x = a;
  std::size_t k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<std::size_t> FiniteGroup::cyclic_generator() const {
  for (std::size_t a = 0; a < order(); ++a)
    if (element_order(a) == order())
      return a;
  return std::nullopt;
}

} // namespace galbrauer
