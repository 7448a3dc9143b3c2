// Independent reference computations used by the tests. Nothing here calls
// into the library beyond the plain GroupTable container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "zappa/group.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& f, const Perm& g) {  // f after g
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

// Closure of a set of permutations, sorted, with multiplication table.
inline zappa::GroupTable perm_group(const std::vector<Perm>& gens) {
  std::vector<Perm> elems;
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm p = compose(elems[i], g);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
    }
  }
  std::sort(elems.begin(), elems.end());
  std::vector<std::vector<zappa::Elem>> mul(elems.size(), std::vector<zappa::Elem>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto it = std::find(elems.begin(), elems.end(), compose(elems[i], elems[j]));
      mul[i][j] = static_cast<zappa::Elem>(it - elems.begin());
    }
  return zappa::GroupTable(std::move(mul));
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t totient_by_scan(std::uint64_t m) {
  std::uint64_t c = 0;
  for (std::uint64_t r = 1; r <= m; ++r)
    if (gcd(r, m) == 1) ++c;
  return c;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < e; ++i) r = r * b % m;
  return r;
}

inline std::map<std::uint64_t, std::uint64_t> spectrum(const zappa::GroupTable& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (zappa::Elem x = 0; x < g.order(); ++x) {
    std::uint64_t k = 1;
    for (zappa::Elem y = x; y != g.identity(); y = g.mul(y, x)) ++k;
    ++out[k];
  }
  return out;
}

// Automorphism count of an arbitrary table group: pick generators greedily,
// try every image tuple with matching element orders, extend along a
// spanning tree of words and keep the maps that are bijective homomorphisms.
inline std::uint64_t element_order(const zappa::GroupTable& g, zappa::Elem x) {
  std::uint64_t k = 1;
  for (zappa::Elem y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

inline std::uint64_t aut_count(const zappa::GroupTable& g) {
  using zappa::Elem;
  const std::size_t n = g.order();
  std::vector<Elem> gens;
  std::vector<char> span(n, 0);
  span[g.identity()] = 1;
  auto close = [&] {
    std::vector<Elem> frontier;
    for (Elem x = 0; x < n; ++x)
      if (span[x]) frontier.push_back(x);
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (Elem s : gens) {
        const Elem y = g.mul(frontier[i], s);
        if (!span[y]) {
          span[y] = 1;
          frontier.push_back(y);
        }
      }
  };
  for (Elem x = 0; x < n; ++x)
    if (!span[x]) {
      gens.push_back(x);
      close();
    }
  // word tree: each element = parent * gens[via]
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<Elem> order{g.identity()};
  std::vector<char> seen(n, 0);
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = g.mul(order[i], gens[j]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = static_cast<int>(order[i]);
        via[y] = static_cast<int>(j);
        order.push_back(y);
      }
    }
  std::vector<std::uint64_t> ord(n);
  for (Elem x = 0; x < n; ++x) ord[x] = element_order(g, x);

  std::uint64_t count = 0;
  std::vector<Elem> img(gens.size());
  std::vector<Elem> f(n);
  auto test = [&] {
    f[g.identity()] = g.identity();
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Elem y = order[i];
      f[y] = g.mul(f[parent[y]], img[via[y]]);
    }
    std::vector<char> hit(n, 0);
    for (Elem x = 0; x < n; ++x) {
      if (hit[f[x]]) return false;
      hit[f[x]] = 1;
    }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (f[g.mul(x, y)] != g.mul(f[x], f[y])) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == gens.size()) {
      if (test()) ++count;
      return;
    }
    for (Elem c = 0; c < n; ++c)
      if (ord[c] == ord[gens[j]]) {
        img[j] = c;
        self(self, j + 1);
      }
  };
  rec(rec, 0);
  return count;
}

}  // namespace oracle
