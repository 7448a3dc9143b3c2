#include "zappa/group.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "zappa/error.hpp"
#include "zappa/number_theory.hpp"

namespace zappa {

GroupTable::GroupTable(std::vector<std::vector<Elem>> mul,
                       std::vector<std::string> labels,
                       CheckAssociativity check)
    : n_(mul.size()), labels_(std::move(labels)) {
  if (n_ == 0) throw Error(ErrorKind::kInvalidOrder, "empty multiplication table");
  mul_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (mul[i].size() != n_) {
      throw Error(ErrorKind::kInvalidGroup, "row " + std::to_string(i) + " has wrong length");
    }
    for (Elem v : mul[i]) {
      if (v >= n_) throw Error(ErrorKind::kInvalidGroup, "table entry out of range");
      mul_.push_back(v);
    }
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error(ErrorKind::kInvalidGroup, "label count does not match order");
  }

  bool found = false;
  for (Elem e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n_ && ok; ++x) ok = this->mul(e, x) == x && this->mul(x, e) == x;
    if (ok) {
      id_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::kInvalidGroup, "no two-sided identity");

  inv_.assign(n_, 0);
  for (Elem x = 0; x < n_; ++x) {
    bool ok = false;
    for (Elem y = 0; y < n_ && !ok; ++y) {
      if (this->mul(x, y) == id_ && this->mul(y, x) == id_) {
        inv_[x] = y;
        ok = true;
      }
    }
    if (!ok) throw Error(ErrorKind::kInvalidGroup, "element " + std::to_string(x) + " has no inverse");
  }

  if (check == CheckAssociativity::kYes) {
    if (auto w = associativity_witness()) {
      std::ostringstream os;
      os << "associativity fails at (" << (*w)[0] << ", " << (*w)[1] << ", " << (*w)[2] << ")";
      throw Error(ErrorKind::kInvalidGroup, os.str());
    }
  }
}

Elem GroupTable::pow(Elem x, std::int64_t e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Elem result = id_;
  Elem base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string GroupTable::label(Elem x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::vector<std::vector<Elem>> GroupTable::table() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(mul_.begin() + i * n_, mul_.begin() + (i + 1) * n_);
  return out;
}

std::optional<std::array<Elem, 3>> GroupTable::associativity_witness() const {
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      const Elem xy = mul(x, y);
      for (Elem z = 0; z < n_; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) return std::array<Elem, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool GroupTable::is_abelian() const {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

Subset::Subset(const GroupTable& parent, std::vector<Elem> members)
    : parent_order_(parent.order()), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorKind::kInvalidGroup, "subset has repeated members");
  }
  if (!members_.empty() && members_.back() >= parent_order_) {
    throw Error(ErrorKind::kInvalidGroup, "subset member out of range");
  }
}

bool Subset::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

GroupTable cyclic_group(std::size_t n, const std::string& symbol) {
  if (n == 0) throw Error(ErrorKind::kInvalidOrder, "cyclic group of order 0");
  std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = static_cast<Elem>((i + j) % n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (symbol.empty()) {
      labels[i] = std::to_string(i);
    } else {
      labels[i] = i == 0 ? "1" : i == 1 ? symbol : symbol + "^" + std::to_string(i);
    }
  }
  return GroupTable(std::move(mul), std::move(labels));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  std::vector<std::vector<Elem>> mul(ng * nh, std::vector<Elem>(ng * nh));
  std::vector<std::string> labels(ng * nh);
  for (Elem g1 = 0; g1 < ng; ++g1) {
    for (Elem h1 = 0; h1 < nh; ++h1) {
      const std::size_t x = g1 * nh + h1;
      labels[x] = "(" + g.label(g1) + "," + h.label(h1) + ")";
      for (Elem g2 = 0; g2 < ng; ++g2)
        for (Elem h2 = 0; h2 < nh; ++h2)
          mul[x][g2 * nh + h2] = static_cast<Elem>(g.mul(g1, g2) * nh + h.mul(h1, h2));
    }
  }
  return GroupTable(std::move(mul), std::move(labels));
}

std::uint64_t order_of(const GroupTable& g, Elem x) {
  std::uint64_t k = 1;
  Elem y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

bool is_subgroup(const GroupTable& g, const Subset& s) {
  if (s.parent_order() != g.order()) return false;
  if (!s.contains(g.identity())) return false;
  for (Elem x : s.members()) {
    if (!s.contains(g.inv(x))) return false;
    for (Elem y : s.members())
      if (!s.contains(g.mul(x, y))) return false;
  }
  return true;
}

Subset generated_subgroup(const GroupTable& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> frontier{g.identity()};
  seen[g.identity()] = 1;
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (Elem s : gens) {
      const Elem y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x)
    if (seen[x]) members.push_back(x);
  return Subset(g, std::move(members));
}

Subset intersect(const GroupTable& g, const Subset& a, const Subset& b) {
  std::vector<Elem> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Subset(g, std::move(out));
}

UnitGroup unit_group(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::kInvalidOrder, "unit group of modulus 0");
  UnitGroup u;
  if (m == 1) {
    u.residues = {0};
    u.phi = 1;
    return u;
  }
  for (std::uint64_t r = 1; r < m; ++r)
    if (nt::gcd(r, m) == 1) u.residues.push_back(r);
  u.phi = u.residues.size();
  return u;
}

OrderSpectrum order_spectrum(const GroupTable& g) {
  OrderSpectrum spec;
  for (Elem x = 0; x < g.order(); ++x) ++spec[order_of(g, x)];
  return spec;
}

}  // namespace zappa
