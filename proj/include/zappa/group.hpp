#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zappa {

/// Dense element index; a group of order n has elements 0..n-1.
using Elem = std::uint32_t;

/// Finite group stored as a full Cayley table with identity and inverse
/// tables. Immutable after construction.
class GroupTable {
 public:
  enum class CheckAssociativity { kNo, kYes };

  /// Builds a group from its multiplication table. The identity and inverses
  /// are discovered from the table; closure, a two-sided identity and
  /// two-sided inverses are always checked, associativity only on request.
  explicit GroupTable(std::vector<std::vector<Elem>> mul,
                      std::vector<std::string> labels = {},
                      CheckAssociativity check = CheckAssociativity::kNo);

  std::size_t order() const { return n_; }
  Elem identity() const { return id_; }
  Elem mul(Elem x, Elem y) const { return mul_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem pow(Elem x, std::int64_t e) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem x) const;

  std::vector<std::vector<Elem>> table() const;

  /// First (x, y, z) with (xy)z != x(yz), if any. O(n^3).
  std::optional<std::array<Elem, 3>> associativity_witness() const;
  bool is_associative() const { return !associativity_witness().has_value(); }
  bool is_abelian() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  Elem id_ = 0;
  std::vector<std::string> labels_;
};

/// Sorted, duplicate-free set of elements of a parent group.
class Subset {
 public:
  Subset(const GroupTable& parent, std::vector<Elem> members);

  std::size_t parent_order() const { return parent_order_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::size_t parent_order_;
  std::vector<Elem> members_;
};

/// Z_n with element i the residue i. `symbol` ("a", "b", ...) selects
/// multiplicative labels 1, a, a^2, ...; empty keeps the residues.
GroupTable cyclic_group(std::size_t n, const std::string& symbol = "");

/// G x H with element (g, h) at index g*|H| + h.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

std::uint64_t order_of(const GroupTable& g, Elem x);

bool is_subgroup(const GroupTable& g, const Subset& s);

/// The subgroup generated by `gens`.
Subset generated_subgroup(const GroupTable& g, std::span<const Elem> gens);

Subset intersect(const GroupTable& g, const Subset& a, const Subset& b);

struct UnitGroup {
  std::vector<std::uint64_t> residues;
  std::uint64_t phi = 0;
};

/// Residues in [1, m) coprime to m. The modulus m = 1 is special-cased to the
/// single class {0} with phi(1) = 1.
UnitGroup unit_group(std::uint64_t m);

/// Histogram element order -> count.
using OrderSpectrum = std::map<std::uint64_t, std::uint64_t>;
OrderSpectrum order_spectrum(const GroupTable& g);

}  // namespace zappa
