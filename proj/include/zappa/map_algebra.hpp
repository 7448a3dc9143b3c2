#pragma once

#include <cstddef>
#include <vector>

#include "zappa/group.hpp"
#include "zappa/matched_pair.hpp"

namespace zappa {

/// Which factor of the ambient matched pair a map reads from or lands in.
enum class Side { kH, kK };

/// A total function between the element sets of H and/or K, not necessarily
/// a homomorphism.
struct MapTable {
  Side dom = Side::kH;
  Side cod = Side::kH;
  std::vector<Elem> tbl;

  Elem operator()(Elem u) const { return tbl[u]; }
  std::size_t size() const { return tbl.size(); }
  friend bool operator==(const MapTable&, const MapTable&) = default;
};

const GroupTable& side_group(const MatchedPair& mp, Side s);

/// Throws kMapAlgebraType if the table does not fit the declared sides.
void check_signature(const MatchedPair& mp, const MapTable& f);

MapTable identity_map(const MatchedPair& mp, Side s);
/// The constant map onto the identity, written 0.
MapTable zero_map(const MatchedPair& mp, Side dom, Side cod);

/// (f + g)(u) = f(u) g(u)
MapTable map_add(const MatchedPair& mp, const MapTable& f, const MapTable& g);
/// (-f)(u) = f(u)^-1
MapTable map_neg(const MatchedPair& mp, const MapTable& f);
/// (eta f)(u) = eta(f(u))
MapTable map_compose(const MapTable& eta, const MapTable& f);
/// (f . g)(u) = f(u) . g(u), with f K-valued and g H-valued; lands in H.
MapTable map_dot(const MatchedPair& mp, const MapTable& f, const MapTable& g);
/// f^g(u) = f(u)^{g(u)}, with f K-valued and g H-valued; lands in K.
MapTable map_exp(const MatchedPair& mp, const MapTable& f, const MapTable& g);

Subset kernel_of(const MatchedPair& mp, const MapTable& f);
Subset image_of(const MatchedPair& mp, const MapTable& f);
bool is_bijective(const MapTable& f);
bool is_homomorphism(const MatchedPair& mp, const MapTable& f);
bool is_automorphism(const MatchedPair& mp, const MapTable& f);

}  // namespace zappa
