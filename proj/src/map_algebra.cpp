#include "zappa/map_algebra.hpp"

#include "zappa/error.hpp"

namespace zappa {

const GroupTable& side_group(const MatchedPair& mp, Side s) { return s == Side::kH ? mp.h() : mp.k(); }

void check_signature(const MatchedPair& mp, const MapTable& f) {
  if (f.tbl.size() != side_group(mp, f.dom).order()) {
    throw Error(ErrorKind::kMapAlgebraType, "map table length does not match its domain");
  }
  const std::size_t n = side_group(mp, f.cod).order();
  for (Elem v : f.tbl)
    if (v >= n) throw Error(ErrorKind::kMapAlgebraType, "map value outside its codomain");
}

MapTable identity_map(const MatchedPair& mp, Side s) {
  MapTable f{s, s, std::vector<Elem>(side_group(mp, s).order())};
  for (Elem u = 0; u < f.tbl.size(); ++u) f.tbl[u] = u;
  return f;
}

MapTable zero_map(const MatchedPair& mp, Side dom, Side cod) {
  return {dom, cod, std::vector<Elem>(side_group(mp, dom).order(), side_group(mp, cod).identity())};
}

MapTable map_add(const MatchedPair& mp, const MapTable& f, const MapTable& g) {
  if (f.dom != g.dom || f.cod != g.cod || f.size() != g.size()) {
    throw Error(ErrorKind::kMapAlgebraType, "sum of maps with different signatures");
  }
  const GroupTable& v = side_group(mp, f.cod);
  MapTable out{f.dom, f.cod, std::vector<Elem>(f.size())};
  for (Elem u = 0; u < f.size(); ++u) out.tbl[u] = v.mul(f(u), g(u));
  return out;
}

MapTable map_neg(const MatchedPair& mp, const MapTable& f) {
  const GroupTable& v = side_group(mp, f.cod);
  MapTable out{f.dom, f.cod, std::vector<Elem>(f.size())};
  for (Elem u = 0; u < f.size(); ++u) out.tbl[u] = v.inv(f(u));
  return out;
}

MapTable map_compose(const MapTable& eta, const MapTable& f) {
  if (eta.dom != f.cod) throw Error(ErrorKind::kMapAlgebraType, "composition of incompatible maps");
  MapTable out{f.dom, eta.cod, std::vector<Elem>(f.size())};
  for (Elem u = 0; u < f.size(); ++u) {
    if (f(u) >= eta.size()) throw Error(ErrorKind::kMapAlgebraType, "composition of incompatible maps");
    out.tbl[u] = eta(f(u));
  }
  return out;
}

namespace {

void check_action_operands(const MapTable& f, const MapTable& g) {
  if (f.cod != Side::kK || g.cod != Side::kH) {
    throw Error(ErrorKind::kMapAlgebraType, "action needs a K-valued map and an H-valued map");
  }
  if (f.dom != g.dom || f.size() != g.size()) {
    throw Error(ErrorKind::kMapAlgebraType, "action operands have different domains");
  }
}

}  // namespace

MapTable map_dot(const MatchedPair& mp, const MapTable& f, const MapTable& g) {
  check_action_operands(f, g);
  MapTable out{f.dom, Side::kH, std::vector<Elem>(f.size())};
  for (Elem u = 0; u < f.size(); ++u) out.tbl[u] = mp.act(f(u), g(u));
  return out;
}

MapTable map_exp(const MatchedPair& mp, const MapTable& f, const MapTable& g) {
  check_action_operands(f, g);
  MapTable out{f.dom, Side::kK, std::vector<Elem>(f.size())};
  for (Elem u = 0; u < f.size(); ++u) out.tbl[u] = mp.twist(f(u), g(u));
  return out;
}

Subset kernel_of(const MatchedPair& mp, const MapTable& f) {
  const Elem e = side_group(mp, f.cod).identity();
  std::vector<Elem> members;
  for (Elem u = 0; u < f.size(); ++u)
    if (f(u) == e) members.push_back(u);
  return Subset(side_group(mp, f.dom), std::move(members));
}

Subset image_of(const MatchedPair& mp, const MapTable& f) {
  const GroupTable& v = side_group(mp, f.cod);
  std::vector<char> hit(v.order(), 0);
  for (Elem x : f.tbl) hit[x] = 1;
  std::vector<Elem> members;
  for (Elem x = 0; x < v.order(); ++x)
    if (hit[x]) members.push_back(x);
  return Subset(v, std::move(members));
}

bool is_bijective(const MapTable& f) {
  std::vector<char> hit(f.size(), 0);
  for (Elem x : f.tbl) {
    if (x >= f.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

bool is_homomorphism(const MatchedPair& mp, const MapTable& f) {
  const GroupTable& u = side_group(mp, f.dom);
  const GroupTable& v = side_group(mp, f.cod);
  for (Elem x = 0; x < u.order(); ++x)
    for (Elem y = 0; y < u.order(); ++y)
      if (f(u.mul(x, y)) != v.mul(f(x), f(y))) return false;
  return true;
}

bool is_automorphism(const MatchedPair& mp, const MapTable& f) {
  return f.dom == f.cod && is_bijective(f) && is_homomorphism(mp, f);
}

}  // namespace zappa
