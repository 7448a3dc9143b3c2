#include "zappa/families.hpp"

#include <algorithm>
#include <set>

#include "zappa/error.hpp"

namespace zappa {

std::string_view to_string(FamilyId id) {
  static constexpr std::string_view names[] = {"P", "Q", "R", "S", "X", "Y", "Z",
                                               "A", "B", "C", "D", "E", "F", "M"};
  return names[static_cast<int>(id)];
}

FamilyId parse_family(std::string_view name) {
  for (FamilyId id : kAllFamilies)
    if (to_string(id) == name) return id;
  throw Error(ErrorKind::kUnknownFamily, "unknown family '" + std::string(name) + "'");
}

FamilyId matrix_family_of(FamilyId id) {
  switch (id) {
    case FamilyId::P: return FamilyId::A;
    case FamilyId::Q: return FamilyId::B;
    case FamilyId::R: return FamilyId::C;
    case FamilyId::S: return FamilyId::D;
    case FamilyId::X: return FamilyId::E;
    case FamilyId::Y: return FamilyId::F;
    case FamilyId::Z: return FamilyId::M;
    default: return id;
  }
}

namespace {

bool is_identity(const MapTable& f) {
  for (Elem u = 0; u < f.size(); ++u)
    if (f(u) != u) return false;
  return true;
}

bool is_const(const MapTable& f, Elem v) {
  return std::all_of(f.tbl.begin(), f.tbl.end(), [v](Elem x) { return x == v; });
}

struct Ctx {
  const MatchedPair& mp;
  const GroupTable& H;
  const GroupTable& K;
  Elem nh, nk;
  explicit Ctx(const MatchedPair& p)
      : mp(p), H(p.h()), K(p.k()), nh(static_cast<Elem>(p.h().order())), nk(static_cast<Elem>(p.k().order())) {}

  template <class Fn>
  bool all_kh(Fn fn) const {
    for (Elem k = 0; k < nk; ++k)
      for (Elem h = 0; h < nh; ++h)
        if (!fn(k, h)) return false;
    return true;
  }

  bool pred_p(const MapTable& al) const {
    return is_automorphism(mp, al) && all_kh([&](Elem k, Elem h) {
             return mp.act(k, al(h)) == al(mp.act(k, h)) && mp.twist(k, al(h)) == mp.twist(k, h);
           });
  }
  bool pred_q(const MapTable& be) const {
    for (Elem k = 0; k < nk; ++k)
      for (Elem kp = 0; kp < nk; ++kp) {
        if (be(K.mul(k, kp)) != H.mul(be(k), mp.act(k, be(kp)))) return false;
        if (mp.twist(k, be(kp)) != k) return false;
      }
    return all_kh([&](Elem k, Elem h) { return be(k) == be(mp.twist(k, h)); });
  }
  bool pred_r(const MapTable& ga) const {
    for (Elem h = 0; h < nh; ++h)
      for (Elem hp = 0; hp < nh; ++hp) {
        if (ga(H.mul(h, hp)) != K.mul(mp.twist(ga(h), hp), ga(hp))) return false;
        if (mp.act(ga(h), hp) != hp) return false;
      }
    return all_kh([&](Elem k, Elem h) { return ga(mp.act(k, h)) == ga(h); });
  }
  bool pred_s(const MapTable& de) const {
    return is_automorphism(mp, de) && all_kh([&](Elem k, Elem h) {
             return mp.act(de(k), h) == mp.act(k, h) && mp.twist(de(k), h) == de(mp.twist(k, h));
           });
  }
  bool a1_a2(const MapTable& al, const MapTable& ga) const {
    for (Elem h = 0; h < nh; ++h)
      for (Elem hp = 0; hp < nh; ++hp) {
        const Elem hh = H.mul(h, hp);
        if (al(hh) != H.mul(al(h), mp.act(ga(h), al(hp)))) return false;
        if (ga(hh) != K.mul(mp.twist(ga(h), al(hp)), ga(hp))) return false;
      }
    return true;
  }
  bool a3_a4(const MapTable& be, const MapTable& de) const {
    for (Elem k = 0; k < nk; ++k)
      for (Elem kp = 0; kp < nk; ++kp) {
        const Elem kk = K.mul(k, kp);
        if (be(kk) != H.mul(be(k), mp.act(de(k), be(kp)))) return false;
        if (de(kk) != K.mul(mp.twist(de(k), be(kp)), de(kp))) return false;
      }
    return true;
  }
  bool pred_x(const MapTable& al, const MapTable& ga, const MapTable& de) const {
    return a1_a2(al, ga) && is_automorphism(mp, de) && all_kh([&](Elem k, Elem h) {
             const Elem kh = mp.act(k, h);
             return mp.act(de(k), al(h)) == al(kh) &&
                    K.mul(mp.twist(de(k), al(h)), ga(h)) == K.mul(ga(kh), de(mp.twist(k, h)));
           });
  }
  bool pred_y(const MapTable& al, const MapTable& be, const MapTable& de) const {
    return is_automorphism(mp, al) && a3_a4(be, de) && all_kh([&](Elem k, Elem h) {
             const Elem kt = mp.twist(k, h);
             return H.mul(be(k), mp.act(de(k), al(h))) == H.mul(al(mp.act(k, h)), be(kt)) &&
                    mp.twist(de(k), al(h)) == de(kt);
           });
  }
  bool pred_z(const MapTable& al, const MapTable& de) const {
    return is_automorphism(mp, al) && is_automorphism(mp, de) && all_kh([&](Elem k, Elem h) {
             return mp.act(de(k), al(h)) == al(mp.act(k, h)) && mp.twist(de(k), al(h)) == de(mp.twist(k, h));
           });
  }
};

bool shape(FamilyId id, const AutMatrix& m, const MatchedPair& mp) {
  const bool a1 = is_identity(m.alpha);
  const bool b0 = is_const(m.beta, mp.h().identity());
  const bool g0 = is_const(m.gamma, mp.k().identity());
  const bool d1 = is_identity(m.delta);
  switch (matrix_family_of(id)) {
    case FamilyId::A: return b0 && g0 && d1;
    case FamilyId::B: return a1 && g0 && d1;
    case FamilyId::C: return a1 && b0 && d1;
    case FamilyId::D: return a1 && b0 && g0;
    case FamilyId::E: return b0;
    case FamilyId::F: return g0;
    case FamilyId::M: return b0 && g0;
    default: return false;
  }
}

}  // namespace

bool in_family(FamilyId id, const AutMatrix& m, const MatchedPair& mp) {
  return shape(id, m, mp) && satisfies_predicate(id, m, mp);
}

bool satisfies_predicate(FamilyId id, const AutMatrix& m, const MatchedPair& mp) {
  const Ctx c(mp);
  switch (id) {
    case FamilyId::P: return c.pred_p(m.alpha);
    case FamilyId::Q: return c.pred_q(m.beta);
    case FamilyId::R: return c.pred_r(m.gamma);
    case FamilyId::S: return c.pred_s(m.delta);
    case FamilyId::X: return c.pred_x(m.alpha, m.gamma, m.delta);
    case FamilyId::Y: return c.pred_y(m.alpha, m.beta, m.delta);
    case FamilyId::Z: return c.pred_z(m.alpha, m.delta);
    default: return true;
  }
}

namespace {

bool closed(const MatrixGroup& g, const std::vector<std::size_t>& members) {
  std::vector<char> in(g.size(), 0);
  for (auto i : members) in[i] = 1;
  if (!in[g.identity()]) return false;
  for (auto i : members)
    for (auto j : members)
      if (!in[g.product(i, j)]) return false;
  return true;
}

}  // namespace

FamilyReport compute_family(FamilyId id, const MatrixGroup& group) {
  FamilyReport r;
  r.id = id;
  for (std::size_t i = 0; i < group.size(); ++i)
    if (in_family(id, group.matrix(i), group.pair())) r.members.push_back(i);
  r.is_subgroup = closed(group, r.members);
  return r;
}

const FamilyReport& Families::at(FamilyId id) const {
  auto it = reports.find(id);
  if (it == reports.end()) {
    throw Error(ErrorKind::kFamiliesNotComputed, "family " + std::string(to_string(id)) + " not computed");
  }
  return it->second;
}

Families compute_families(const MatrixGroup& group) {
  Families f;
  for (FamilyId id : kAllFamilies) f.reports.emplace(id, compute_family(id, group));
  return f;
}

namespace {

struct Cyclic {
  std::vector<Elem> pw;  // pw[l] = g^l
  std::vector<Elem> autos;  // generator images giving automorphisms
};

Cyclic cyclic_data(const GroupTable& g) {
  const auto gen = cyclic_generator(g);
  if (!gen) throw Error(ErrorKind::kNotTwoGenerated, "factor is not cyclic");
  Cyclic c;
  c.pw.resize(g.order());
  Elem y = g.identity();
  for (std::size_t l = 0; l < g.order(); ++l) {
    c.pw[l] = y;
    y = g.mul(y, *gen);
  }
  for (Elem x = 0; x < g.order(); ++x)
    if (order_of(g, x) == g.order()) c.autos.push_back(x);
  return c;
}

MapTable power_map(const GroupTable& src, const Cyclic& cs, const GroupTable& dst, Elem image, Side dom,
                   Side cod) {
  MapTable f{dom, cod, std::vector<Elem>(src.order())};
  Elem y = dst.identity();
  for (std::size_t l = 0; l < src.order(); ++l) {
    f.tbl[cs.pw[l]] = y;
    y = dst.mul(y, image);
  }
  return f;
}

// All maps of each family, built from generator images and kept when the
// full predicate holds. Returned as matrices with the other slots fixed.
std::vector<AutMatrix> construct_family(FamilyId id, const MatchedPair& mp) {
  const Ctx c(mp);
  const Cyclic ch = cyclic_data(c.H);
  const Cyclic ck = cyclic_data(c.K);
  const AutMatrix id_m = identity_matrix(mp);
  std::vector<AutMatrix> out;

  auto aut_h = [&](Elem x) { return power_map(c.H, ch, c.H, x, Side::kH, Side::kH); };
  auto aut_k = [&](Elem x) { return power_map(c.K, ck, c.K, x, Side::kK, Side::kK); };

  // beta(a^{l+1}) = beta(a)(delta(a).beta(a^l)), delta(a^{l+1}) = delta(a)^{beta(a^l)} delta(a^l)
  auto k_side = [&](Elem be_a, Elem de_a, bool delta_free) {
    MapTable be{Side::kK, Side::kH, std::vector<Elem>(c.nk)};
    MapTable de{Side::kK, Side::kK, std::vector<Elem>(c.nk)};
    be.tbl[ck.pw[0]] = c.H.identity();
    de.tbl[ck.pw[0]] = c.K.identity();
    for (Elem l = 0; l + 1 < c.nk; ++l) {
      const Elem bl = be.tbl[ck.pw[l]];
      be.tbl[ck.pw[l + 1]] = c.H.mul(be_a, mp.act(de_a, bl));
      de.tbl[ck.pw[l + 1]] = delta_free ? c.K.mul(mp.twist(de_a, bl), de.tbl[ck.pw[l]]) : 0;
    }
    return std::pair{be, de};
  };
  // alpha(b^{l+1}) = alpha(b)(gamma(b).alpha(b^l)), gamma(b^{l+1}) = gamma(b)^{alpha(b^l)} gamma(b^l)
  auto h_side = [&](Elem al_b, Elem ga_b) {
    MapTable al{Side::kH, Side::kH, std::vector<Elem>(c.nh)};
    MapTable ga{Side::kH, Side::kK, std::vector<Elem>(c.nh)};
    al.tbl[ch.pw[0]] = c.H.identity();
    ga.tbl[ch.pw[0]] = c.K.identity();
    for (Elem l = 0; l + 1 < c.nh; ++l) {
      const Elem al_l = al.tbl[ch.pw[l]];
      al.tbl[ch.pw[l + 1]] = c.H.mul(al_b, mp.act(ga_b, al_l));
      ga.tbl[ch.pw[l + 1]] = c.K.mul(mp.twist(ga_b, al_l), ga.tbl[ch.pw[l]]);
    }
    return std::pair{al, ga};
  };

  switch (id) {
    case FamilyId::P:
      for (Elem x : ch.autos) {
        AutMatrix m = id_m;
        m.alpha = aut_h(x);
        if (c.pred_p(m.alpha)) out.push_back(m);
      }
      break;
    case FamilyId::S:
      for (Elem y : ck.autos) {
        AutMatrix m = id_m;
        m.delta = aut_k(y);
        if (c.pred_s(m.delta)) out.push_back(m);
      }
      break;
    case FamilyId::Z:
      for (Elem x : ch.autos)
        for (Elem y : ck.autos) {
          AutMatrix m = id_m;
          m.alpha = aut_h(x);
          m.delta = aut_k(y);
          if (c.pred_z(m.alpha, m.delta)) out.push_back(m);
        }
      break;
    case FamilyId::Q:
      // with delta = 1 the recursion reads beta(a^{l+1}) = beta(a)(a.beta(a^l))
      for (Elem x = 0; x < c.nh; ++x) {
        AutMatrix m = id_m;
        m.beta = k_side(x, ck.pw[1 % c.nk], false).first;
        if (c.pred_q(m.beta)) out.push_back(m);
      }
      break;
    case FamilyId::R:
      for (Elem y = 0; y < c.nk; ++y) {
        AutMatrix m = id_m;
        MapTable ga{Side::kH, Side::kK, std::vector<Elem>(c.nh)};
        ga.tbl[ch.pw[0]] = c.K.identity();
        for (Elem l = 0; l + 1 < c.nh; ++l)
          ga.tbl[ch.pw[l + 1]] = c.K.mul(mp.twist(ga.tbl[ch.pw[l]], ch.pw[1 % c.nh]), y);
        m.gamma = ga;
        if (c.pred_r(m.gamma)) out.push_back(m);
      }
      break;
    case FamilyId::X:
      for (Elem x = 0; x < c.nh; ++x)
        for (Elem y = 0; y < c.nk; ++y) {
          auto [al, ga] = h_side(x, y);
          for (Elem z : ck.autos) {
            AutMatrix m = id_m;
            m.alpha = al;
            m.gamma = ga;
            m.delta = aut_k(z);
            if (c.pred_x(m.alpha, m.gamma, m.delta)) out.push_back(m);
          }
        }
      break;
    case FamilyId::Y:
      for (Elem x : ch.autos)
        for (Elem y = 0; y < c.nh; ++y)
          for (Elem z = 0; z < c.nk; ++z) {
            auto [be, de] = k_side(y, z, true);
            AutMatrix m = id_m;
            m.alpha = aut_h(x);
            m.beta = be;
            m.delta = de;
            if (c.pred_y(m.alpha, m.beta, m.delta)) out.push_back(m);
          }
      break;
    default:
      throw Error(ErrorKind::kUnknownFamily, "only P..Z are map families");
  }
  return out;
}

}  // namespace

std::vector<FamilyCrossCheck> cross_check_families(const MatrixGroup& group, const Families& fam) {
  std::vector<FamilyCrossCheck> out;
  for (FamilyId id : {FamilyId::P, FamilyId::Q, FamilyId::R, FamilyId::S, FamilyId::X, FamilyId::Y,
                      FamilyId::Z}) {
    FamilyCrossCheck cc{id};
    const auto built = construct_family(id, group.pair());
    cc.constructed = built.size();
    std::set<std::size_t> found;
    for (const auto& m : built) {
      if (auto idx = group.index_of(m)) {
        found.insert(*idx);
      } else {
        ++cc.outside_group;
      }
    }
    const auto& filtered = fam.at(id).members;
    cc.filters_agree = filtered == fam.at(matrix_family_of(id)).members &&
                       std::set<std::size_t>(filtered.begin(), filtered.end()) == found;
    out.push_back(cc);
  }
  return out;
}

Subset stab_h_of_k(const MatchedPair& mp) {
  std::vector<Elem> out;
  for (Elem h = 0; h < mp.h().order(); ++h) {
    bool fixes = true;
    for (Elem k = 0; k < mp.k().order() && fixes; ++k) fixes = mp.twist(k, h) == k;
    if (fixes) out.push_back(h);
  }
  return Subset(mp.h(), std::move(out));
}

Subset stab_k_of_h(const MatchedPair& mp) {
  std::vector<Elem> out;
  for (Elem k = 0; k < mp.k().order(); ++k) {
    bool fixes = true;
    for (Elem h = 0; h < mp.h().order() && fixes; ++h) fixes = mp.act(k, h) == h;
    if (fixes) out.push_back(k);
  }
  return Subset(mp.k(), std::move(out));
}

ReducedFormCheck check_reduced_forms(const MatrixGroup& group) {
  const MatchedPair& mp = group.pair();
  const Ctx c(mp);
  const Cyclic ch = cyclic_data(c.H);
  const Cyclic ck = cyclic_data(c.K);
  const Subset sh = stab_h_of_k(mp);
  const Subset sk = stab_k_of_h(mp);

  std::set<std::vector<Elem>> q_raw, q_red, r_raw, r_red;
  for (const auto& m : construct_family(FamilyId::Q, mp)) q_raw.insert(m.beta.tbl);
  for (const auto& m : construct_family(FamilyId::R, mp)) r_raw.insert(m.gamma.tbl);

  for (Elem x : sh.members()) {
    const MapTable be = power_map(c.K, ck, c.H, x, Side::kK, Side::kH);
    if (is_homomorphism(mp, be)) q_red.insert(be.tbl);
  }
  for (Elem y : sk.members()) {
    MapTable ga{Side::kH, Side::kK, std::vector<Elem>(c.nh)};
    ga.tbl[ch.pw[0]] = c.K.identity();
    for (Elem l = 0; l + 1 < c.nh; ++l)
      ga.tbl[ch.pw[l + 1]] = c.K.mul(mp.twist(ga.tbl[ch.pw[l]], ch.pw[1 % c.nh]), y);
    bool ok = true;
    for (Elem h = 0; h < c.nh && ok; ++h) {
      ok = sk.contains(ga(h));
      for (Elem hp = 0; hp < c.nh && ok; ++hp) ok = ga(c.H.mul(h, hp)) == c.K.mul(mp.twist(ga(h), hp), ga(hp));
    }
    ok = ok && c.all_kh([&](Elem k, Elem h) { return ga(mp.act(k, h)) == ga(h); });
    if (ok) r_red.insert(ga.tbl);
  }

  auto common = [](const auto& a, const auto& b) {
    std::size_t n = 0;
    for (const auto& x : a) n += b.count(x);
    return n;
  };
  ReducedFormCheck r;
  r.q_raw = q_raw.size();
  r.q_reduced = q_red.size();
  r.q_common = common(q_raw, q_red);
  r.r_raw = r_raw.size();
  r.r_reduced = r_red.size();
  r.r_common = common(r_raw, r_red);
  return r;
}

bool normalizes(const MatrixGroup& group, const std::vector<std::size_t>& conj,
                const std::vector<std::size_t>& target) {
  std::vector<char> in(group.size(), 0);
  for (auto i : target) in[i] = 1;
  for (auto g : conj) {
    const auto gi = group.inverse(g);
    for (auto t : target)
      if (!in[group.product(group.product(g, t), gi)]) return false;
  }
  return true;
}

namespace {

ConditionResult check(std::string name, bool ok, std::vector<std::vector<Elem>> witnesses = {}) {
  ConditionResult c{std::move(name), {}};
  c.passed = ok;
  c.witnesses = std::move(witnesses);
  return c;
}

std::vector<std::size_t> everything(const MatrixGroup& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

}  // namespace

DecompositionReport verify_ABCD(const MatrixGroup& group, const Families& fam) {
  const MatchedPair& mp = group.pair();
  if (!mp.h().is_abelian() || !mp.k().is_abelian()) {
    throw Error(ErrorKind::kFamilyInapplicable, "ABCD decomposition needs abelian factors");
  }
  const auto& A = fam.at(FamilyId::A).members;
  const auto& B = fam.at(FamilyId::B).members;
  const auto& C = fam.at(FamilyId::C).members;
  const auto& D = fam.at(FamilyId::D).members;
  const auto& Q = fam.at(FamilyId::Q).members;
  const auto& R = fam.at(FamilyId::R).members;

  DecompositionReport rep;
  rep.claim = "abcd";
  rep.factors = {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D};

  bool subgroups = true;
  std::vector<std::vector<Elem>> bad_sub;
  for (FamilyId id : rep.factors)
    if (!fam.at(id).is_subgroup) {
      subgroups = false;
      bad_sub.push_back({static_cast<Elem>(id)});
    }
  rep.checks.push_back(check("factors-are-subgroups", subgroups, bad_sub));

  std::vector<char> covered(group.size(), 0);
  std::vector<std::vector<Elem>> outside;
  for (auto a : A)
    for (auto b : B) {
      std::size_t ab;
      try {
        ab = group.product(a, b);
      } catch (const Error&) {
        outside.push_back({static_cast<Elem>(a), static_cast<Elem>(b)});
        continue;
      }
      for (auto c : C) {
        std::size_t abc;
        try {
          abc = group.product(ab, c);
        } catch (const Error&) {
          outside.push_back({static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)});
          continue;
        }
        for (auto d : D) {
          try {
            covered[group.product(abc, d)] = 1;
          } catch (const Error&) {
            if (outside.empty())
              outside.push_back({static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c),
                                 static_cast<Elem>(d)});
          }
        }
      }
    }
  rep.checks.push_back(check("products-in-group", outside.empty(), outside));

  // (1 - beta gamma)(h) = h (beta(gamma(h)))^-1
  const Ctx c(mp);
  std::vector<std::vector<Elem>> hyp_fail;
  for (auto qi : Q)
    for (auto ri : R) {
      const MapTable bg = map_compose(group.matrix(qi).beta, group.matrix(ri).gamma);
      const MapTable f = map_add(mp, identity_map(mp, Side::kH), map_neg(mp, bg));
      if (!c.pred_p(f) && hyp_fail.empty()) hyp_fail.push_back({static_cast<Elem>(qi), static_cast<Elem>(ri)});
    }
  rep.checks.push_back(check("one-minus-beta-gamma-in-P", hyp_fail.empty(), hyp_fail));

  const auto n = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 1));
  std::vector<std::vector<Elem>> missing;
  for (std::size_t i = 0; i < covered.size() && missing.empty(); ++i)
    if (!covered[i]) missing.push_back({static_cast<Elem>(i)});
  rep.checks.push_back(check("product-covers", n == group.size(), missing));
  return rep;
}

DecompositionReport verify_semidirect_chain(const MatrixGroup& group, const Families& fam,
                                            std::string_view chain) {
  DecompositionReport rep;
  rep.claim = std::string(chain);
  std::vector<std::size_t> ambient;
  FamilyId n_id, q_id;
  bool direct = false;
  if (chain == "EB") {
    ambient = everything(group);
    n_id = FamilyId::E;
    q_id = FamilyId::B;
  } else if (chain == "CM") {
    ambient = fam.at(FamilyId::E).members;
    n_id = FamilyId::C;
    q_id = FamilyId::M;
  } else if (chain == "BM") {
    ambient = fam.at(FamilyId::F).members;
    n_id = FamilyId::B;
    q_id = FamilyId::M;
  } else if (chain == "FC") {
    ambient = everything(group);
    n_id = FamilyId::F;
    q_id = FamilyId::C;
  } else if (chain == "AD") {
    ambient = fam.at(FamilyId::M).members;
    n_id = FamilyId::A;
    q_id = FamilyId::D;
    direct = true;
  } else {
    throw Error(ErrorKind::kUnknownFamily, "unknown chain '" + std::string(chain) + "'");
  }
  rep.factors = {n_id, q_id};
  const auto& N = fam.at(n_id).members;
  const auto& Q = fam.at(q_id).members;

  rep.checks.push_back(check("factors-are-subgroups", fam.at(n_id).is_subgroup && fam.at(q_id).is_subgroup));

  std::vector<char> in_amb(group.size(), 0);
  for (auto i : ambient) in_amb[i] = 1;
  bool inside = true;
  for (auto i : N) inside = inside && in_amb[i];
  for (auto i : Q) inside = inside && in_amb[i];
  rep.checks.push_back(check("factors-inside", inside));

  rep.checks.push_back(check("normal", inside && normalizes(group, ambient, N)));
  if (direct) rep.checks.push_back(check("second-normal", inside && normalizes(group, ambient, Q)));

  std::vector<std::size_t> meet;
  std::set_intersection(N.begin(), N.end(), Q.begin(), Q.end(), std::back_inserter(meet));
  rep.checks.push_back(check("trivial-intersection", meet.size() == 1 && meet[0] == group.identity()));

  std::set<std::size_t> prod;
  for (auto x : N)
    for (auto y : Q) prod.insert(group.product(x, y));
  rep.checks.push_back(check("product-covers", prod == std::set<std::size_t>(ambient.begin(), ambient.end()) &&
                                                   N.size() * Q.size() == ambient.size()));
  return rep;
}

}  // namespace zappa
