#include "zappa/automorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "zappa/error.hpp"

namespace zappa {

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  Automorphism out{std::vector<Elem>(inner.perm.size())};
  for (std::size_t x = 0; x < inner.perm.size(); ++x) out.perm[x] = outer.perm[inner.perm[x]];
  return out;
}

std::size_t default_max_group_order() {
  if (const char* env = std::getenv("ZAPPA_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 512;
}

std::optional<Elem> cyclic_generator(const GroupTable& g) {
  for (Elem x = 0; x < g.order(); ++x)
    if (order_of(g, x) == g.order()) return x;
  return std::nullopt;
}

namespace {

std::vector<Elem> powers(const GroupTable& g, Elem x, std::size_t count) {
  std::vector<Elem> out(count);
  Elem y = g.identity();
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = y;
    y = g.mul(y, x);
  }
  return out;
}

}  // namespace

std::vector<Automorphism> brute_force_aut(const ZSGroup& zs, const AutOptions& opts) {
  const GroupTable& g = zs.group();
  const std::size_t n = g.order();
  if (n > opts.max_order) {
    throw Error(ErrorKind::kScale, "group order " + std::to_string(n) + " exceeds the brute-force cap " +
                                       std::to_string(opts.max_order));
  }
  const GroupTable& H = zs.pair().h();
  const GroupTable& K = zs.pair().k();
  const auto hgen = cyclic_generator(H);
  const auto kgen = cyclic_generator(K);
  if (!hgen || !kgen) throw Error(ErrorKind::kNotTwoGenerated, "factors must be cyclic");
  const std::size_t nh = H.order();
  const std::size_t nk = K.order();
  const Elem b = zs.embed_h(*hgen);
  const Elem a = zs.embed_k(*kgen);

  // discrete logs: element (h, k) = b^{log_h[h]} a^{log_k[k]}
  std::vector<Elem> log_h(nh), log_k(nk);
  {
    const auto ph = powers(H, *hgen, nh);
    for (Elem i = 0; i < nh; ++i) log_h[ph[i]] = i;
    const auto pk = powers(K, *kgen, nk);
    for (Elem j = 0; j < nk; ++j) log_k[pk[j]] = j;
  }

  std::vector<Elem> xs, ys;
  for (Elem x = 0; x < n; ++x) {
    const auto o = order_of(g, x);
    if (o == nh) xs.push_back(x);
    if (o == nk) ys.push_back(x);
  }

  auto search = [&](std::size_t begin, std::size_t stride, std::vector<Automorphism>& found) {
    std::vector<Elem> f(n);
    std::vector<char> hit(n);
    for (std::size_t xi = begin; xi < xs.size(); xi += stride) {
      const Elem x = xs[xi];
      const auto xp = powers(g, x, nh);
      for (Elem y : ys) {
        const auto yp = powers(g, y, nk);
        std::fill(hit.begin(), hit.end(), 0);
        bool ok = true;
        for (Elem h = 0; h < nh && ok; ++h) {
          for (Elem k = 0; k < nk; ++k) {
            const Elem v = g.mul(xp[log_h[h]], yp[log_k[k]]);
            if (hit[v]) {
              ok = false;
              break;
            }
            hit[v] = 1;
            f[zs.element(h, k)] = v;
          }
        }
        if (!ok) continue;
        // f(zb) = f(z)x and f(za) = f(z)y for all z makes f multiplicative.
        for (Elem z = 0; z < n && ok; ++z) {
          ok = f[g.mul(z, b)] == g.mul(f[z], x) && f[g.mul(z, a)] == g.mul(f[z], y);
        }
        if (!ok) continue;
        for (Elem u = 0; u < n && ok; ++u)
          for (Elem v = 0; v < n; ++v)
            if (f[g.mul(u, v)] != g.mul(f[u], f[v])) {
              ok = false;
              break;
            }
        if (ok) found.push_back(Automorphism{f});
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(xs.size())));
  std::vector<std::vector<Automorphism>> parts(threads);
  if (threads == 1) {
    search(0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(search, t, threads, std::ref(parts[t]));
    for (auto& th : pool) th.join();
  }
  std::vector<Automorphism> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

AutMatrix identity_matrix(const MatchedPair& mp) {
  return {identity_map(mp, Side::kH), zero_map(mp, Side::kK, Side::kH), zero_map(mp, Side::kH, Side::kK),
          identity_map(mp, Side::kK)};
}

AutMatrix aut_to_matrix(const Automorphism& a, const ZSGroup& g) {
  const MatchedPair& mp = g.pair();
  const std::size_t nh = mp.h().order();
  const std::size_t nk = mp.k().order();
  if (a.perm.size() != g.group().order()) throw Error(ErrorKind::kMalformedPair, "permutation size mismatch");
  AutMatrix m{{Side::kH, Side::kH, std::vector<Elem>(nh)},
              {Side::kK, Side::kH, std::vector<Elem>(nk)},
              {Side::kH, Side::kK, std::vector<Elem>(nh)},
              {Side::kK, Side::kK, std::vector<Elem>(nk)}};
  for (Elem h = 0; h < nh; ++h) {
    const auto [x, y] = g.factor(a.perm[g.embed_h(h)]);
    m.alpha.tbl[h] = x;
    m.gamma.tbl[h] = y;
  }
  for (Elem k = 0; k < nk; ++k) {
    const auto [x, y] = g.factor(a.perm[g.embed_k(k)]);
    m.beta.tbl[k] = x;
    m.delta.tbl[k] = y;
  }
  return m;
}

namespace {

void check_shapes(const AutMatrix& m, const MatchedPair& mp) {
  if (m.alpha.dom != Side::kH || m.alpha.cod != Side::kH || m.beta.dom != Side::kK ||
      m.beta.cod != Side::kH || m.gamma.dom != Side::kH || m.gamma.cod != Side::kK ||
      m.delta.dom != Side::kK || m.delta.cod != Side::kK) {
    throw Error(ErrorKind::kMapAlgebraType, "matrix entries have the wrong signature");
  }
  check_signature(mp, m.alpha);
  check_signature(mp, m.beta);
  check_signature(mp, m.gamma);
  check_signature(mp, m.delta);
}

std::string failed_names(const ConditionReport& r) {
  std::string out;
  for (const auto& c : r.conditions)
    if (!c.passed) out += (out.empty() ? "" : ",") + c.name;
  return out;
}

}  // namespace

ConditionReport check_A_conditions(const AutMatrix& m, const MatchedPair& mp, WitnessMode mode) {
  check_shapes(m, mp);
  const GroupTable& H = mp.h();
  const GroupTable& K = mp.k();
  const Elem nh = static_cast<Elem>(H.order());
  const Elem nk = static_cast<Elem>(K.order());
  const auto& al = m.alpha;
  const auto& be = m.beta;
  const auto& ga = m.gamma;
  const auto& de = m.delta;

  ConditionResult a1{"A1", {"h", "h'"}}, a2{"A2", {"h", "h'"}};
  ConditionResult a3{"A3", {"k", "k'"}}, a4{"A4", {"k", "k'"}};
  ConditionResult a5{"A5", {"k", "h"}}, a6{"A6", {"k", "h"}};
  ConditionResult a7{"A7", {"h", "k"}};

  bool s1 = false, s2 = false;
  for (Elem h = 0; h < nh && !(s1 && s2); ++h)
    for (Elem hp = 0; hp < nh && !(s1 && s2); ++hp) {
      const Elem hh = H.mul(h, hp);
      if (!s1 && al(hh) != H.mul(al(h), mp.act(ga(h), al(hp)))) s1 = record_failure(a1, {h, hp}, mode);
      if (!s2 && ga(hh) != K.mul(mp.twist(ga(h), al(hp)), ga(hp))) s2 = record_failure(a2, {h, hp}, mode);
    }

  bool s3 = false, s4 = false;
  for (Elem k = 0; k < nk && !(s3 && s4); ++k)
    for (Elem kp = 0; kp < nk && !(s3 && s4); ++kp) {
      const Elem kk = K.mul(k, kp);
      if (!s3 && be(kk) != H.mul(be(k), mp.act(de(k), be(kp)))) s3 = record_failure(a3, {k, kp}, mode);
      if (!s4 && de(kk) != K.mul(mp.twist(de(k), be(kp)), de(kp))) s4 = record_failure(a4, {k, kp}, mode);
    }

  bool s5 = false, s6 = false;
  for (Elem k = 0; k < nk && !(s5 && s6); ++k)
    for (Elem h = 0; h < nh && !(s5 && s6); ++h) {
      const Elem kh = mp.act(k, h);
      const Elem kt = mp.twist(k, h);
      if (!s5 && H.mul(be(k), mp.act(de(k), al(h))) != H.mul(al(kh), mp.act(ga(kh), be(kt)))) {
        s5 = record_failure(a5, {k, h}, mode);
      }
      if (!s6 && K.mul(mp.twist(de(k), al(h)), ga(h)) != K.mul(mp.twist(ga(kh), be(kt)), de(kt))) {
        s6 = record_failure(a6, {k, h}, mode);
      }
    }

  // A7: (h, k) -> (alpha(h)(gamma(h).beta(k)), gamma(h)^{beta(k)} delta(k)) is onto H x K.
  std::vector<int> hit(static_cast<std::size_t>(nh) * nk, -1);
  for (Elem h = 0; h < nh; ++h) {
    bool stop = false;
    for (Elem k = 0; k < nk; ++k) {
      const Elem x = H.mul(al(h), mp.act(ga(h), be(k)));
      const Elem y = K.mul(mp.twist(ga(h), be(k)), de(k));
      int& slot = hit[static_cast<std::size_t>(x) * nk + y];
      if (slot >= 0) {
        if (record_failure(a7, {h, k}, mode)) {
          stop = true;
          break;
        }
      }
      slot = static_cast<int>(h * nk + k);
    }
    if (stop) break;
  }

  ConditionReport r;
  r.conditions = {a1, a2, a3, a4, a5, a6, a7};
  return r;
}

Automorphism matrix_to_aut(const AutMatrix& m, const ZSGroup& g) {
  const auto report = check_A_conditions(m, g.pair());
  if (!report.all_passed()) throw Error(ErrorKind::kNotInA, "matrix fails " + failed_names(report));
  const GroupTable& G = g.group();
  const std::size_t nh = g.pair().h().order();
  const std::size_t nk = g.pair().k().order();
  Automorphism out{std::vector<Elem>(G.order())};
  for (Elem h = 0; h < nh; ++h) {
    const Elem th = G.mul(g.embed_h(m.alpha(h)), g.embed_k(m.gamma(h)));
    for (Elem k = 0; k < nk; ++k) {
      const Elem tk = G.mul(g.embed_h(m.beta(k)), g.embed_k(m.delta(k)));
      out.perm[g.element(h, k)] = G.mul(th, tk);
    }
  }
  return out;
}

AutMatrix compose_matrices_unchecked(const AutMatrix& l, const AutMatrix& r, const MatchedPair& mp) {
  const MapTable ga_l_al = map_compose(l.gamma, r.alpha);
  const MapTable be_l_ga = map_compose(l.beta, r.gamma);
  const MapTable ga_l_be = map_compose(l.gamma, r.beta);
  const MapTable be_l_de = map_compose(l.beta, r.delta);
  return {
      map_add(mp, map_compose(l.alpha, r.alpha), map_dot(mp, ga_l_al, be_l_ga)),
      map_add(mp, map_compose(l.alpha, r.beta), map_dot(mp, ga_l_be, be_l_de)),
      map_add(mp, map_exp(mp, ga_l_al, be_l_ga), map_compose(l.delta, r.gamma)),
      map_add(mp, map_exp(mp, ga_l_be, be_l_de), map_compose(l.delta, r.delta)),
  };
}

AutMatrix compose_matrices(const AutMatrix& left, const AutMatrix& right, const MatchedPair& mp) {
  for (const AutMatrix* m : {&left, &right}) {
    const auto report = check_A_conditions(*m, mp);
    if (!report.all_passed()) throw Error(ErrorKind::kNotInA, "operand fails " + failed_names(report));
  }
  return compose_matrices_unchecked(left, right, mp);
}

bool identity_values_hold(const AutMatrix& m, const MatchedPair& mp) {
  const Elem eh = mp.h().identity();
  const Elem ek = mp.k().identity();
  return m.alpha(eh) == eh && m.beta(ek) == eh && m.gamma(eh) == ek && m.delta(ek) == ek;
}

ConditionReport check_kernel_lemma(const AutMatrix& m, const MatchedPair& mp) {
  const Subset ka = kernel_of(mp, m.alpha);
  const Subset kb = kernel_of(mp, m.beta);
  const Subset kg = kernel_of(mp, m.gamma);
  const Subset kd = kernel_of(mp, m.delta);
  auto result = [](std::string name, bool ok) {
    ConditionResult c{std::move(name), {}};
    c.passed = ok;
    return c;
  };
  ConditionReport r;
  r.conditions = {
      result("ker-alpha-subgroup", is_subgroup(mp.h(), ka)),
      result("ker-gamma-subgroup", is_subgroup(mp.h(), kg)),
      result("ker-beta-subgroup", is_subgroup(mp.k(), kb)),
      result("ker-delta-subgroup", is_subgroup(mp.k(), kd)),
      result("ker-alpha-gamma-trivial", intersect(mp.h(), ka, kg).size() == 1),
      result("ker-beta-delta-trivial", intersect(mp.k(), kb, kd).size() == 1),
  };
  return r;
}

MatrixGroup::MatrixGroup(const ZSGroup& g, std::vector<Automorphism> auts)
    : pair_(g.pair()), auts_(std::move(auts)) {
  const auto hg = cyclic_generator(pair_.h());
  const auto kg = cyclic_generator(pair_.k());
  if (!hg || !kg) throw Error(ErrorKind::kNotTwoGenerated, "factors must be cyclic");
  hgen_ = *hg;
  kgen_ = *kg;
  matrices_.reserve(auts_.size());
  const AutMatrix id = identity_matrix(pair_);
  bool have_identity = false;
  for (std::size_t i = 0; i < auts_.size(); ++i) {
    matrices_.push_back(aut_to_matrix(auts_[i], g));
    if (!lookup_.emplace(key(matrices_.back()), i).second) {
      throw Error(ErrorKind::kNotInA, "two automorphisms share generator images");
    }
    if (matrices_.back() == id) {
      identity_ = i;
      have_identity = true;
    }
  }
  if (!have_identity) throw Error(ErrorKind::kNotInA, "identity matrix missing from the list");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  products_.assign(matrices_.size() * matrices_.size(), kUnset);
  inverses_.assign(matrices_.size(), kUnset);
}

std::uint64_t MatrixGroup::key(const AutMatrix& m) const {
  const std::uint64_t nh = pair_.h().order();
  const std::uint64_t nk = pair_.k().order();
  return ((m.alpha(hgen_) * nk + m.gamma(hgen_)) * nh + m.beta(kgen_)) * nk + m.delta(kgen_);
}

std::optional<std::size_t> MatrixGroup::index_of(const AutMatrix& m) const {
  auto it = lookup_.find(key(m));
  if (it == lookup_.end() || !(matrices_[it->second] == m)) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::product(std::size_t i, std::size_t j) const {
  std::uint32_t& slot = products_[i * matrices_.size() + j];
  if (slot == ~std::uint32_t{0}) {
    const auto idx = index_of(compose_matrices_unchecked(matrices_[i], matrices_[j], pair_));
    if (!idx) throw Error(ErrorKind::kNotInA, "product leaves the enumerated matrix set");
    slot = static_cast<std::uint32_t>(*idx);
  }
  return slot;
}

std::size_t MatrixGroup::inverse(std::size_t i) const {
  std::uint32_t& slot = inverses_[i];
  if (slot == ~std::uint32_t{0}) {
    for (std::size_t j = 0; j < matrices_.size(); ++j) {
      if (product(i, j) == identity_) {
        slot = static_cast<std::uint32_t>(j);
        break;
      }
    }
    if (slot == ~std::uint32_t{0}) throw Error(ErrorKind::kNotInA, "matrix has no inverse in the set");
  }
  return slot;
}

}  // namespace zappa

namespace zappa {

std::vector<AutMatrix> enumerate_A_by_generators(const MatchedPair& mp) {
  const GroupTable& H = mp.h();
  const GroupTable& K = mp.k();
  const auto hg = cyclic_generator(H);
  const auto kg = cyclic_generator(K);
  if (!hg || !kg) throw Error(ErrorKind::kNotTwoGenerated, "H and K must be cyclic");
  const Elem nh = static_cast<Elem>(H.order());
  const Elem nk = static_cast<Elem>(K.order());

  // powers of the generators, so that recursion walks x, x^2, ...
  auto powers = [](const GroupTable& g, Elem x) {
    std::vector<Elem> p(g.order());
    Elem y = g.identity();
    for (auto& e : p) {
      e = y;
      y = g.mul(y, x);
    }
    return p;
  };
  const auto hp = powers(H, *hg);
  const auto kp = powers(K, *kg);

  // (alpha, gamma) from alpha(b), gamma(b), kept when A1 and A2 hold
  std::vector<std::pair<MapTable, MapTable>> h_side;
  for (Elem x = 0; x < nh; ++x)
    for (Elem y = 0; y < nk; ++y) {
      MapTable al{Side::kH, Side::kH, std::vector<Elem>(nh)};
      MapTable ga{Side::kH, Side::kK, std::vector<Elem>(nh)};
      al.tbl[hp[0]] = H.identity();
      ga.tbl[hp[0]] = K.identity();
      for (Elem l = 0; l + 1 < nh; ++l) {
        al.tbl[hp[l + 1]] = H.mul(x, mp.act(y, al.tbl[hp[l]]));
        ga.tbl[hp[l + 1]] = K.mul(mp.twist(y, al.tbl[hp[l]]), ga.tbl[hp[l]]);
      }
      bool ok = true;
      for (Elem h = 0; h < nh && ok; ++h)
        for (Elem h2 = 0; h2 < nh && ok; ++h2) {
          const Elem hh = H.mul(h, h2);
          ok = al(hh) == H.mul(al(h), mp.act(ga(h), al(h2))) && ga(hh) == K.mul(mp.twist(ga(h), al(h2)), ga(h2));
        }
      if (ok) h_side.emplace_back(std::move(al), std::move(ga));
    }

  // (beta, delta) from beta(a), delta(a), kept when A3 and A4 hold
  std::vector<std::pair<MapTable, MapTable>> k_side;
  for (Elem x = 0; x < nh; ++x)
    for (Elem y = 0; y < nk; ++y) {
      MapTable be{Side::kK, Side::kH, std::vector<Elem>(nk)};
      MapTable de{Side::kK, Side::kK, std::vector<Elem>(nk)};
      be.tbl[kp[0]] = H.identity();
      de.tbl[kp[0]] = K.identity();
      for (Elem l = 0; l + 1 < nk; ++l) {
        be.tbl[kp[l + 1]] = H.mul(x, mp.act(y, be.tbl[kp[l]]));
        de.tbl[kp[l + 1]] = K.mul(mp.twist(y, be.tbl[kp[l]]), de.tbl[kp[l]]);
      }
      bool ok = true;
      for (Elem k = 0; k < nk && ok; ++k)
        for (Elem k2 = 0; k2 < nk && ok; ++k2) {
          const Elem kk = K.mul(k, k2);
          ok = be(kk) == H.mul(be(k), mp.act(de(k), be(k2))) && de(kk) == K.mul(mp.twist(de(k), be(k2)), de(k2));
        }
      if (ok) k_side.emplace_back(std::move(be), std::move(de));
    }

  std::vector<AutMatrix> out;
  std::vector<char> hit(static_cast<std::size_t>(nh) * nk);
  for (const auto& [al, ga] : h_side)
    for (const auto& [be, de] : k_side) {
      bool ok = true;
      for (Elem k = 0; k < nk && ok; ++k)
        for (Elem h = 0; h < nh && ok; ++h) {
          const Elem kh = mp.act(k, h);
          const Elem kt = mp.twist(k, h);
          ok = H.mul(be(k), mp.act(de(k), al(h))) == H.mul(al(kh), mp.act(ga(kh), be(kt))) &&
               K.mul(mp.twist(de(k), al(h)), ga(h)) == K.mul(mp.twist(ga(kh), be(kt)), de(kt));
        }
      if (!ok) continue;
      std::fill(hit.begin(), hit.end(), 0);
      for (Elem h = 0; h < nh && ok; ++h)
        for (Elem k = 0; k < nk && ok; ++k) {
          char& slot = hit[static_cast<std::size_t>(H.mul(al(h), mp.act(ga(h), be(k)))) * nk +
                           K.mul(mp.twist(ga(h), be(k)), de(k))];
          ok = !slot;
          slot = 1;
        }
      if (ok) out.push_back({al, be, ga, de});
    }
  return out;
}

}  // namespace zappa
