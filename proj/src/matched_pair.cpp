#include "zappa/matched_pair.hpp"

#include <sstream>

#include "zappa/error.hpp"

namespace zappa {

namespace {

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& rows, std::size_t n_rows,
                          std::size_t n_cols, std::size_t bound, const char* name) {
  if (rows.size() != n_rows) {
    throw Error(ErrorKind::kMalformedPair, std::string(name) + " must have |K| rows");
  }
  std::vector<Elem> flat;
  flat.reserve(n_rows * n_cols);
  for (const auto& row : rows) {
    if (row.size() != n_cols) {
      throw Error(ErrorKind::kMalformedPair, std::string(name) + " rows must have |H| entries");
    }
    for (Elem v : row) {
      if (v >= bound) throw Error(ErrorKind::kMalformedPair, std::string(name) + " entry out of range");
      flat.push_back(v);
    }
  }
  return flat;
}

std::vector<std::vector<Elem>> unflatten(const std::vector<Elem>& flat, std::size_t n_cols) {
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < flat.size(); i += n_cols) rows.emplace_back(flat.begin() + i, flat.begin() + i + n_cols);
  return rows;
}

}  // namespace

MatchedPair::MatchedPair(GroupTable h, GroupTable k, std::vector<std::vector<Elem>> sigma,
                         std::vector<std::vector<Elem>> theta)
    : h_(std::move(h)),
      k_(std::move(k)),
      sigma_(flatten(sigma, k_.order(), h_.order(), h_.order(), "sigma")),
      theta_(flatten(theta, k_.order(), h_.order(), k_.order(), "theta")) {}

std::vector<std::vector<Elem>> MatchedPair::sigma_table() const { return unflatten(sigma_, h_.order()); }
std::vector<std::vector<Elem>> MatchedPair::theta_table() const { return unflatten(theta_, h_.order()); }

ConditionReport validate_matched_pair(const MatchedPair& mp, WitnessMode mode) {
  const GroupTable& H = mp.h();
  const GroupTable& K = mp.k();
  const Elem nh = static_cast<Elem>(H.order());
  const Elem nk = static_cast<Elem>(K.order());
  const Elem e_h = H.identity();
  const Elem e_k = K.identity();

  ConditionReport report;
  ConditionResult c1{"C1", {"k", "h"}};
  ConditionResult c2{"C2", {"k", "h"}};
  ConditionResult c3{"C3", {"k", "k'", "h"}};
  ConditionResult c4{"C4", {"k", "k'", "h"}};
  ConditionResult c5{"C5", {"k", "h", "h'"}};
  ConditionResult c6{"C6", {"k", "h", "h'"}};

  // (C1) 1.h = h, k^1 = k; (C2) k.1 = 1 = 1^h.
  for (Elem h = 0; h < nh; ++h) {
    if (mp.act(e_k, h) != h && record_failure(c1, {e_k, h}, mode)) break;
  }
  for (Elem k = 0; k < nk && (c1.passed || mode == WitnessMode::kAll); ++k) {
    if (mp.twist(k, e_h) != k && record_failure(c1, {k, e_h}, mode)) break;
  }
  for (Elem k = 0; k < nk; ++k) {
    if (mp.act(k, e_h) != e_h && record_failure(c2, {k, e_h}, mode)) break;
  }
  for (Elem h = 0; h < nh && (c2.passed || mode == WitnessMode::kAll); ++h) {
    if (mp.twist(e_k, h) != e_k && record_failure(c2, {e_k, h}, mode)) break;
  }

  bool stop3 = false, stop4 = false;
  for (Elem k = 0; k < nk && !(stop3 && stop4); ++k) {
    for (Elem kp = 0; kp < nk && !(stop3 && stop4); ++kp) {
      const Elem kkp = K.mul(k, kp);
      for (Elem h = 0; h < nh && !(stop3 && stop4); ++h) {
        const Elem kp_h = mp.act(kp, h);
        // (C3) kk'.h = k.(k'.h)
        if (!stop3 && mp.act(kkp, h) != mp.act(k, kp_h)) stop3 = record_failure(c3, {k, kp, h}, mode);
        // (C4) (kk')^h = k^{k'.h} k'^h
        if (!stop4 && mp.twist(kkp, h) != K.mul(mp.twist(k, kp_h), mp.twist(kp, h))) {
          stop4 = record_failure(c4, {k, kp, h}, mode);
        }
      }
    }
  }

  bool stop5 = false, stop6 = false;
  for (Elem k = 0; k < nk && !(stop5 && stop6); ++k) {
    for (Elem h = 0; h < nh && !(stop5 && stop6); ++h) {
      const Elem k_h = mp.twist(k, h);
      const Elem k_dot_h = mp.act(k, h);
      for (Elem hp = 0; hp < nh && !(stop5 && stop6); ++hp) {
        const Elem hhp = H.mul(h, hp);
        // (C5) k.(hh') = (k.h)(k^h.h')
        if (!stop5 && mp.act(k, hhp) != H.mul(k_dot_h, mp.act(k_h, hp))) {
          stop5 = record_failure(c5, {k, h, hp}, mode);
        }
        // (C6) k^{hh'} = (k^h)^{h'}
        if (!stop6 && mp.twist(k, hhp) != mp.twist(k_h, hp)) stop6 = record_failure(c6, {k, h, hp}, mode);
      }
    }
  }

  report.conditions = {c1, c2, c3, c4, c5, c6};
  return report;
}

ZSGroup::ZSGroup(GroupTable group, MatchedPair pair) : group_(std::move(group)), pair_(std::move(pair)) {
  const std::size_t nh = pair_.h().order();
  const std::size_t nk = pair_.k().order();
  if (group_.order() != nh * nk) {
    throw Error(ErrorKind::kMalformedPair, "product order does not match |H||K|");
  }
  factor_.resize(group_.order());
  for (Elem h = 0; h < nh; ++h)
    for (Elem k = 0; k < nk; ++k) factor_[element(h, k)] = {h, k};
}

Subset ZSGroup::h_subgroup() const {
  std::vector<Elem> members;
  for (Elem h = 0; h < pair_.h().order(); ++h) members.push_back(embed_h(h));
  return Subset(group_, std::move(members));
}

Subset ZSGroup::k_subgroup() const {
  std::vector<Elem> members;
  for (Elem k = 0; k < pair_.k().order(); ++k) members.push_back(embed_k(k));
  return Subset(group_, std::move(members));
}

ZSGroup build_zappa(const MatchedPair& mp, GroupTable::CheckAssociativity check) {
  const ConditionReport report = validate_matched_pair(mp);
  if (!report.all_passed()) {
    std::string failed;
    for (const auto& c : report.conditions)
      if (!c.passed) failed += (failed.empty() ? "" : ",") + c.name;
    throw Error(ErrorKind::kMatchedPairInvalid, "conditions fail: " + failed);
  }
  const GroupTable& H = mp.h();
  const GroupTable& K = mp.k();
  const std::size_t nh = H.order();
  const std::size_t nk = K.order();
  const std::size_t n = nh * nk;
  std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (Elem h = 0; h < nh; ++h) {
    for (Elem k = 0; k < nk; ++k) {
      const std::size_t x = h * nk + k;
      const bool h_id = h == H.identity();
      const bool k_id = k == K.identity();
      labels[x] = h_id && k_id ? "1" : (h_id ? "" : H.label(h)) + (k_id ? "" : K.label(k));
      for (Elem hp = 0; hp < nh; ++hp) {
        const Elem h_out = H.mul(h, mp.act(k, hp));
        const Elem k_base = mp.twist(k, hp);
        for (Elem kp = 0; kp < nk; ++kp) mul[x][hp * nk + kp] = static_cast<Elem>(h_out * nk + K.mul(k_base, kp));
      }
    }
  }
  return ZSGroup(GroupTable(std::move(mul), std::move(labels), check), mp);
}

MatchedPair matched_pair_from_internal(const GroupTable& g, const Subset& h, const Subset& k) {
  if (!is_subgroup(g, h) || !is_subgroup(g, k)) {
    throw Error(ErrorKind::kNotZappaFactorization, "factors must be subgroups");
  }
  if (intersect(g, h, k).size() != 1) {
    throw Error(ErrorKind::kNotZappaFactorization, "factors intersect nontrivially");
  }
  if (h.size() * k.size() != g.order()) {
    throw Error(ErrorKind::kNotZappaFactorization, "|H||K| != |G|");
  }
  const auto& hm = h.members();
  const auto& km = k.members();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<std::pair<Elem, Elem>> factor(g.order(), {kUnset, kUnset});
  for (Elem i = 0; i < hm.size(); ++i) {
    for (Elem j = 0; j < km.size(); ++j) {
      auto& slot = factor[g.mul(hm[i], km[j])];
      if (slot.first != kUnset) throw Error(ErrorKind::kNotZappaFactorization, "factorization not unique");
      slot = {i, j};
    }
  }

  auto restrict = [&](const std::vector<Elem>& members) {
    std::vector<Elem> local(g.order(), kUnset);
    for (Elem i = 0; i < members.size(); ++i) local[members[i]] = i;
    std::vector<std::vector<Elem>> mul(members.size(), std::vector<Elem>(members.size()));
    std::vector<std::string> labels;
    for (Elem i = 0; i < members.size(); ++i) {
      labels.push_back(g.label(members[i]));
      for (Elem j = 0; j < members.size(); ++j) mul[i][j] = local[g.mul(members[i], members[j])];
    }
    return GroupTable(std::move(mul), std::move(labels));
  };

  std::vector<std::vector<Elem>> sigma(km.size(), std::vector<Elem>(hm.size()));
  std::vector<std::vector<Elem>> theta(km.size(), std::vector<Elem>(hm.size()));
  for (Elem j = 0; j < km.size(); ++j) {
    for (Elem i = 0; i < hm.size(); ++i) {
      const auto [hi, kj] = factor[g.mul(km[j], hm[i])];
      sigma[j][i] = hi;
      theta[j][i] = kj;
    }
  }
  return MatchedPair(restrict(hm), restrict(km), std::move(sigma), std::move(theta));
}

const char* to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::kDirect: return "direct";
    case ProductKind::kLeftSemidirect: return "left-semidirect";
    case ProductKind::kRightSemidirect: return "right-semidirect";
    case ProductKind::kGenuine: return "genuine";
  }
  return "unknown";
}

ActionHomomorphy action_homomorphy(const MatchedPair& mp) {
  const GroupTable& H = mp.h();
  const GroupTable& K = mp.k();
  ActionHomomorphy out{true, true, true, true};
  for (Elem k = 0; k < K.order(); ++k) {
    for (Elem h = 0; h < H.order(); ++h) {
      if (mp.act(k, h) != h) out.sigma_trivial = false;
      if (mp.twist(k, h) != k) out.theta_trivial = false;
    }
  }
  for (Elem k = 0; k < K.order() && out.sigma_homomorphic; ++k)
    for (Elem h = 0; h < H.order() && out.sigma_homomorphic; ++h)
      for (Elem hp = 0; hp < H.order(); ++hp)
        if (mp.act(k, H.mul(h, hp)) != H.mul(mp.act(k, h), mp.act(k, hp))) {
          out.sigma_homomorphic = false;
          break;
        }
  for (Elem h = 0; h < H.order() && out.theta_homomorphic; ++h)
    for (Elem k = 0; k < K.order() && out.theta_homomorphic; ++k)
      for (Elem kp = 0; kp < K.order(); ++kp)
        if (mp.twist(K.mul(k, kp), h) != K.mul(mp.twist(k, h), mp.twist(kp, h))) {
          out.theta_homomorphic = false;
          break;
        }
  return out;
}

ProductKind is_semidirect(const MatchedPair& mp) {
  const ActionHomomorphy a = action_homomorphy(mp);
  if (a.sigma_trivial && a.theta_trivial) return ProductKind::kDirect;
  if (a.theta_trivial) return ProductKind::kLeftSemidirect;
  if (a.sigma_trivial) return ProductKind::kRightSemidirect;
  return ProductKind::kGenuine;
}

MatchedPair extend_matched_pair(const GroupTable& h, const GroupTable& k,
                                const std::vector<PairSeed>& seeds) {
  const std::size_t nh = h.order();
  const std::size_t nk = k.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> act(nh * nk, kUnset);
  std::vector<Elem> twist(nh * nk, kUnset);
  auto at = [nh](Elem kk, Elem hh) { return static_cast<std::size_t>(kk) * nh + hh; };

  bool changed = false;
  auto assign = [&](Elem kk, Elem hh, Elem h_out, Elem k_out) {
    const std::size_t i = at(kk, hh);
    if (act[i] == kUnset) {
      act[i] = h_out;
      twist[i] = k_out;
      changed = true;
    } else if (act[i] != h_out || twist[i] != k_out) {
      std::ostringstream os;
      os << "conflicting values at (k=" << kk << ", h=" << hh << ")";
      throw Error(ErrorKind::kMatchedPairInvalid, os.str());
    }
  };

  for (Elem hh = 0; hh < nh; ++hh) assign(k.identity(), hh, hh, k.identity());
  for (Elem kk = 0; kk < nk; ++kk) assign(kk, h.identity(), h.identity(), kk);
  for (const auto& s : seeds) {
    if (s.k >= nk || s.h >= nh || s.h_out >= nh || s.k_out >= nk) {
      throw Error(ErrorKind::kMalformedPair, "seed out of range");
    }
    assign(s.k, s.h, s.h_out, s.k_out);
  }

  do {
    changed = false;
    for (Elem k1 = 0; k1 < nk; ++k1) {
      for (Elem hh = 0; hh < nh; ++hh) {
        const std::size_t i = at(k1, hh);
        if (act[i] == kUnset) continue;
        const Elem h1 = act[i];
        const Elem k1h = twist[i];
        // (C3)/(C4): (k k1).h = k.(k1.h), (k k1)^h = k^{k1.h} k1^h
        for (Elem kk = 0; kk < nk; ++kk) {
          const std::size_t j = at(kk, h1);
          if (act[j] != kUnset) assign(k.mul(kk, k1), hh, act[j], k.mul(twist[j], k1h));
        }
        // (C5)/(C6): k1.(h h') = (k1.h)(k1^h.h'), k1^{hh'} = (k1^h)^{h'}
        for (Elem hp = 0; hp < nh; ++hp) {
          const std::size_t j = at(k1h, hp);
          if (act[j] != kUnset) assign(k1, h.mul(hh, hp), h.mul(h1, act[j]), twist[j]);
        }
      }
    }
  } while (changed);

  std::vector<std::vector<Elem>> sigma(nk, std::vector<Elem>(nh));
  std::vector<std::vector<Elem>> theta(nk, std::vector<Elem>(nh));
  for (Elem kk = 0; kk < nk; ++kk) {
    for (Elem hh = 0; hh < nh; ++hh) {
      const std::size_t i = at(kk, hh);
      if (act[i] == kUnset) {
        throw Error(ErrorKind::kMatchedPairInvalid, "seeds do not determine the pair");
      }
      sigma[kk][hh] = act[i];
      theta[kk][hh] = twist[i];
    }
  }
  return MatchedPair(h, k, std::move(sigma), std::move(theta));
}

}  // namespace zappa
