#include "zappa/family_l2.hpp"

#include <algorithm>

#include "zappa/error.hpp"
#include "zappa/families.hpp"
#include "zappa/number_theory.hpp"

namespace zappa {

using nt::u64;

const char* to_string(PairTag tag) { return tag == PairTag::kSemidirect ? "semidirect" : "genuine"; }

const char* to_string(PredictionStatus s) {
  switch (s) {
    case PredictionStatus::kClassified: return "classified";
    case PredictionStatus::kUnclassified: return "unclassified";
    case PredictionStatus::kNoGroup: return "no-group";
  }
  return "unknown";
}

std::vector<std::string> l2_failed_conditions(const L2Params& p) {
  const u64 m = p.m;
  std::vector<std::string> out;
  if (m == 0 || m % 2 != 0) return {"m"};
  const u64 s = p.s % m;
  const u64 t = p.t % m;
  if ((2 * s * s) % m != 2 % m) out.push_back("G1");
  if ((4 * t * (s + 1)) % m != 0) out.push_back("G2");
  if ((2 * (t + 1) * nt::mod(static_cast<nt::i64>(s) - 1, m)) % m != 0) out.push_back("G3");
  if (nt::gcd(s, m / 2) != 1) out.push_back("G4");
  return out;
}

PairTag l2_tag(const L2Params& p) { return (2 * p.t) % p.m == 0 ? PairTag::kSemidirect : PairTag::kGenuine; }

std::vector<TaggedL2> enumerate_l2_params(u64 m) {
  if (m == 0 || m % 2 != 0) {
    throw Error(ErrorKind::kFamilyInapplicable, "L2 needs an even modulus, got " + std::to_string(m));
  }
  std::vector<TaggedL2> out;
  for (u64 s = 0; s < m; ++s)
    for (u64 t = 0; t < m; ++t) {
      const L2Params p{m, s, t};
      if (l2_failed_conditions(p).empty()) out.push_back({p, l2_tag(p)});
    }
  return out;
}

namespace {

void require_valid(const L2Params& p) {
  const auto failed = l2_failed_conditions(p);
  if (failed.empty()) return;
  std::string msg = "L2 parameters (m=" + std::to_string(p.m) + ", s=" + std::to_string(p.s) +
                    ", t=" + std::to_string(p.t) + ") fail";
  for (const auto& f : failed) msg += " " + f;
  throw Error(ErrorKind::kFamilyParam, msg);
}

}  // namespace

MatchedPair build_l2_closed_form(const L2Params& p) {
  require_valid(p);
  const u64 m = p.m;
  const u64 s = p.s % m;
  const u64 t = p.t % m;
  // (a^l)^b
  auto step = [&](u64 l) -> u64 { return l % 2 == 1 ? (2 * t + 1 + (l - 1) * s) % m : (l * s) % m; };
  std::vector<std::vector<Elem>> sigma(m, std::vector<Elem>(4));
  std::vector<std::vector<Elem>> theta(m, std::vector<Elem>(4));
  for (u64 l = 0; l < m; ++l) {
    for (u64 j = 0; j < 4; ++j) {
      sigma[l][j] = static_cast<Elem>(l % 2 == 0 ? j : (4 - j) % 4);
      u64 e = l;
      if (l % 2 == 0) {
        e = j % 2 == 1 ? (l * s) % m : l;
      } else {
        for (u64 r = 0; r < j; ++r) e = step(e);
      }
      theta[l][j] = static_cast<Elem>(e);
    }
  }
  return MatchedPair(cyclic_group(4, "b"), cyclic_group(m, "a"), std::move(sigma), std::move(theta));
}

MatchedPair build_l2_by_closure(const L2Params& p) {
  require_valid(p);
  const u64 m = p.m;
  const auto H = cyclic_group(4, "b");
  const auto K = cyclic_group(m, "a");
  std::vector<PairSeed> seeds = {
      {static_cast<Elem>(1 % m), 1, 3, static_cast<Elem>((2 * p.t + 1) % m)},
      {static_cast<Elem>(2 % m), 1, 1, static_cast<Elem>((2 * p.s) % m)},
  };
  return extend_matched_pair(H, K, seeds);
}

MatchedPair build_l2(const L2Params& p) {
  MatchedPair closed = build_l2_closed_form(p);
  MatchedPair derived = [&] {
    try {
      return build_l2_by_closure(p);
    } catch (const Error& e) {
      throw Error(ErrorKind::kFormulaConsistency, std::string("seed completion failed: ") + e.what());
    }
  }();
  if (!(closed == derived)) {
    throw Error(ErrorKind::kFormulaConsistency, "closed-form tables differ from the seed completion");
  }
  return closed;
}

PredictedAut predicted_aut_l2(const L2Params& p) {
  require_valid(p);
  if (l2_tag(p) == PairTag::kSemidirect) {
    throw Error(ErrorKind::kFamilyInapplicable, "L2 point is a semidirect product");
  }
  const u64 m = p.m;
  const u64 s = p.s % m;
  const u64 t = p.t % m;
  const auto [n, q] = nt::split_two_power(m);
  const u64 phi = nt::euler_phi(m);
  const u64 g = nt::gcd(t, m);
  const auto [i, d] = nt::split_two_power(g);
  const bool t_odd = t % 2 == 1;
  const bool wide_beta = (2 * t * (s + 1)) % m == 0;

  std::vector<PredictedAut> hits;
  auto eb = [&](const char* id, u64 c, u64 b) {
    PredictedAut r;
    r.status = PredictionStatus::kClassified;
    r.theorem_id = id;
    r.shape = ChainShape::kEB;
    r.c_part = c;
    r.m_part = 2 * phi;
    r.b_part = b;
    r.order = c * 2 * phi * b;
    hits.push_back(r);
  };
  auto fc = [&](const char* id) {
    PredictedAut r;
    r.status = PredictionStatus::kClassified;
    r.theorem_id = id;
    r.shape = ChainShape::kFC;
    r.c_part = 2;
    r.m_part = 2 * phi;
    r.b_part = 4;
    r.order = 4 * 2 * phi * 2;
    hits.push_back(r);
  };

  if (m % 4 == 0 && t_odd && g == 1) {
    if (s == m / 2 - 1 || s == m - 1) {
      eb("4|m-t-odd-coprime", m / 2, 2);
    } else if (s == m / 4 - 1 || s == 3 * m / 4 - 1) {
      eb("4|m-t-odd-coprime", m / 2, 1);
    }
  }
  if (n == 1 && q > 1 && g == 1) eb("2q-coprime", m / 2, 2);
  if (q == 1 && n >= 3) {
    if (!t_odd) {
      fc("2^n-t-even");
    } else if (s == m / 2 - 1 || s == m - 1) {
      eb("2^n-t-odd", m / 2, 2);
    } else if (s == m / 4 - 1 || s == 3 * m / 4 - 1) {
      eb("2^n-t-odd", m / 2, 1);
    }
  }
  if (n == 2 && q > 1) eb("4q", m / (2 * d), 2);
  if (n == 1 && q > 1) eb("2q", m / (2 * d), 2);
  if (n >= 3 && q > 1 && !t_odd) {
    if (d == q) {
      fc("2^nq-t-even-d=q");
    } else if (n - 2 <= i && i <= n) {
      eb("2^nq-t-even-high-i", 2 * q / d, 2);
    } else if (i + 3 == n) {
      eb("2^nq-t-even-i=n-3", 4 * q / d, 1);
    } else {
      PredictedAut r;
      r.status = PredictionStatus::kNoGroup;
      r.theorem_id = "2^nq-t-even-no-group";
      hits.push_back(r);
    }
  }
  if (n >= 4 && t_odd) eb("2^nq-t-odd", m / (2 * g), wide_beta ? 2 : 1);
  if (n == 3 && q > 1 && t_odd) eb("8q-t-odd", m / (2 * g), wide_beta ? 2 : 1);

  if (hits.empty()) return PredictedAut{};
  PredictedAut out = hits.front();
  for (std::size_t k = 1; k < hits.size(); ++k) out.also.emplace_back(hits[k].theorem_id, hits[k].order);
  return out;
}

ConditionReport check_l2_lemmas(const MatrixGroup& group, const L2Params& p) {
  const MatchedPair& mp = group.pair();
  const u64 m = p.m;
  const u64 s = p.s % m;
  const u64 t = p.t % m;
  const GroupTable& H = mp.h();
  auto make = [](const char* name, std::vector<std::string> roles) {
    ConditionResult c{name, std::move(roles)};
    return c;
  };
  ConditionResult c1 = make("delta-generator-odd", {"matrix"});
  ConditionResult c2 = make("beta-parity", {"matrix", "l"});
  ConditionResult c3 = make("gamma-image-even", {"matrix", "h"});
  ConditionResult c4 = make("alpha-automorphism", {"matrix"});
  ConditionResult c5 = make("beta-gamma-zero", {"matrix", "h"});
  ConditionResult c6 = make("gamma-acts-trivially-on-beta", {"matrix", "h", "k"});
  ConditionResult c7 = make("beta-fixes-gamma", {"matrix", "h", "k"});
  ConditionResult c8 = make("Q-homomorphisms-into-b2", {"matrix"});
  ConditionResult c9 = make("image-beta-dichotomy", {});

  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const AutMatrix& M = group.matrix(idx);
    const Elem w = static_cast<Elem>(idx);
    if (M.delta(1 % m) % 2 == 0) record_failure(c1, {w}, WitnessMode::kFirst);
    for (u64 l = 0; l < m; ++l) {
      const Elem expect = l % 2 == 1 ? M.beta(1 % m) : 0;
      if (M.beta(static_cast<Elem>(l)) != expect) {
        record_failure(c2, {w, static_cast<Elem>(l)}, WitnessMode::kFirst);
        break;
      }
    }
    for (Elem h = 0; h < 4; ++h) {
      if (M.gamma(h) % 2 != 0) {
        record_failure(c3, {w, h}, WitnessMode::kFirst);
        break;
      }
    }
    if (!is_automorphism(mp, M.alpha)) record_failure(c4, {w}, WitnessMode::kFirst);
    for (Elem h = 0; h < 4; ++h) {
      if (M.beta(M.gamma(h)) != H.identity()) {
        record_failure(c5, {w, h}, WitnessMode::kFirst);
        break;
      }
    }
    bool beta_in_b2 = true;
    for (Elem k = 0; k < m; ++k) beta_in_b2 = beta_in_b2 && M.beta(k) % 2 == 0;
    bool stop6 = false, stop7 = false;
    for (Elem h = 0; h < 4 && !(stop6 && stop7); ++h)
      for (Elem k = 0; k < m && !(stop6 && stop7); ++k) {
        if (!stop6 && mp.act(M.gamma(h), M.beta(k)) != M.beta(k)) {
          stop6 = record_failure(c6, {w, h, k}, WitnessMode::kFirst);
        }
        if (!stop7 && (s == 1 || beta_in_b2) && mp.twist(M.gamma(h), M.beta(k)) != M.gamma(h)) {
          stop7 = record_failure(c7, {w, h, k}, WitnessMode::kFirst);
        }
      }
  }

  std::vector<char> image(4, 0);
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const AutMatrix& M = group.matrix(idx);
    if (!satisfies_predicate(FamilyId::Q, M, mp)) continue;
    bool ok = is_homomorphism(mp, M.beta);
    for (Elem k = 0; k < m; ++k) {
      ok = ok && M.beta(k) % 2 == 0;
      image[M.beta(k)] = 1;
    }
    if (!ok) record_failure(c8, {static_cast<Elem>(idx)}, WitnessMode::kFirst);
  }
  const bool image_is_b2 = image[0] && image[2] && !image[1] && !image[3];
  const bool predicted = (2 * t * (1 + s)) % m == 0 && nt::gcd(s + 1, m / 2) != 1;
  c9.passed = image_is_b2 == predicted;

  ConditionReport r;
  r.conditions = {c1, c2, c3, c4, c5, c6, c7, c8, c9};
  return r;
}

std::vector<L2StratumHit> l2_no_group_sweep(u64 m_max, u64* strata_checked) {
  std::vector<L2StratumHit> hits;
  u64 checked = 0;
  for (u64 m = 2; m <= m_max; m += 2) {
    const auto [n, q] = nt::split_two_power(m);
    if (n < 5 || q == 1) continue;
    ++checked;
    for (u64 s = 0; s < m; ++s) {
      if ((2 * s * s) % m != 2 || nt::gcd(s, m / 2) != 1) continue;
      for (u64 t = 2; t < m; t += 2) {
        const unsigned i = nt::split_two_power(nt::gcd(t, m)).first;
        if (i < 1 || i + 4 > n) continue;
        const L2Params p{m, s, t};
        if (l2_failed_conditions(p).empty()) hits.push_back({p, i, n});
      }
    }
  }
  if (strata_checked) *strata_checked = checked;
  return hits;
}

}  // namespace zappa
