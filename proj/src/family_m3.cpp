#include "zappa/family_m3.hpp"

#include "zappa/error.hpp"
#include "zappa/families.hpp"
#include "zappa/map_algebra.hpp"
#include "zappa/number_theory.hpp"

namespace zappa {

using nt::u64;

std::vector<std::string> m3_failed_conditions(const M3Params& q) {
  const u64 p = q.p;
  const u64 m = q.m;
  if (p < 3 || !nt::is_prime(p) || m == 0 || m % p != 0) return {"p"};
  std::vector<std::string> out;
  const u64 p2 = p * p;
  const u64 t = q.t();
  if (nt::gcd((t + p2 - 1) % p2, p2) != p) out.push_back("G1");
  if (q.r % p == 0) out.push_back("G2");
  if ((p * nt::pow_mod((p * q.r + 1) % m, p, m)) % m != p % m) out.push_back("G3");
  return out;
}

namespace {

void require_valid(const M3Params& q) {
  const auto failed = m3_failed_conditions(q);
  if (failed.empty()) return;
  std::string msg = "M3 parameters (p=" + std::to_string(q.p) + ", m=" + std::to_string(q.m) +
                    ", r=" + std::to_string(q.r) + ", lambda=" + std::to_string(q.lambda) + ") fail";
  for (const auto& f : failed) msg += " " + f;
  throw Error(ErrorKind::kFamilyParam, msg);
}

}  // namespace

MatchedPair build_m3_closed_form(const M3Params& q) {
  require_valid(q);
  const u64 p = q.p;
  const u64 m = q.m;
  const u64 p2 = p * p;
  const u64 t = q.t();
  const u64 u = (p * q.r + 1) % m;  // pr+1
  const u64 w = nt::mod(static_cast<nt::i64>(nt::pow_mod(u, q.lambda * p, m)) - 1, m);
  std::vector<std::vector<Elem>> sigma(m, std::vector<Elem>(p2));
  std::vector<std::vector<Elem>> theta(m, std::vector<Elem>(p2));
  for (u64 l = 0; l < m; ++l) {
    const u64 tl = nt::pow_mod(t, l, p2);
    const u64 tri = (l * (l == 0 ? 0 : l - 1) / 2) % m;
    for (u64 j = 0; j < p2; ++j) {
      sigma[l][j] = static_cast<Elem>((j * tl) % p2);
      theta[l][j] = static_cast<Elem>(((j % m) * tri % m * w + l * nt::pow_mod(u, j, m)) % m);
    }
  }
  return MatchedPair(cyclic_group(p2, "b"), cyclic_group(m, "a"), std::move(sigma), std::move(theta));
}

MatchedPair build_m3_by_closure(const M3Params& q) {
  require_valid(q);
  const u64 p = q.p;
  const u64 m = q.m;
  const u64 u = (p * q.r + 1) % m;
  std::vector<PairSeed> seeds = {
      {static_cast<Elem>(1 % m), 1, static_cast<Elem>(q.t()), static_cast<Elem>(u)},
      {static_cast<Elem>(p % m), 1, 1, static_cast<Elem>((p * u) % m)},
  };
  return extend_matched_pair(cyclic_group(p * p, "b"), cyclic_group(m, "a"), seeds);
}

MatchedPair build_m3(const M3Params& q) {
  MatchedPair closed = build_m3_closed_form(q);
  MatchedPair derived = [&] {
    try {
      return build_m3_by_closure(q);
    } catch (const Error& e) {
      throw Error(ErrorKind::kFormulaConsistency, std::string("seed completion failed: ") + e.what());
    }
  }();
  if (!(closed == derived)) {
    throw Error(ErrorKind::kFormulaConsistency, "closed-form tables differ from the seed completion");
  }
  return closed;
}

std::vector<TaggedM3> enumerate_m3_params(u64 p, u64 m) {
  if (p < 3 || !nt::is_prime(p) || m == 0 || m % p != 0) {
    throw Error(ErrorKind::kFamilyInapplicable,
                "M3 needs an odd prime p dividing m, got p=" + std::to_string(p) + ", m=" + std::to_string(m));
  }
  std::vector<TaggedM3> out;
  for (u64 r = 0; r < m; ++r)
    for (u64 lambda = 1; lambda < p; ++lambda) {
      const M3Params q{p, m, r, lambda};
      if (!m3_failed_conditions(q).empty()) continue;
      const bool semi = is_semidirect(build_m3_closed_form(q)) != ProductKind::kGenuine;
      out.push_back({q, semi ? PairTag::kSemidirect : PairTag::kGenuine});
    }
  return out;
}

const char* to_string(PowerStratum s) {
  switch (s) {
    case PowerStratum::kAllTrivial: return "all-trivial";
    case PowerStratum::kNoneTrivial: return "none-trivial";
    case PowerStratum::kMixed: return "mixed";
  }
  return "unknown";
}

PowerStratum m3_power_stratum(const M3Params& q) {
  require_valid(q);
  const u64 u = (q.p * q.r + 1) % q.m;
  std::size_t trivial = 0;
  for (u64 l = 1; l < q.p; ++l)
    if (nt::pow_mod(u, q.p * l, q.m) == 1 % q.m) ++trivial;
  if (trivial == q.p - 1) return PowerStratum::kAllTrivial;
  if (trivial == 0) return PowerStratum::kNoneTrivial;
  return PowerStratum::kMixed;
}

M3Prediction predicted_aut_m3(const M3Params& q) {
  require_valid(q);
  if (is_semidirect(build_m3_closed_form(q)) != ProductKind::kGenuine) {
    throw Error(ErrorKind::kFamilyInapplicable, "M3 point is a semidirect product");
  }
  const u64 p = q.p;
  const u64 m = q.m;
  M3Prediction out;
  out.first_branch = nt::pow_mod((p * q.r + 1) % m, p, m) == 1 % m;
  out.b_part = p;
  out.a_part = p;
  out.d_part = nt::euler_phi(m) / (p - 1);
  out.c_part = out.first_branch ? m : m / p;
  out.order = out.b_part * out.a_part * out.d_part * out.c_part;
  return out;
}

ConditionReport check_m3_lemmas(const MatrixGroup& group, const M3Params& q) {
  const MatchedPair& mp = group.pair();
  const u64 p = q.p;
  const u64 m = q.m;
  const u64 p2 = p * p;
  const u64 u = (p * q.r + 1) % m;
  const GroupTable& K = mp.k();
  const PowerStratum stratum = m3_power_stratum(q);
  auto make = [](const char* name, std::vector<std::string> roles) {
    ConditionResult c{name, std::move(roles)};
    return c;
  };
  ConditionResult s0 = make("power-stratum-not-mixed", {});
  ConditionResult g1 = make("gamma-image-in-ap", {"matrix", "h"});
  ConditionResult g2 = make("alpha-automorphism", {"matrix"});
  ConditionResult q1 = make("Q-homomorphism-into-bp", {"matrix"});
  ConditionResult q2 = make("Q-power-fixes-K", {"matrix", "l"});
  ConditionResult q3 = make("gamma-acts-trivially-on-beta", {"matrix", "h", "k"});
  ConditionResult q4 = make("beta-fixes-gamma", {"matrix", "h", "k"});
  ConditionResult q5 = make("gamma-beta-zero", {"matrix", "k"});
  ConditionResult q6 = make("gamma-beta-plus-delta-in-S", {"matrix"});
  ConditionResult q7 = make("beta-gamma-homomorphism", {"matrix"});
  ConditionResult q8 = make("alpha-plus-beta-gamma-in-P", {"matrix"});
  ConditionResult e1 = make("E-alpha-exponent-1-mod-p", {"matrix"});
  ConditionResult e2 = make("E-delta-exponent-1-mod-p", {"matrix"});

  s0.passed = stratum != PowerStratum::kMixed;

  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const AutMatrix& M = group.matrix(idx);
    const Elem w = static_cast<Elem>(idx);
    if (stratum == PowerStratum::kNoneTrivial) {
      for (Elem h = 0; h < p2; ++h) {
        if (M.gamma(h) % p != 0) {
          record_failure(g1, {w, h}, WitnessMode::kFirst);
          break;
        }
      }
      if (!is_automorphism(mp, M.alpha)) record_failure(g2, {w}, WitnessMode::kFirst);
    }

    if (in_family(FamilyId::E, M, mp)) {
      if (M.alpha(1) % p != 1) record_failure(e1, {w}, WitnessMode::kFirst);
      if (M.delta(static_cast<Elem>(1 % m)) % p != 1 % p) record_failure(e2, {w}, WitnessMode::kFirst);
    }

    if (!satisfies_predicate(FamilyId::Q, M, mp)) continue;
    bool into_bp = is_homomorphism(mp, M.beta);
    for (Elem k = 0; k < m; ++k) into_bp = into_bp && M.beta(k) % p == 0;
    if (!into_bp) record_failure(q1, {w}, WitnessMode::kFirst);

    const u64 j = M.beta(static_cast<Elem>(1 % m));
    const u64 uj = nt::pow_mod(u, j, m);
    for (u64 l = 0; l < m; ++l) {
      if ((l * uj) % m != l) {
        record_failure(q2, {w, static_cast<Elem>(l)}, WitnessMode::kFirst);
        break;
      }
    }

    bool stop3 = false, stop4 = false;
    for (Elem h = 0; h < p2 && !(stop3 && stop4); ++h)
      for (Elem k = 0; k < m && !(stop3 && stop4); ++k) {
        if (!stop3 && mp.act(M.gamma(h), M.beta(k)) != M.beta(k)) stop3 = record_failure(q3, {w, h, k}, WitnessMode::kFirst);
        if (!stop4 && mp.twist(M.gamma(h), M.beta(k)) != M.gamma(h)) stop4 = record_failure(q4, {w, h, k}, WitnessMode::kFirst);
      }

    const MapTable gb = map_compose(M.gamma, M.beta);
    for (Elem k = 0; k < m; ++k) {
      if (gb(k) != K.identity()) {
        record_failure(q5, {w, k}, WitnessMode::kFirst);
        break;
      }
    }

    AutMatrix probe = identity_matrix(mp);
    probe.delta = map_add(mp, gb, M.delta);
    if (!is_automorphism(mp, probe.delta) || !satisfies_predicate(FamilyId::S, probe, mp)) {
      record_failure(q6, {w}, WitnessMode::kFirst);
    }

    const MapTable bg = map_compose(M.beta, M.gamma);
    if (!is_homomorphism(mp, bg)) record_failure(q7, {w}, WitnessMode::kFirst);

    probe = identity_matrix(mp);
    probe.alpha = map_add(mp, M.alpha, bg);
    if (!is_automorphism(mp, probe.alpha) || !satisfies_predicate(FamilyId::P, probe, mp)) {
      record_failure(q8, {w}, WitnessMode::kFirst);
    }
  }

  ConditionReport r;
  r.conditions = {s0, g1, g2, q1, q2, q3, q4, q5, q6, q7, q8, e1, e2};
  return r;
}

}  // namespace zappa
