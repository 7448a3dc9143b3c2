#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zappa/group.hpp"
#include "zappa/report.hpp"

namespace zappa {

/// A matched pair (sigma, theta) between groups H and K. The tables are
/// |K| x |H|: sigma(k, h) = k.h lies in H, theta(k, h) = k^h lies in K, so
/// that kh = (k.h) k^h inside the product.
class MatchedPair {
 public:
  /// Throws kMalformedPair when the tables have the wrong shape or entries
  /// out of range. The axioms are not checked here; see validate_matched_pair.
  MatchedPair(GroupTable h, GroupTable k, std::vector<std::vector<Elem>> sigma,
              std::vector<std::vector<Elem>> theta);

  const GroupTable& h() const { return h_; }
  const GroupTable& k() const { return k_; }

  /// k.h
  Elem act(Elem k, Elem h) const { return sigma_[index(k, h)]; }
  /// k^h
  Elem twist(Elem k, Elem h) const { return theta_[index(k, h)]; }

  std::vector<std::vector<Elem>> sigma_table() const;
  std::vector<std::vector<Elem>> theta_table() const;

  friend bool operator==(const MatchedPair& a, const MatchedPair& b) {
    return a.h_ == b.h_ && a.k_ == b.k_ && a.sigma_ == b.sigma_ && a.theta_ == b.theta_;
  }

 private:
  std::size_t index(Elem k, Elem h) const { return static_cast<std::size_t>(k) * h_.order() + h; }

  GroupTable h_;
  GroupTable k_;
  std::vector<Elem> sigma_;
  std::vector<Elem> theta_;
};

/// Checks (C1)-(C6) exhaustively. Witness roles per condition are listed in
/// the report.
ConditionReport validate_matched_pair(const MatchedPair& mp, WitnessMode mode = WitnessMode::kFirst);

/// The product group on H x K, element (h, k) at index h*|K| + k, with
/// (h,k)(h',k') = (h (k.h'), k^{h'} k').
class ZSGroup {
 public:
  ZSGroup(GroupTable group, MatchedPair pair);

  const GroupTable& group() const { return group_; }
  const MatchedPair& pair() const { return pair_; }

  Elem element(Elem h, Elem k) const { return static_cast<Elem>(h * pair_.k().order() + k); }
  Elem embed_h(Elem h) const { return element(h, pair_.k().identity()); }
  Elem embed_k(Elem k) const { return element(pair_.h().identity(), k); }
  std::pair<Elem, Elem> factor(Elem g) const { return factor_[g]; }

  Subset h_subgroup() const;
  Subset k_subgroup() const;

 private:
  GroupTable group_;
  MatchedPair pair_;
  std::vector<std::pair<Elem, Elem>> factor_;
};

/// Throws kMatchedPairInvalid if validation fails. Associativity of the
/// result is re-checked exhaustively unless disabled.
ZSGroup build_zappa(const MatchedPair& mp,
                    GroupTable::CheckAssociativity check = GroupTable::CheckAssociativity::kYes);

/// Reads off (sigma, theta) from an internal factorization g = HK. Elements of
/// the returned H and K are numbered in increasing order of their index in g.
MatchedPair matched_pair_from_internal(const GroupTable& g, const Subset& h, const Subset& k);

enum class ProductKind {
  kDirect,
  /// theta trivial: H is normal, G = H x| K.
  kLeftSemidirect,
  /// sigma trivial: K is normal, G = H |x K.
  kRightSemidirect,
  kGenuine,
};

const char* to_string(ProductKind kind);

/// Classification by action triviality.
ProductKind is_semidirect(const MatchedPair& mp);

/// Whether each action is homomorphic in its group argument without being
/// trivial: h -> k.h an endomorphism of H for every k, and k -> k^h an
/// endomorphism of K for every h. Such pairs are reported for review.
struct ActionHomomorphy {
  bool sigma_homomorphic = false;
  bool theta_homomorphic = false;
  bool sigma_trivial = false;
  bool theta_trivial = false;
  bool needs_review() const {
    return (sigma_homomorphic && !sigma_trivial) || (theta_homomorphic && !theta_trivial);
  }
};
ActionHomomorphy action_homomorphy(const MatchedPair& mp);

/// One known value of the pair: k.h = h_out and k^h = k_out.
struct PairSeed {
  Elem k;
  Elem h;
  Elem h_out;
  Elem k_out;
};

/// Completes the pair from seed values by closing under (C1)-(C6) used as
/// rewriting rules. Throws kMatchedPairInvalid when two derivations disagree
/// or the seeds do not determine every entry. The result is not validated.
MatchedPair extend_matched_pair(const GroupTable& h, const GroupTable& k,
                                const std::vector<PairSeed>& seeds);

}  // namespace zappa
