#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "zappa/map_algebra.hpp"
#include "zappa/matched_pair.hpp"
#include "zappa/report.hpp"

namespace zappa {

struct Automorphism {
  std::vector<Elem> perm;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

/// (outer o inner)(x) = outer(inner(x))
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

/// 512 unless ZAPPA_MAX_GROUP_ORDER is set to a positive integer.
std::size_t default_max_group_order();

struct AutOptions {
  std::size_t max_order = default_max_group_order();
  unsigned threads = 1;
};

/// Index of a generator of a cyclic group, or nullopt if it is not cyclic.
std::optional<Elem> cyclic_generator(const GroupTable& g);

/// All automorphisms of g, identity first, the rest in lexicographic order
/// of their permutations. H and K must be cyclic (kNotTwoGenerated), and
/// |G| at most opts.max_order (kScale).
std::vector<Automorphism> brute_force_aut(const ZSGroup& g, const AutOptions& opts = {});

/// (alpha, beta; gamma, delta) with alpha: H->H, beta: K->H, gamma: H->K,
/// delta: K->K.
struct AutMatrix {
  MapTable alpha;
  MapTable beta;
  MapTable gamma;
  MapTable delta;
  friend bool operator==(const AutMatrix&, const AutMatrix&) = default;
};

AutMatrix identity_matrix(const MatchedPair& mp);

/// theta(h) = alpha(h) gamma(h), theta(k) = beta(k) delta(k).
AutMatrix aut_to_matrix(const Automorphism& a, const ZSGroup& g);

/// theta(hk) = alpha(h) gamma(h) beta(k) delta(k). Throws kNotInA unless
/// the matrix satisfies (A1)-(A7).
Automorphism matrix_to_aut(const AutMatrix& m, const ZSGroup& g);

/// (A1)-(A7); A7 is checked as bijectivity of the combined map on H x K.
ConditionReport check_A_conditions(const AutMatrix& m, const MatchedPair& mp,
                                   WitnessMode mode = WitnessMode::kFirst);

/// Every matrix satisfying (A1)-(A7), found from generator images alone
/// without reference to Aut(G). H and K must be cyclic.
std::vector<AutMatrix> enumerate_A_by_generators(const MatchedPair& mp);

/// The product of left = T(theta') and right = T(theta):
///   (a'a + g'a.b'g,  a'b + g'b.b'd;  (g'a)^{b'g} + d'g,  (g'b)^{b'd} + d'd)
/// Throws kNotInA if either operand fails (A1)-(A7).
AutMatrix compose_matrices(const AutMatrix& left, const AutMatrix& right, const MatchedPair& mp);
/// Same product without the membership checks.
AutMatrix compose_matrices_unchecked(const AutMatrix& left, const AutMatrix& right,
                                     const MatchedPair& mp);

/// alpha(1) = beta(1) = gamma(1) = delta(1) = 1.
bool identity_values_hold(const AutMatrix& m, const MatchedPair& mp);

/// ker(alpha), ker(gamma) <= H; ker(beta), ker(delta) <= K;
/// ker(alpha) & ker(gamma) = 1; ker(beta) & ker(delta) = 1.
ConditionReport check_kernel_lemma(const AutMatrix& m, const MatchedPair& mp);

/// The enumerated matrix group: Aut(G) carried over by T, with products
/// taken through compose_matrices. Products are memoized on first use, so a
/// single instance must not be shared between threads.
class MatrixGroup {
 public:
  MatrixGroup(const ZSGroup& g, std::vector<Automorphism> auts);

  std::size_t size() const { return matrices_.size(); }
  const MatchedPair& pair() const { return pair_; }
  const AutMatrix& matrix(std::size_t i) const { return matrices_[i]; }
  const Automorphism& automorphism(std::size_t i) const { return auts_[i]; }
  const std::vector<AutMatrix>& matrices() const { return matrices_; }
  std::size_t identity() const { return identity_; }

  std::optional<std::size_t> index_of(const AutMatrix& m) const;
  /// Index of compose_matrices(matrix(i), matrix(j)); throws kNotInA if the
  /// product leaves the enumerated set.
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

 private:
  std::uint64_t key(const AutMatrix& m) const;

  MatchedPair pair_;
  Elem hgen_;
  Elem kgen_;
  std::vector<Automorphism> auts_;
  std::vector<AutMatrix> matrices_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::size_t identity_ = 0;
  mutable std::vector<std::uint32_t> products_;
  mutable std::vector<std::uint32_t> inverses_;
};

}  // namespace zappa
