#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zappa/automorphism.hpp"
#include "zappa/report.hpp"

namespace zappa {

// Map families P..Z (stored as their matrices (alpha,0;0,1) etc.) and the
// matrix subsets A..M.
enum class FamilyId { P, Q, R, S, X, Y, Z, A, B, C, D, E, F, M };

inline constexpr std::array<FamilyId, 14> kAllFamilies = {
    FamilyId::P, FamilyId::Q, FamilyId::R, FamilyId::S, FamilyId::X, FamilyId::Y, FamilyId::Z,
    FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E, FamilyId::F, FamilyId::M};

std::string_view to_string(FamilyId id);
/// Throws kUnknownFamily.
FamilyId parse_family(std::string_view name);

/// The matrix family a map family embeds into: P->A, Q->B, R->C, S->D,
/// X->E, Y->F, Z->M.
FamilyId matrix_family_of(FamilyId id);

/// Shape of the matrix set (zero and identity slots) plus, for P..Z, the
/// defining predicate evaluated pointwise.
bool in_family(FamilyId id, const AutMatrix& m, const MatchedPair& mp);
/// The predicate of a map family P..Z on the relevant entries of m, with
/// no condition on the remaining slots.
bool satisfies_predicate(FamilyId id, const AutMatrix& m, const MatchedPair& mp);

struct FamilyReport {
  FamilyId id = FamilyId::A;
  std::vector<std::size_t> members;  // indices into the matrix group
  bool is_subgroup = false;
  std::size_t order() const { return members.size(); }
};

FamilyReport compute_family(FamilyId id, const MatrixGroup& group);

struct Families {
  std::map<FamilyId, FamilyReport> reports;
  /// Throws kFamiliesNotComputed when the family is missing.
  const FamilyReport& at(FamilyId id) const;
};

Families compute_families(const MatrixGroup& group);

/// Independent construction of each map family from generator images,
/// compared with the filtered matrix sets. A mismatch on a pair means the
/// embedding of the map family into the matrix family is off.
struct FamilyCrossCheck {
  FamilyId map_family;
  std::size_t constructed = 0;     // maps satisfying the predicate
  std::size_t outside_group = 0;   // of those, matrices not in the enumerated group
  bool filters_agree = false;      // filtered P..Z set equals the A..M set
  bool passed() const { return outside_group == 0 && filters_agree; }
};
std::vector<FamilyCrossCheck> cross_check_families(const MatrixGroup& group, const Families& fam);

/// Stab_H(K) = {h : k^h = k for all k}, Stab_K(H) = {k : k.h = h for all h}.
Subset stab_h_of_k(const MatchedPair& mp);
Subset stab_k_of_h(const MatchedPair& mp);

/// Q against Hom(K, Stab_H(K)) and R against crossed homomorphisms into
/// Stab_K(H) with gamma(k.h) = gamma(h). Divergences are counted, not fixed.
struct ReducedFormCheck {
  std::size_t q_raw = 0, q_reduced = 0, q_common = 0;
  std::size_t r_raw = 0, r_reduced = 0, r_common = 0;
  bool q_agrees() const { return q_raw == q_reduced && q_raw == q_common; }
  bool r_agrees() const { return r_raw == r_reduced && r_raw == r_common; }
};
ReducedFormCheck check_reduced_forms(const MatrixGroup& group);

struct DecompositionReport {
  std::string claim;
  std::vector<FamilyId> factors;
  std::vector<ConditionResult> checks;
  bool verdict() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// ABCD = the whole matrix group: products of members stay inside, the
/// hypothesis 1 - beta gamma in P holds for beta in Q and gamma in R, and
/// the product set has full size. H and K must be abelian.
DecompositionReport verify_ABCD(const MatrixGroup& group, const Families& fam);

/// Internal semidirect chains. "EB": A = E x| B, "CM": E = C x| M,
/// "BM": F = B x| M, "FC": A = F x| C, "AD": M = A x D.
DecompositionReport verify_semidirect_chain(const MatrixGroup& group, const Families& fam,
                                            std::string_view chain);

/// Whether `conj` normalizes `target` (g t g^-1 in target for all g, t).
bool normalizes(const MatrixGroup& group, const std::vector<std::size_t>& conj,
                const std::vector<std::size_t>& target);

}  // namespace zappa
