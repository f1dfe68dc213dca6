#ifndef RSG_FACTORIZE_HPP
#define RSG_FACTORIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsg/construct.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  enum class Corner { R1, L1, H1 };
  enum class Side { left, right, two };
  Corner corner_of(Side side);
  std::string to_string(Side side);

  // The R-, L- or H-class of the identity; asserted to be a submonoid.
  // PreconditionError if m is not a monoid.
  std::vector<Elem> corner_class(RSemigroup const& m, Corner which);

  // left: m = e r with r in R1; right: m = r e with r in L1;
  // two: m = e h with h in H1 (e a projection throughout).
  bool is_factorizable(RSemigroup const& m, Side side);

  // Every element of S lies in a member of the corresponding corner class
  // of C(S). For proper S the same answer is recomputed as
  // is_factorizable(C(S), side); disagreement is an InternalError.
  bool is_almost_factorizable(RSemigroup const& s, Side side);

  enum class ActionType { total, onto, automorphisms, general };
  std::string to_string(ActionType k);
  // total: every domain is Y; onto: every range is Y; automorphisms: both.
  ActionType action_kind(MonoidAction const& act);
  // total for left, onto for right, automorphisms for two (automorphisms
  // satisfy all three).
  bool action_matches(ActionType k, Side side);

  // Y x G with (e,g)(f,h) = (e ^ g.f, gh), (e,g)+ = (e,1),
  // (e,g)* = (g^-1.e, 1), where g.f = f alpha_{g^-1}. Requires a group
  // acting homomorphically by automorphisms (PreconditionError otherwise).
  RSemigroup semidirect_product(MonoidAction const& act);

  // T a group and alpha(t^-1) = alpha(t)^-1 for all t.
  bool is_prehomomorphism(MonoidAction const& act);

  struct SemidirectDecomposition {
    MonoidAction action;  // S/sigma acting on P_S
    RSemigroup   product;
    Map          iso;     // S -> product
  };
  // For an almost perfect inverse S: the action recovered from S is by
  // automorphisms of a group and S is isomorphic to the semidirect product.
  // Absent when S is not almost perfect inverse.
  std::optional<SemidirectDecomposition> decompose_semidirect(
      RSemigroup const& s);

  struct InverseSpecializationReport {
    std::size_t decomposed = 0;  // almost perfect inverse members
    std::size_t exempt     = 0;  // the rest of the corpus
    std::size_t prehomomorphic = 0;  // W over groups checked E-unitary
    bool        ok         = true;
    std::string failure;
  };
  InverseSpecializationReport check_inverse_specialization(
      std::vector<RSemigroup> const&   corpus,
      std::vector<MonoidAction> const& actions);

}  // namespace rsg

#endif  // RSG_FACTORIZE_HPP
