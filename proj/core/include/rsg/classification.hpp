#ifndef RSG_CLASSIFICATION_HPP
#define RSG_CLASSIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsg/congruence.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  struct ClassificationReport {
    bool is_restriction    = false;
    bool is_monoid         = false;
    bool is_reduced        = false;
    bool is_inverse        = false;
    bool is_proper         = false;
    bool sigma_perfect     = false;
    bool is_almost_perfect = false;
    bool is_F_restriction  = false;
    bool is_perfect        = false;
    // Greatest element of each sigma-class (indexed by block of sigma);
    // present iff F-restriction.
    std::optional<std::vector<Elem>> sigma_class_maxima;
    // First failed axiom when !is_restriction.
    AxiomReport axioms;
  };

  // Every flag is false past is_restriction when the axioms fail.
  ClassificationReport classify(RSemigroup const& s);

  // (a sigma)(b sigma) = (ab) sigma as sets for all a, b.
  bool is_sigma_perfect(RSemigroup const& s, Partition const& sigma);
  // R n sigma = L n sigma = identity.
  bool is_proper(RSemigroup const& s, Partition const& sigma);

  // Each m <= t for exactly one t in T. M must be a monoid
  // (PreconditionError) and T a submonoid of it (InputError). When true,
  // M proper and T a transversal of sigma are asserted (InternalError).
  bool is_T_proper(RSemigroup const& m, std::vector<Elem> const& t);

  // Searches every transversal of the sigma-classes of the monoid m that is
  // a submonoid, returning one for which m is T-proper. ResourceError when
  // there are more than `limit` transversals.
  std::optional<std::vector<Elem>> find_T_proper(RSemigroup const& m,
                                                 std::size_t limit = 1U << 20);

  // a -> a^-1 when S is an inverse semigroup whose unary operations are
  // a+ = aa^-1, a* = a^-1a; absent otherwise (including the case of an
  // inverse semigroup carrying other restriction operations).
  std::optional<Map> inverse_structure(RSemigroup const& s);

}  // namespace rsg

#endif  // RSG_CLASSIFICATION_HPP
