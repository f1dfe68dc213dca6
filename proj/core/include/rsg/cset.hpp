#ifndef RSG_CSET_HPP
#define RSG_CSET_HPP

#include <cstddef>
#include <vector>

#include "rsg/congruence.hpp"
#include "rsg/elemset.hpp"
#include "rsg/lattice.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  // Nonempty order ideal A with a+b = b+a and ab* = ba* for all a, b in A.
  bool is_permissible(RSemigroup const& s, ElemSet a);

  // The monoid C(S) of permissible sets under setwise product.
  struct CMonoid {
    RSemigroup           monoid;
    std::vector<ElemSet> catalog;  // element -> permissible set, sorted
    Elem                 one = 0;  // index of P_S

    // Index of a permissible set; npos if absent.
    Elem index_of(ElemSet a) const;
  };

  // Enumerates all permissible sets. |S| must be at most 64; more than
  // `limit` permissible sets raise ResourceError.
  CMonoid c_monoid(RSemigroup const& s, std::size_t limit = 1U << 14);

  // tau: a -> a-down as indices into c.catalog.
  Map tau(RSemigroup const& s, CMonoid const& c);

  struct Kappa {
    Quotient t;      // S / sigma, with its canonical surjection
    Map      image;  // sigma-class index -> index in C(S)
    // kappa(t) kappa(u) = kappa(tu) for all t, u
    bool is_homomorphism = false;
  };
  // t -> the sigma-class t, as a permissible set. PreconditionError unless
  // S is proper.
  Kappa kappa(RSemigroup const& s, CMonoid const& c);

  struct KappaThetaBar {
    Kappa                 kappa;
    ProjectionSemilattice y;
    std::vector<IdealIso> alpha;  // sigma-class index -> theta-bar of it
    // alpha(t) alpha(u) = alpha(tu) for all t, u; otherwise alpha is only a
    // subhomomorphism. Always agrees with classify().is_almost_perfect
    // (InternalError otherwise).
    bool is_homomorphism = false;
  };
  // PreconditionError unless S is proper.
  KappaThetaBar kappa_theta_bar(RSemigroup const& s, CMonoid const& c);

  // A -> A beta for a homomorphism beta: S -> U whose image is an order
  // ideal of U (PreconditionError otherwise).
  Map hat_extend(RSemigroup const& s,
                 RSemigroup const& u,
                 std::span<Elem const> beta,
                 CMonoid const&    cs,
                 CMonoid const&    cu);

}  // namespace rsg

#endif  // RSG_CSET_HPP
