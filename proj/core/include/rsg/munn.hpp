#ifndef RSG_MUNN_HPP
#define RSG_MUNN_HPP

#include <string>
#include <vector>

#include "rsg/cset.hpp"
#include "rsg/lattice.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  // A semigroup of ideal isomorphisms of a semilattice, materialized as an
  // RSemigroup with a catalog of the underlying maps (canonically ordered).
  struct IsoSemigroup {
    Semilattice           base;
    RSemigroup            semigroup;
    std::vector<IdealIso> catalog;

    Elem index_of(IdealIso const& f) const;
  };

  // T_Y: isomorphisms between principal ideals.
  IsoSemigroup munn_semigroup(Semilattice const& y);
  // TI_Y: isomorphisms between arbitrary nonempty ideals.
  IsoSemigroup ideal_iso_semigroup(Semilattice const& y);

  struct MunnRep {
    ProjectionSemilattice y;
    std::vector<IdealIso> theta;  // per element of S, over y.lattice
  };
  // theta_a: e -> (ea)* on a+-down.
  MunnRep munn_rep(RSemigroup const& s);
  // psi_a: f -> (af)+ on a*-down.
  MunnRep left_munn_rep(RSemigroup const& s);

  // Union of the members of a permissible subset of T_Y (indices into
  // ty.catalog). InputError if the subset is not permissible.
  IdealIso sigma_union(IsoSemigroup const& ty, ElemSet a);

  struct SigmaReport {
    bool        ok = true;
    std::size_t c_size  = 0;  // |C(T_Y)|
    std::size_t ti_size = 0;  // |TI_Y|
    std::string failure;
  };
  // Builds C(T_Y) and TI_Y and checks that Sigma is a biunary isomorphism,
  // that alpha -> {alpha restricted to e-down : e in dom alpha} inverts it,
  // and that tau followed by Sigma is the inclusion T_Y -> TI_Y.
  SigmaReport verify_sigma_iso(Semilattice const& y);

  // theta-bar_A: e -> b* for b in A with b+ = e, on A+; one map per
  // permissible set of c, over the projection semilattice of s.
  std::vector<IdealIso> extend_munn(RSemigroup const&            s,
                                    ProjectionSemilattice const& y,
                                    CMonoid const&               c);
  IdealIso extend_munn_at(RSemigroup const&            s,
                          ProjectionSemilattice const& y,
                          ElemSet                      a);

}  // namespace rsg

#endif  // RSG_MUNN_HPP
