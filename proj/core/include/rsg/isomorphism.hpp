#ifndef RSG_ISOMORPHISM_HPP
#define RSG_ISOMORPHISM_HPP

#include <optional>

#include "rsg/rsemigroup.hpp"

namespace rsg {

  // A bijection S1 -> S2 respecting multiplication, + and *, if one exists.
  // Elements are first split by invariants (projection, idempotent, Green
  // class sizes, index and period, order-ideal sizes); the search then
  // backtracks over candidates, propagating every forced image.
  std::optional<Map> find_isomorphism(RSemigroup const& s1,
                                      RSemigroup const& s2);

  inline bool isomorphic(RSemigroup const& s1, RSemigroup const& s2) {
    return find_isomorphism(s1, s2).has_value();
  }

}  // namespace rsg

#endif  // RSG_ISOMORPHISM_HPP
