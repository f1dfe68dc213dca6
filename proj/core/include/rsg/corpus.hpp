#ifndef RSG_CORPUS_HPP
#define RSG_CORPUS_HPP

#include <string>
#include <vector>

#include "rsg/construct.hpp"
#include "rsg/lattice.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  // Meet-semilattices of order exactly n, one per isomorphism class, each in
  // its lexicographically least meet table. n <= 6 (ResourceError).
  std::vector<Semilattice> semilattices_of_order(std::size_t n);
  // All orders 1..max_n, ascending.
  std::vector<Semilattice> enumerate_semilattices(std::size_t max_n);

  // Monoids of order exactly n with identity 0, one per isomorphism class,
  // least table first. n <= 4.
  std::vector<Monoid> monoids_of_order(std::size_t n);
  std::vector<Monoid> enumerate_monoids(std::size_t max_n);

  // Restriction semigroups of order exactly n, one per isomorphism class
  // (least (mul, plus, star) representative). n <= 3.
  std::vector<RSemigroup> rsemigroups_of_order(std::size_t n);
  std::vector<RSemigroup> enumerate_restriction_semigroups(std::size_t max_n);

  // Every monoidal map T -> TI_Y of exactly the requested kind (so the
  // subhomomorphism list excludes homomorphisms). |T|, |Y| <= 4.
  std::vector<MonoidAction> enumerate_actions(Monoid const&      t,
                                              Semilattice const& y,
                                              ActionKind         kind);

  Semilattice chain(std::size_t n);  // 0 < 1 < ... < n-1
  Semilattice v3();                  // bottom 0 below atoms 1, 2

  RSemigroup chain2();      // the 2-chain as a restriction semigroup
  RSemigroup monoid_b();    // {1, e}, e e = e, e+ = e* = e
  RSemigroup c2_reduced();  // the group of order 2 with a+ = a* = 1
  RSemigroup i2();          // partial bijections of {0, 1}

  MonoidAction swap_action();     // C2 on V3, g swaps the atoms
  MonoidAction sub_action();      // C2 on the 2-chain, g -> id on {0}
  MonoidAction idempotent_action();  // {1, x}, x x = x, acting trivially on V3

  struct NamedExample {
    std::string name;
    RSemigroup  semigroup;
  };
  // 2-chain, V3, B, C2, I_2, W(C2,V3), W(sub), S_T over B, W(C2,V3)^1,
  // W({1,x},V3)^1, in that order.
  std::vector<NamedExample> named_examples();
  RSemigroup                named(std::string const& name);

}  // namespace rsg

#endif  // RSG_CORPUS_HPP
