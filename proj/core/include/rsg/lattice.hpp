#ifndef RSG_LATTICE_HPP
#define RSG_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rsg/elemset.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  // Finite meet-semilattice given by its meet table. Orders above 64 are
  // rejected (ideals are stored as ElemSet).
  class Semilattice {
   public:
    Semilattice() = default;
    // Throws InputError unless meet is commutative, associative, idempotent.
    explicit Semilattice(Table const& meet);

    std::size_t order() const { return n_; }
    Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
    bool leq(Elem a, Elem b) const { return meet(a, b) == a; }
    Elem bottom() const { return bottom_; }
    std::optional<Elem> top() const { return top_; }

    // a-down = {b : b <= a}
    ElemSet down(Elem a) const { return down_[a]; }
    bool is_ideal(ElemSet s) const;
    // Greatest element of s, if s has one.
    std::optional<Elem> maximum(ElemSet s) const;

    Table table() const;

    friend bool operator==(Semilattice const& a, Semilattice const& b) {
      return a.meet_ == b.meet_;
    }

   private:
    std::size_t          n_ = 0;
    std::vector<Elem>    meet_;
    std::vector<ElemSet> down_;
    Elem                 bottom_ = 0;
    std::optional<Elem>  top_;
  };

  // Semilattice viewed as a restriction semigroup with a+ = a* = a.
  RSemigroup as_rsemigroup(Semilattice const& y);

  // Nonempty down-closed subsets; filters all 2^n - 1 subsets, so orders
  // above 20 raise ResourceError.
  std::vector<ElemSet> ideals(Semilattice const& y);
  std::vector<ElemSet> principal_ideals(Semilattice const& y);

  // Meet-preserving bijection between two ideals of a semilattice, stored
  // as a partial map on 0..n-1. Ordered canonically by (domain bits, graph).
  class IdealIso {
   public:
    IdealIso() = default;

    // Validating constructor: pairs (x, xf). Throws InputError unless the
    // pairs define a meet-preserving bijection between nonempty ideals of y.
    static IdealIso from_pairs(Semilattice const&                     y,
                               std::span<std::pair<Elem, Elem> const> pairs);
    static IdealIso identity(std::size_t n, ElemSet ideal);

    std::size_t degree() const { return map_.size(); }
    ElemSet dom() const { return dom_; }
    ElemSet ran() const { return ran_; }
    bool defined(Elem x) const { return x < map_.size() && map_[x] != npos; }
    // xf; npos outside the domain.
    Elem operator()(Elem x) const { return map_[x]; }
    std::vector<std::pair<Elem, Elem>> pairs() const;

    IdealIso inverse() const;
    // Restriction to dom() n ideal; the ideal must meet the domain.
    IdealIso restrict_to(ElemSet ideal) const;
    bool is_identity() const;

    friend bool operator==(IdealIso const& a, IdealIso const& b) {
      return a.map_ == b.map_;
    }
    friend std::strong_ordering operator<=>(IdealIso const& a,
                                            IdealIso const& b) {
      if (auto c = a.dom_.bits() <=> b.dom_.bits(); c != 0) {
        return c;
      }
      return a.map_ <=> b.map_;
    }

    std::string to_string() const;

   private:
    friend std::optional<IdealIso> iso_compose(IdealIso const&,
                                               IdealIso const&);
    IdealIso(std::vector<Elem> map);

    std::vector<Elem> map_;
    ElemSet           dom_;
    ElemSet           ran_;
  };

  // x(fg) = (xf)g. The domain is (ran f n dom g) pulled back through f;
  // nullopt when that is empty (never the case for two ideals of one
  // semilattice, since ideals always share the bottom).
  std::optional<IdealIso> iso_compose(IdealIso const& f, IdealIso const& g);

  // f is a restriction of g.
  bool iso_leq(IdealIso const& f, IdealIso const& g);

  // All isomorphisms between ideals of y (principal ideals only when
  // principal_only), in canonical order.
  std::vector<IdealIso> ideal_isos(Semilattice const& y, bool principal_only);

  // P_S as a semilattice in its own right, with the index translation.
  struct ProjectionSemilattice {
    Semilattice       lattice;
    std::vector<Elem> element;  // lattice index -> element of S
    std::vector<Elem> index;    // element of S -> lattice index, or npos
  };
  ProjectionSemilattice projection_semilattice(RSemigroup const& s);

}  // namespace rsg

#endif  // RSG_LATTICE_HPP
