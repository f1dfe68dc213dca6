#ifndef RSG_RSEMIGROUP_HPP
#define RSG_RSEMIGROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsg/elemset.hpp"

namespace rsg {

  using Table = std::vector<std::vector<Elem>>;

  // Finite biunary semigroup (S, *, +, *) given by tables over the dense
  // element indices 0..n-1. Construction validates the shape of the tables
  // only; use check_axioms() to decide whether the tables define a
  // restriction semigroup. Labels are display metadata and never consulted
  // by any algorithm.
  class RSemigroup {
   public:
    RSemigroup() = default;
    RSemigroup(Table const&              mul,
               std::vector<Elem>         plus,
               std::vector<Elem>         star,
               std::vector<std::string>  labels = {});

    std::size_t order() const { return n_; }

    Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
    Elem plus(Elem a) const { return plus_[a]; }
    Elem star(Elem a) const { return star_[a]; }

    // Two-sided identity 1 with 1+ = 1* = 1, located by table scan.
    std::optional<Elem> identity() const { return identity_; }
    bool is_monoid() const { return identity_.has_value(); }

    Table table() const;
    std::vector<Elem> const& plus_map() const { return plus_; }
    std::vector<Elem> const& star_map() const { return star_; }
    std::vector<std::string> const& labels() const { return labels_; }
    // Label of a, or its index when unlabelled.
    std::string name(Elem a) const;

    friend bool operator==(RSemigroup const& x, RSemigroup const& y) {
      return x.n_ == y.n_ && x.mul_ == y.mul_ && x.plus_ == y.plus_
             && x.star_ == y.star_;
    }

   private:
    std::size_t              n_ = 0;
    std::vector<Elem>        mul_;
    std::vector<Elem>        plus_;
    std::vector<Elem>        star_;
    std::vector<std::string> labels_;
    std::optional<Elem>      identity_;
  };

  struct AxiomReport {
    bool              pass = true;
    std::string       identity;  // the first violated identity, if any
    std::vector<Elem> witness;   // the tuple (x), (x,y) or (x,y,z) violating it

    explicit operator bool() const { return pass; }
  };

  // Associativity, the four left and four right restriction identities and
  // (x+)* = x+, (x*)+ = x*, scanned exhaustively in that order.
  AxiomReport check_axioms(RSemigroup const& s);

  // Sorted list {a+ : a in S}; throws InternalError if it differs from
  // {a* : a in S}.
  std::vector<Elem> projections(RSemigroup const& s);
  ElemSet           projection_set(RSemigroup const& s);
  bool              is_projection(RSemigroup const& s, Elem a);

  // a <= b iff a = a+ b.
  bool natural_leq(RSemigroup const& s, Elem a, Elem b);
  // {b : b <= a}
  ElemSet down_set(RSemigroup const& s, Elem a);

  using Map = std::vector<Elem>;

  // True iff f respects multiplication and both unary operations.
  bool is_homomorphism(RSemigroup const& from,
                       RSemigroup const& to,
                       std::span<Elem const> f);
  bool is_isomorphism(RSemigroup const& from,
                      RSemigroup const& to,
                      std::span<Elem const> f);

  // Direct product with pairs (a, b) numbered a * |T| + b.
  RSemigroup direct_product(RSemigroup const& s, RSemigroup const& t);

  struct Adjoined {
    RSemigroup semigroup;  // S^1
    Elem       one;        // index of the identity of S^1
    bool       added;      // false when S already was a monoid
  };
  // S^1: S itself if it has an identity, else S with a new identity
  // (index |S|) satisfying 1+ = 1* = 1.
  Adjoined adjoin_identity(RSemigroup const& s);

  struct Restriction {
    RSemigroup semigroup;
    Map        embedding;  // new index -> old index
  };
  // The biunary subsemigroup on the given element set, which must be closed
  // under all three operations (InputError otherwise).
  Restriction restrict_to(RSemigroup const& s, ElemSet elems);
  Restriction restrict_to(RSemigroup const& s, std::vector<Elem> elems);

  // Closure of a set of elements under multiplication and both unary maps.
  std::vector<Elem> biunary_closure(RSemigroup const& s,
                                    std::vector<Elem>  generators);

  std::string describe(RSemigroup const& s);

}  // namespace rsg

#endif  // RSG_RSEMIGROUP_HPP
