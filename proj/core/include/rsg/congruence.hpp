#ifndef RSG_CONGRUENCE_HPP
#define RSG_CONGRUENCE_HPP

#include <cstddef>
#include <vector>

#include "rsg/rsemigroup.hpp"

namespace rsg {

  // Equivalence relation on 0..n-1, stored as a canonical block index per
  // element (blocks numbered in order of their least member).
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> block_of);

    static Partition identity(std::size_t n);
    static Partition universal(std::size_t n);

    std::size_t size() const { return block_.size(); }
    std::size_t num_blocks() const { return num_blocks_; }
    std::size_t block(Elem a) const { return block_[a]; }
    bool        same(Elem a, Elem b) const { return block_[a] == block_[b]; }
    std::vector<std::size_t> const&  block_map() const { return block_; }
    std::vector<std::vector<Elem>>   blocks() const;
    std::vector<std::size_t>         block_sizes() const;  // sorted

    bool is_identity() const { return num_blocks_ == block_.size(); }
    bool subset_of(Partition const& other) const;
    Partition meet(Partition const& other) const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const& a, Partition const& b) {
      return a.block_ <=> b.block_;
    }

   private:
    std::vector<std::size_t> block_;
    std::size_t              num_blocks_ = 0;
  };

  // Compatible with multiplication (both sides), + and *.
  bool is_congruence(RSemigroup const& s, Partition const& p);

  // A partition that has been checked to be a congruence on its semigroup.
  class Congruence {
   public:
    // Throws InputError if p is not a congruence on s.
    Congruence(RSemigroup const& s, Partition p);

    Partition const& partition() const { return p_; }
    bool same(Elem a, Elem b) const { return p_.same(a, b); }
    std::size_t num_classes() const { return p_.num_blocks(); }

   private:
    Partition p_;
  };

  enum class Green { R, L, H };

  // R = {(a,b) : a+ = b+}, L = {(a,b) : a* = b*}, H = R n L.
  Partition green(RSemigroup const& s, Green which);

  // Least monoid congruence: a ~ b iff ea = eb for some projection e.
  Congruence sigma(RSemigroup const& s);

  // Greatest projection-separating congruence, computed as the kernel of
  // the Munn representation.
  Congruence mu(RSemigroup const& s);

  struct Quotient {
    RSemigroup semigroup;  // S / rho
    Map        map;        // canonical surjection S -> S / rho
    std::vector<Elem> representative;  // class -> least member
  };
  // Throws InputError if rho is not a congruence.
  Quotient quotient(RSemigroup const& s, Partition const& rho);

  // Least congruence containing the given pairs.
  Partition congruence_closure(RSemigroup const&                        s,
                               std::vector<std::pair<Elem, Elem>> const& pairs);

  // All congruences of s, as joins of principal congruences. Throws
  // ResourceError when more than `limit` congruences are found.
  std::vector<Partition> congruences(RSemigroup const& s,
                                     std::size_t       limit = 1U << 16);

  // True iff no two distinct projections share a block.
  bool separates_projections(RSemigroup const& s, Partition const& p);
  // True iff all projections share one block.
  bool identifies_projections(RSemigroup const& s, Partition const& p);

}  // namespace rsg

#endif  // RSG_CONGRUENCE_HPP
