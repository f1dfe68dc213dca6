#ifndef RSG_ELEMSET_HPP
#define RSG_ELEMSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace rsg {

  using Elem = std::size_t;
  inline constexpr Elem npos = static_cast<Elem>(-1);

  // Fixed-capacity bitset over element indices 0..63. Used for ideals of
  // semilattices and for permissible subsets of restriction semigroups; every
  // structure that stores one enforces the capacity on construction.
  class ElemSet {
   public:
    static constexpr std::size_t capacity = 64;

    constexpr ElemSet() = default;
    constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}
    ElemSet(std::initializer_list<Elem> elems);
    static ElemSet from(std::vector<Elem> const& elems);
    static constexpr ElemSet full(std::size_t n) {
      return ElemSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Elem a) const { return (bits_ >> a) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool subset_of(ElemSet other) const {
      return (bits_ & ~other.bits_) == 0;
    }
    // Smallest member; npos when empty.
    Elem first() const;
    std::vector<Elem> members() const;

    void insert(Elem a) { bits_ |= std::uint64_t{1} << a; }
    void erase(Elem a) { bits_ &= ~(std::uint64_t{1} << a); }

    friend constexpr ElemSet operator|(ElemSet a, ElemSet b) {
      return ElemSet(a.bits_ | b.bits_);
    }
    friend constexpr ElemSet operator&(ElemSet a, ElemSet b) {
      return ElemSet(a.bits_ & b.bits_);
    }
    friend constexpr bool operator==(ElemSet, ElemSet) = default;
    friend constexpr auto operator<=>(ElemSet, ElemSet) = default;

    template <typename F>
    void for_each(F&& f) const {
      for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        f(static_cast<Elem>(std::countr_zero(b)));
      }
    }

    std::string to_string() const;

   private:
    std::uint64_t bits_ = 0;
  };

}  // namespace rsg

template <>
struct std::hash<rsg::ElemSet> {
  std::size_t operator()(rsg::ElemSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // RSG_ELEMSET_HPP
