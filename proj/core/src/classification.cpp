#include "rsg/classification.hpp"

#include <algorithm>

#include "rsg/errors.hpp"

namespace rsg {

  bool is_proper(RSemigroup const& s, Partition const& sigma) {
    return green(s, Green::R).meet(sigma).is_identity()
           && green(s, Green::L).meet(sigma).is_identity();
  }

  bool is_sigma_perfect(RSemigroup const& s, Partition const& sigma) {
    auto const blocks = sigma.blocks();
    for (auto const& ci : blocks) {
      for (auto const& cj : blocks) {
        std::vector<bool> hit(s.order(), false);
        std::size_t       count = 0;
        for (Elem a : ci) {
          for (Elem b : cj) {
            Elem const ab = s.mul(a, b);
            if (!hit[ab]) {
              hit[ab] = true;
              ++count;
            }
          }
        }
        std::size_t const target = sigma.block(s.mul(ci.front(), cj.front()));
        std::size_t       size   = 0;
        for (Elem x = 0; x < s.order(); ++x) {
          size += sigma.block(x) == target ? 1 : 0;
        }
        if (count != size) {
          return false;
        }
      }
    }
    return true;
  }

  ClassificationReport classify(RSemigroup const& s) {
    ClassificationReport r;
    r.axioms         = check_axioms(s);
    r.is_restriction = r.axioms.pass;
    if (!r.is_restriction) {
      return r;
    }
    r.is_monoid  = s.is_monoid();
    r.is_reduced = projections(s).size() == 1;
    r.is_inverse = inverse_structure(s).has_value();

    Partition const sig = sigma(s).partition();
    r.is_proper         = is_proper(s, sig);
    r.sigma_perfect     = is_sigma_perfect(s, sig);
    r.is_almost_perfect = r.is_proper && r.sigma_perfect;

    std::vector<Elem> maxima(sig.num_blocks(), npos);
    bool              all_max = true;
    for (auto const& block : sig.blocks()) {
      Elem found = npos;
      for (Elem m : block) {
        bool const top = std::ranges::all_of(
            block, [&](Elem a) { return natural_leq(s, a, m); });
        if (top) {
          found = m;
          break;
        }
      }
      if (found == npos) {
        all_max = false;
        break;
      }
      maxima[sig.block(found)] = found;
    }
    r.is_F_restriction = r.is_proper && all_max;
    if (r.is_F_restriction) {
      r.sigma_class_maxima = std::move(maxima);
    }
    r.is_perfect = r.is_monoid && r.is_F_restriction && r.sigma_perfect;
    if (r.is_perfect && !r.is_almost_perfect) {
      throw InternalError("perfect but not almost perfect");
    }
    return r;
  }

  bool is_T_proper(RSemigroup const& m, std::vector<Elem> const& t) {
    auto const one = m.identity();
    if (!one) {
      throw PreconditionError("is_T_proper: not a monoid");
    }
    std::vector<bool> in(m.order(), false);
    for (Elem x : t) {
      if (x >= m.order()) {
        throw InputError("is_T_proper: element out of range");
      }
      in[x] = true;
    }
    if (!in[*one]) {
      throw InputError("is_T_proper: T does not contain the identity");
    }
    for (Elem x : t) {
      for (Elem y : t) {
        if (!in[m.mul(x, y)]) {
          throw InputError("is_T_proper: T is not closed under "
                           "multiplication");
        }
      }
    }
    for (Elem a = 0; a < m.order(); ++a) {
      std::size_t above = 0;
      for (Elem x : t) {
        above += natural_leq(m, a, x) ? 1 : 0;
      }
      if (above != 1) {
        return false;
      }
    }
    Partition const sig = sigma(m).partition();
    if (!is_proper(m, sig)) {
      throw InternalError("T-proper monoid is not proper");
    }
    std::vector<bool> seen(sig.num_blocks(), false);
    for (Elem x : t) {
      if (seen[sig.block(x)]) {
        throw InternalError("sigma does not separate T");
      }
      seen[sig.block(x)] = true;
    }
    if (!std::ranges::all_of(seen, [](bool b) { return b; })) {
      throw InternalError("T does not meet every sigma-class");
    }
    return true;
  }

  std::optional<std::vector<Elem>> find_T_proper(RSemigroup const& m,
                                                 std::size_t       limit) {
    auto const one = m.identity();
    if (!one) {
      throw PreconditionError("find_T_proper: not a monoid");
    }
    Partition const sig    = sigma(m).partition();
    auto            blocks = sig.blocks();
    std::size_t     total  = 1;
    for (auto const& b : blocks) {
      total *= b.size();
      if (total > limit) {
        throw ResourceError("find_T_proper: more than "
                            + std::to_string(limit) + " transversals");
      }
    }
    // The class of 1 must contribute 1 itself.
    blocks[sig.block(*one)] = {*one};
    std::vector<std::size_t> pick(blocks.size(), 0);
    std::vector<Elem>        t(blocks.size());
    while (true) {
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        t[i] = blocks[i][pick[i]];
      }
      std::vector<bool> in(m.order(), false);
      for (Elem x : t) {
        in[x] = true;
      }
      bool closed = true;
      for (Elem x : t) {
        for (Elem y : t) {
          closed = closed && in[m.mul(x, y)];
        }
      }
      if (closed && is_T_proper(m, t)) {
        std::vector<Elem> sorted = t;
        std::ranges::sort(sorted);
        return sorted;
      }
      std::size_t i = 0;
      while (i < blocks.size() && ++pick[i] == blocks[i].size()) {
        pick[i++] = 0;
      }
      if (i == blocks.size()) {
        return std::nullopt;
      }
    }
  }

  std::optional<Map> inverse_structure(RSemigroup const& s) {
    std::size_t const n = s.order();
    Map               inv(n, npos);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) {
          if (inv[a] != npos) {
            return std::nullopt;
          }
          inv[a] = b;
        }
      }
      if (inv[a] == npos) {
        return std::nullopt;
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (s.plus(a) != s.mul(a, inv[a]) || s.star(a) != s.mul(inv[a], a)) {
        return std::nullopt;
      }
    }
    return inv;
  }

}  // namespace rsg
