#include "rsg/factorize.hpp"

#include <algorithm>

#include "rsg/classification.hpp"
#include "rsg/cset.hpp"
#include "rsg/errors.hpp"
#include "rsg/isomorphism.hpp"

namespace rsg {

  Corner corner_of(Side side) {
    switch (side) {
      case Side::left: return Corner::R1;
      case Side::right: return Corner::L1;
      case Side::two: break;
    }
    return Corner::H1;
  }

  std::string to_string(Side side) {
    switch (side) {
      case Side::left: return "left";
      case Side::right: return "right";
      case Side::two: break;
    }
    return "two-sided";
  }

  std::string to_string(ActionType k) {
    switch (k) {
      case ActionType::total: return "total";
      case ActionType::onto: return "onto";
      case ActionType::automorphisms: return "automorphisms";
      case ActionType::general: break;
    }
    return "general";
  }

  std::vector<Elem> corner_class(RSemigroup const& m, Corner which) {
    auto const one = m.identity();
    if (!one) {
      throw PreconditionError("corner_class: not a monoid");
    }
    std::vector<Elem> out;
    for (Elem a = 0; a < m.order(); ++a) {
      bool const r = m.plus(a) == *one;
      bool const l = m.star(a) == *one;
      if ((which == Corner::R1 && r) || (which == Corner::L1 && l)
          || (which == Corner::H1 && r && l)) {
        out.push_back(a);
      }
    }
    for (Elem a : out) {
      for (Elem b : out) {
        if (!std::ranges::binary_search(out, m.mul(a, b))) {
          throw InternalError("corner class of 1 is not a submonoid");
        }
      }
    }
    return out;
  }

  bool is_factorizable(RSemigroup const& m, Side side) {
    std::vector<Elem> const corner = corner_class(m, corner_of(side));
    std::vector<Elem> const projs  = projections(m);
    std::vector<bool>       hit(m.order(), false);
    for (Elem e : projs) {
      for (Elem r : corner) {
        hit[side == Side::right ? m.mul(r, e) : m.mul(e, r)] = true;
      }
    }
    return std::ranges::all_of(hit, [](bool b) { return b; });
  }

  bool is_almost_factorizable(RSemigroup const& s, Side side) {
    CMonoid const           c      = c_monoid(s);
    std::vector<Elem> const corner = corner_class(c.monoid, corner_of(side));
    bool                    def    = true;
    for (Elem a = 0; a < s.order() && def; ++a) {
      def = std::ranges::any_of(corner, [&](Elem i) {
        return c.catalog[i].contains(a);
      });
    }
    if (is_proper(s, sigma(s).partition())
        && is_factorizable(c.monoid, side) != def) {
      throw InternalError("almost factorizability disagrees with "
                          "factorizability of C(S)");
    }
    return def;
  }

  ActionType action_kind(MonoidAction const& act) {
    ElemSet const full  = ElemSet::full(act.semilattice.order());
    bool          total = true, onto = true;
    for (Elem t = 0; t < act.monoid.order(); ++t) {
      total = total && act.dom(t) == full;
      onto  = onto && act.ran(t) == full;
    }
    if (total && onto) {
      return ActionType::automorphisms;
    }
    if (total) {
      return ActionType::total;
    }
    return onto ? ActionType::onto : ActionType::general;
  }

  bool action_matches(ActionType k, Side side) {
    if (k == ActionType::automorphisms) {
      return true;
    }
    return (side == Side::left && k == ActionType::total)
           || (side == Side::right && k == ActionType::onto);
  }

  namespace {

    std::vector<Elem> group_inverses(Monoid const& g) {
      std::vector<Elem> inv(g.order(), npos);
      for (Elem a = 0; a < g.order(); ++a) {
        for (Elem b = 0; b < g.order(); ++b) {
          if (g.mul(a, b) == g.identity() && g.mul(b, a) == g.identity()) {
            inv[a] = b;
          }
        }
      }
      return inv;
    }

  }  // namespace

  RSemigroup semidirect_product(MonoidAction const& act) {
    Monoid const&      g = act.monoid;
    Semilattice const& y = act.semilattice;
    if (!g.is_group()) {
      throw PreconditionError("semidirect_product: the monoid is not a group");
    }
    if (act.kind != ActionKind::homomorphism
        || action_kind(act) != ActionType::automorphisms) {
      throw PreconditionError("semidirect_product: the action is not by "
                              "automorphisms");
    }
    std::vector<Elem> const  inv = group_inverses(g);
    std::size_t const        ng  = g.order();
    std::size_t const        n   = y.order() * ng;
    Table                    mul(n, std::vector<Elem>(n));
    std::vector<Elem>        plus(n), star(n);
    std::vector<std::string> labels(n);
    // g.f = f alpha_{g^-1}
    auto const act_on = [&](Elem h, Elem f) { return act.alpha[inv[h]](f); };
    for (Elem i = 0; i < n; ++i) {
      Elem const e = i / ng, a = i % ng;
      plus[i]      = e * ng + g.identity();
      star[i]      = act_on(inv[a], e) * ng + g.identity();
      labels[i]    = "(" + std::to_string(e) + "," + g.name(a) + ")";
      for (Elem j = 0; j < n; ++j) {
        Elem const f = j / ng, b = j % ng;
        mul[i][j]    = y.meet(e, act_on(a, f)) * ng + g.mul(a, b);
      }
    }
    return RSemigroup(mul, plus, star, labels);
  }

  bool is_prehomomorphism(MonoidAction const& act) {
    if (!act.monoid.is_group()) {
      return false;
    }
    std::vector<Elem> const inv = group_inverses(act.monoid);
    for (Elem t = 0; t < act.monoid.order(); ++t) {
      if (!(act.alpha[inv[t]] == act.alpha[t].inverse())) {
        return false;
      }
    }
    return true;
  }

  std::optional<SemidirectDecomposition> decompose_semidirect(
      RSemigroup const& s) {
    ClassificationReport const c = classify(s);
    if (!c.is_inverse || !c.is_almost_perfect) {
      return std::nullopt;
    }
    Reconstruction r = reconstruct(s);
    if (!r.action.monoid.is_group()
        || action_kind(r.action) != ActionType::automorphisms) {
      throw InternalError("almost perfect inverse semigroup whose action is "
                          "not a group acting by automorphisms");
    }
    RSemigroup product = semidirect_product(r.action);
    auto       iso     = find_isomorphism(s, product);
    if (!iso) {
      throw InternalError("almost perfect inverse semigroup is not the "
                          "semidirect product of its action");
    }
    return SemidirectDecomposition{std::move(r.action), std::move(product),
                                   std::move(*iso)};
  }

  InverseSpecializationReport check_inverse_specialization(
      std::vector<RSemigroup> const&   corpus,
      std::vector<MonoidAction> const& actions) {
    InverseSpecializationReport rep;
    for (RSemigroup const& s : corpus) {
      try {
        auto d = decompose_semidirect(s);
        if (!d) {
          ++rep.exempt;
        } else if (is_isomorphism(s, d->product, d->iso)) {
          ++rep.decomposed;
        } else {
          rep.ok      = false;
          rep.failure = "decomposition map is not an isomorphism";
        }
      } catch (InternalError const& e) {
        rep.ok      = false;
        rep.failure = e.what();
      }
    }
    for (MonoidAction const& act : actions) {
      if (!is_prehomomorphism(act)) {
        continue;
      }
      WProduct const w = w_product(act);
      ++rep.prehomomorphic;
      if (!inverse_structure(w.semigroup)
          || !classify(w.semigroup).is_proper) {
        rep.ok      = false;
        rep.failure = "W over a group with a prehomomorphic action is not "
                      "E-unitary inverse";
      }
    }
    return rep;
  }

}  // namespace rsg
