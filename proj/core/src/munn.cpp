#include "rsg/munn.hpp"

#include <algorithm>

#include "rsg/errors.hpp"

namespace rsg {

  namespace {

    IsoSemigroup build(Semilattice const& y, std::vector<IdealIso> catalog) {
      IsoSemigroup out{y, {}, std::move(catalog)};
      std::size_t const        n = out.catalog.size();
      Table                    mul(n, std::vector<Elem>(n));
      std::vector<Elem>        plus(n), star(n);
      std::vector<std::string> labels(n);
      for (Elem i = 0; i < n; ++i) {
        IdealIso const& f = out.catalog[i];
        plus[i]   = out.index_of(IdealIso::identity(y.order(), f.dom()));
        star[i]   = out.index_of(IdealIso::identity(y.order(), f.ran()));
        labels[i] = f.to_string();
        for (Elem j = 0; j < n; ++j) {
          auto fg = iso_compose(f, out.catalog[j]);
          Elem k  = fg ? out.index_of(*fg) : npos;
          if (k == npos) {
            throw InternalError("ideal isomorphisms not closed under "
                                "composition: "
                                + f.to_string() + " " + out.catalog[j].to_string());
          }
          mul[i][j] = k;
        }
        if (plus[i] == npos || star[i] == npos) {
          throw InternalError("partial identity missing from catalog");
        }
      }
      out.semigroup = RSemigroup(mul, plus, star, labels);
      return out;
    }

    IdealIso make_iso(ProjectionSemilattice const&        y,
                      std::vector<std::pair<Elem, Elem>> const& pairs,
                      std::string const&                  what) {
      try {
        return IdealIso::from_pairs(y.lattice, pairs);
      } catch (InputError const& e) {
        throw InternalError(what + ": " + e.what());
      }
    }

  }  // namespace

  Elem IsoSemigroup::index_of(IdealIso const& f) const {
    auto it = std::ranges::lower_bound(catalog, f);
    if (it == catalog.end() || !(*it == f)) {
      return npos;
    }
    return static_cast<Elem>(it - catalog.begin());
  }

  IsoSemigroup munn_semigroup(Semilattice const& y) {
    return build(y, ideal_isos(y, true));
  }

  IsoSemigroup ideal_iso_semigroup(Semilattice const& y) {
    return build(y, ideal_isos(y, false));
  }

  MunnRep munn_rep(RSemigroup const& s) {
    MunnRep rep{projection_semilattice(s), {}};
    for (Elem a = 0; a < s.order(); ++a) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (Elem e : rep.y.element) {
        if (s.mul(e, s.plus(a)) == e) {
          pairs.emplace_back(rep.y.index[e], rep.y.index[s.star(s.mul(e, a))]);
        }
      }
      rep.theta.push_back(make_iso(rep.y, pairs, "theta_" + s.name(a)));
    }
    return rep;
  }

  MunnRep left_munn_rep(RSemigroup const& s) {
    MunnRep rep{projection_semilattice(s), {}};
    for (Elem a = 0; a < s.order(); ++a) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (Elem f : rep.y.element) {
        if (s.mul(f, s.star(a)) == f) {
          pairs.emplace_back(rep.y.index[f], rep.y.index[s.plus(s.mul(a, f))]);
        }
      }
      rep.theta.push_back(make_iso(rep.y, pairs, "psi_" + s.name(a)));
    }
    return rep;
  }

  IdealIso sigma_union(IsoSemigroup const& ty, ElemSet a) {
    if (!is_permissible(ty.semigroup, a)) {
      throw InputError("sigma_union: " + a.to_string()
                       + " is not a permissible subset of T_Y");
    }
    std::vector<std::pair<Elem, Elem>> pairs;
    a.for_each([&](Elem b) {
      auto p = ty.catalog[b].pairs();
      pairs.insert(pairs.end(), p.begin(), p.end());
    });
    try {
      return IdealIso::from_pairs(ty.base, pairs);
    } catch (InputError const& e) {
      throw InternalError(std::string("union of a permissible set is not an "
                                      "ideal isomorphism: ")
                          + e.what());
    }
  }

  SigmaReport verify_sigma_iso(Semilattice const& y) {
    SigmaReport        r;
    IsoSemigroup const ty = munn_semigroup(y);
    IsoSemigroup const ti = ideal_iso_semigroup(y);
    CMonoid const      c  = c_monoid(ty.semigroup);
    r.c_size              = c.catalog.size();
    r.ti_size             = ti.catalog.size();
    auto fail             = [&r](std::string msg) {
      r.ok      = false;
      r.failure = std::move(msg);
      return r;
    };
    if (r.c_size != r.ti_size) {
      return fail("|C(T_Y)| = " + std::to_string(r.c_size)
                  + " but |TI_Y| = " + std::to_string(r.ti_size));
    }
    Map sigma(c.catalog.size());
    for (Elem i = 0; i < c.catalog.size(); ++i) {
      sigma[i] = ti.index_of(sigma_union(ty, c.catalog[i]));
      if (sigma[i] == npos) {
        return fail("Sigma of " + c.catalog[i].to_string() + " not in TI_Y");
      }
    }
    if (!is_isomorphism(c.monoid, ti.semigroup, sigma)) {
      return fail("Sigma is not a biunary isomorphism");
    }
    std::vector<Elem> preimage(ti.catalog.size());
    for (Elem i = 0; i < sigma.size(); ++i) {
      preimage[sigma[i]] = i;
    }
    for (Elem k = 0; k < ti.catalog.size(); ++k) {
      IdealIso const& alpha = ti.catalog[k];
      ElemSet         back;
      alpha.dom().for_each([&](Elem e) {
        back.insert(ty.index_of(alpha.restrict_to(y.down(e))));
      });
      if (back != c.catalog[preimage[k]]) {
        return fail("inverse of Sigma disagrees at " + alpha.to_string());
      }
    }
    Map const t = tau(ty.semigroup, c);
    for (Elem b = 0; b < ty.catalog.size(); ++b) {
      if (sigma[t[b]] != ti.index_of(ty.catalog[b])) {
        return fail("tau Sigma is not the inclusion at "
                    + ty.catalog[b].to_string());
      }
    }
    return r;
  }

  IdealIso extend_munn_at(RSemigroup const&            s,
                          ProjectionSemilattice const& y,
                          ElemSet                      a) {
    std::vector<std::pair<Elem, Elem>> pairs;
    a.for_each([&](Elem b) {
      pairs.emplace_back(y.index[s.plus(b)], y.index[s.star(b)]);
    });
    return make_iso(y, pairs, "theta-bar of " + a.to_string());
  }

  std::vector<IdealIso> extend_munn(RSemigroup const&            s,
                                    ProjectionSemilattice const& y,
                                    CMonoid const&               c) {
    std::vector<IdealIso> out;
    out.reserve(c.catalog.size());
    for (ElemSet a : c.catalog) {
      out.push_back(extend_munn_at(s, y, a));
    }
    return out;
  }

}  // namespace rsg
