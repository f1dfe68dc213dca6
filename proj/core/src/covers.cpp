#include <algorithm>

#include "rsg/classification.hpp"
#include "rsg/construct.hpp"
#include "rsg/corpus.hpp"
#include "rsg/errors.hpp"
#include "rsg/isomorphism.hpp"
#include "rsg/munn.hpp"

namespace rsg {

  PiIso pi_iso(MonoidAction const& act) {
    Semilattice const& y  = act.semilattice;
    IsoSemigroup const ty = munn_semigroup(y);
    IsoSemigroup const ti = ideal_iso_semigroup(y);
    std::vector<Elem>  embed(ty.catalog.size()), alpha;
    for (Elem b = 0; b < ty.catalog.size(); ++b) {
      embed[b] = ti.index_of(ty.catalog[b]);
    }
    for (IdealIso const& f : act.alpha) {
      alpha.push_back(ti.index_of(f));
    }
    PiIso out{s_t_r(ty.semigroup, ti.semigroup, embed, act.monoid, alpha),
              w_product(act),
              {},
              false};
    for (auto [b, u] : out.source.catalog) {
      auto const e = y.maximum(ty.catalog[b].dom());
      if (!e) {
        throw InternalError("principal ideal without a top");
      }
      out.pi.push_back(out.target.index_of(u, act.alpha[u](*e)));
    }
    out.ok = std::ranges::none_of(out.pi, [](Elem x) { return x == npos; })
             && is_isomorphism(out.source.semigroup, out.target.semigroup,
                               out.pi);
    return out;
  }

  Reconstruction reconstruct(RSemigroup const& s) {
    if (!is_proper(s, sigma(s).partition())) {
      throw PreconditionError("reconstruct: the semigroup is not proper");
    }
    CMonoid const       c   = c_monoid(s);
    KappaThetaBar const ktb = kappa_theta_bar(s, c);
    Reconstruction      r{ktb.kappa.t,
                     ktb.y,
                     validate_action(Monoid::of(ktb.kappa.t.semigroup),
                                     ktb.y.lattice,
                                     ktb.alpha),
                     {},
                     {},
                     false};
    r.w = w_product(r.action);
    for (Elem a = 0; a < s.order(); ++a) {
      r.canonical.push_back(r.w.index_of(r.t.map[a], r.y.index[s.star(a)]));
    }
    r.ok = std::ranges::none_of(r.canonical, [](Elem x) { return x == npos; })
           && is_isomorphism(s, r.w.semigroup, r.canonical);
    return r;
  }

  StToW st_to_w(RSemigroup const& s, Monoid const& t, std::span<Elem const> alpha) {
    Adjoined const    s1 = adjoin_identity(s);
    RSemigroup const& r  = s1.semigroup;
    if (alpha.size() != t.order()
        || std::ranges::any_of(alpha, [&](Elem x) { return x >= r.order(); })) {
      throw InputError("st_to_w: alpha must map every element of T into S^1");
    }
    if (alpha[t.identity()] != s1.one) {
      throw PreconditionError("st_to_w: alpha is not monoidal");
    }
    for (Elem a = 0; a < t.order(); ++a) {
      for (Elem b = 0; b < t.order(); ++b) {
        if (r.mul(alpha[a], alpha[b]) != alpha[t.mul(a, b)]) {
          throw PreconditionError("st_to_w: alpha is not a homomorphism");
        }
      }
    }
    std::vector<Elem> const proj1 = projections(r);
    for (Elem m = 0; m < r.order(); ++m) {
      bool found = false;
      for (Elem e : proj1) {
        for (Elem u = 0; u < t.order() && !found; ++u) {
          found = r.mul(e, alpha[u]) == m;
        }
      }
      if (!found) {
        throw PreconditionError("st_to_w: the image of alpha does not "
                                "P-generate S^1 (misses "
                                + r.name(m) + ")");
      }
    }
    std::vector<Elem> embed(s.order());
    for (Elem a = 0; a < s.order(); ++a) {
      embed[a] = a;
    }
    StToW                       out;
    out.st                       = s_t_r(s, r, embed, t, alpha);
    ProjectionSemilattice const y = projection_semilattice(s);
    std::vector<IdealIso>       maps;
    for (Elem u = 0; u < t.order(); ++u) {
      std::vector<std::pair<Elem, Elem>> pairs;
      for (Elem e : y.element) {
        if (natural_leq(r, e, r.plus(alpha[u]))) {
          pairs.emplace_back(y.index[e], y.index[r.star(r.mul(e, alpha[u]))]);
        }
      }
      try {
        maps.push_back(IdealIso::from_pairs(y.lattice, pairs));
      } catch (InputError const& e) {
        throw InternalError(std::string("st_to_w: induced map is not an "
                                        "ideal isomorphism: ")
                            + e.what());
      }
    }
    out.action = validate_action(t, y.lattice, std::move(maps));
    out.w      = w_product(out.action);
    for (auto [a, u] : out.st.catalog) {
      out.forward.push_back(out.w.index_of(u, y.index[s.star(a)]));
    }
    for (auto [u, f] : out.w.catalog) {
      Elem const a = r.mul(alpha[u], y.element[f]);
      out.backward.push_back(a < s.order() ? out.st.index_of(a, u) : npos);
    }
    auto const defined = [](Map const& m) {
      return std::ranges::none_of(m, [](Elem x) { return x == npos; });
    };
    out.ok = defined(out.forward) && defined(out.backward)
             && out.forward.size() == out.backward.size();
    for (Elem i = 0; out.ok && i < out.forward.size(); ++i) {
      out.ok = out.backward[out.forward[i]] == i;
    }
    out.ok = out.ok
             && is_isomorphism(out.st.semigroup, out.w.semigroup, out.forward)
             && is_isomorphism(out.w.semigroup, out.st.semigroup, out.backward);
    return out;
  }

  CoverReport verify_cover(RSemigroup const&     n,
                           RSemigroup const&     s,
                           std::span<Elem const> beta) {
    CoverReport rep;
    rep.homomorphism = is_homomorphism(n, s, beta);
    if (!rep.homomorphism) {
      throw InputError("verify_cover: beta is not a homomorphism");
    }
    std::vector<Elem> const pn = projections(n);
    std::vector<Elem> const ps = projections(s);
    std::vector<bool>       hit(s.order(), false);
    for (Elem x : beta) {
      hit[x] = true;
    }
    rep.onto          = std::ranges::all_of(hit, [](bool b) { return b; });
    rep.full_image    = std::ranges::all_of(ps, [&](Elem e) { return hit[e]; });
    rep.p_separating  = true;
    std::vector<bool> proj_hit(s.order(), false);
    for (Elem e : pn) {
      rep.p_separating = rep.p_separating && !proj_hit[beta[e]];
      proj_hit[beta[e]] = true;
    }
    if (!classify(n).is_almost_perfect) {
      throw PreconditionError("verify_cover: N is not almost perfect");
    }
    if (!rep.p_separating) {
      throw PreconditionError("verify_cover: beta is not P-separating");
    }
    if (!rep.full_image) {
      throw PreconditionError("verify_cover: the image of beta is not full");
    }
    Quotient const t  = quotient(n, sigma(n).partition());
    CMonoid const  cn = c_monoid(n);
    CMonoid const  cs = c_monoid(s);
    Kappa const    k  = kappa(n, cn);
    Map const      hb = hat_extend(n, s, beta, cn, cs);
    std::vector<Elem> alpha;
    for (Elem i : k.image) {
      alpha.push_back(hb[i]);
    }
    rep.target = s_t_r(s, cs.monoid, tau(s, cs), Monoid::of(t.semigroup), alpha);
    for (Elem x = 0; x < n.order(); ++x) {
      rep.omega.push_back(rep.target.index_of(beta[x], t.map[x]));
    }
    rep.below_image = true;
    for (Elem a = 0; a < s.order(); ++a) {
      rep.below_image = rep.below_image
                        && std::ranges::any_of(alpha, [&](Elem i) {
                             return cs.catalog[i].contains(a);
                           });
    }
    if (std::ranges::any_of(rep.omega, [](Elem x) { return x == npos; })) {
      rep.failure = "omega leaves S_{T,C(S)}";
    } else if (!is_isomorphism(n, rep.target.semigroup, rep.omega)) {
      rep.failure = "omega is not an isomorphism";
    } else if (rep.onto && !rep.below_image) {
      rep.failure = "beta is onto but S is not inside (T alpha)-down";
    }
    rep.ok = rep.failure.empty();
    return rep;
  }

  RRepReport r_rep(RSemigroup const& s) {
    if (!classify(s).is_almost_perfect) {
      throw PreconditionError("r_rep: the semigroup is not almost perfect");
    }
    RRepReport         rep;
    rep.f              = quotient(s, mu(s).partition());
    MunnRep const      m  = munn_rep(s);
    IsoSemigroup const ty = munn_semigroup(m.y.lattice);
    std::vector<Elem>  image;
    for (IdealIso const& th : m.theta) {
      image.push_back(ty.index_of(th));
    }
    Restriction const img = restrict_to(ty.semigroup, image);
    rep.munn_image_iso    = isomorphic(img.semigroup, rep.f.semigroup);
    rep.cover             = verify_cover(s, rep.f.semigroup, rep.f.map);
    rep.ok                = rep.munn_image_iso && rep.cover.ok;
    return rep;
  }

  std::vector<STRProduct> cover_catalog(RSemigroup const& s,
                                        std::size_t       max_monoid) {
    CMonoid const           cs  = c_monoid(s);
    Map const               tau_s = tau(s, cs);
    std::size_t const       k   = cs.catalog.size();
    std::vector<STRProduct> out;
    for (Monoid const& t : enumerate_monoids(max_monoid)) {
      std::size_t total = 1;
      for (std::size_t i = 1; i < t.order(); ++i) {
        total *= k;
        if (total > (1U << 20)) {
          throw ResourceError("cover_catalog: too many candidate maps");
        }
      }
      std::vector<Elem> alpha(t.order(), cs.one);
      std::vector<Elem> free;
      for (Elem u = 0; u < t.order(); ++u) {
        if (u != t.identity()) {
          free.push_back(u);
        }
      }
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (Elem u : free) {
          alpha[u] = c % k;
          c /= k;
        }
        bool hom = true;
        for (Elem a = 0; a < t.order() && hom; ++a) {
          for (Elem b = 0; b < t.order() && hom; ++b) {
            hom = cs.monoid.mul(alpha[a], alpha[b]) == alpha[t.mul(a, b)];
          }
        }
        if (!hom) {
          continue;
        }
        bool covers = true;
        for (Elem a = 0; a < s.order() && covers; ++a) {
          covers = std::ranges::any_of(alpha, [&](Elem i) {
            return cs.catalog[i].contains(a);
          });
        }
        if (!covers) {
          continue;
        }
        STRProduct p = s_t_r(s, cs.monoid, tau_s, t, alpha);
        bool const seen = std::ranges::any_of(out, [&](STRProduct const& q) {
          return isomorphic(q.semigroup, p.semigroup);
        });
        if (!seen) {
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

}  // namespace rsg
