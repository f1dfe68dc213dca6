#include "rsg/construct.hpp"

#include <algorithm>

#include "rsg/classification.hpp"
#include "rsg/errors.hpp"

namespace rsg {

  Monoid::Monoid(Table const& mul, Elem identity, std::vector<std::string> labels)
      : n_(mul.size()), one_(identity), labels_(std::move(labels)) {
    if (n_ == 0) {
      throw InputError("a monoid must have at least one element");
    }
    if (one_ >= n_) {
      throw InputError("monoid identity index out of range");
    }
    if (!labels_.empty() && labels_.size() != n_) {
      throw InputError("labels must be absent or one per element");
    }
    mul_.reserve(n_ * n_);
    for (auto const& row : mul) {
      if (row.size() != n_) {
        throw InputError("monoid table is not square");
      }
      for (Elem v : row) {
        if (v >= n_) {
          throw InputError("monoid table contains out-of-range index "
                           + std::to_string(v));
        }
        mul_.push_back(v);
      }
    }
    for (Elem a = 0; a < n_; ++a) {
      if (this->mul(one_, a) != a || this->mul(a, one_) != a) {
        throw InputError("element " + std::to_string(one_)
                         + " is not a two-sided identity");
      }
      for (Elem b = 0; b < n_; ++b) {
        for (Elem c = 0; c < n_; ++c) {
          if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c))) {
            throw InputError("monoid table is not associative at ("
                             + std::to_string(a) + "," + std::to_string(b)
                             + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  Monoid Monoid::of(RSemigroup const& s) {
    if (!s.identity()) {
      throw PreconditionError("not a monoid");
    }
    return Monoid(s.table(), *s.identity(), s.labels());
  }

  Monoid Monoid::trivial() { return Monoid({{0}}, 0, {"1"}); }

  Monoid Monoid::cyclic_group(std::size_t n) {
    Table                    mul(n, std::vector<Elem>(n));
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) {
      labels[a] = a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a);
      for (Elem b = 0; b < n; ++b) {
        mul[a][b] = (a + b) % n;
      }
    }
    return Monoid(mul, 0, labels);
  }

  Table Monoid::table() const {
    Table t(n_, std::vector<Elem>(n_));
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        t[a][b] = mul(a, b);
      }
    }
    return t;
  }

  std::string Monoid::name(Elem a) const {
    return a < labels_.size() ? labels_[a] : std::to_string(a);
  }

  bool Monoid::is_group() const {
    for (Elem a = 0; a < n_; ++a) {
      bool has_inverse = false;
      for (Elem b = 0; b < n_ && !has_inverse; ++b) {
        has_inverse = mul(a, b) == one_ && mul(b, a) == one_;
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

  RSemigroup Monoid::as_reduced() const {
    std::vector<Elem> one(n_, one_);
    return RSemigroup(table(), one, one, labels_);
  }

  std::string to_string(ActionKind k) {
    return k == ActionKind::homomorphism ? "homomorphism" : "subhomomorphism";
  }

  MonoidAction validate_action(Monoid                    t,
                               Semilattice               y,
                               std::vector<IdealIso>     alpha,
                               std::optional<ActionKind> declared) {
    if (alpha.size() != t.order()) {
      throw InputError("action: need one ideal isomorphism per monoid "
                       "element");
    }
    for (IdealIso const& f : alpha) {
      if (f.degree() != y.order()) {
        throw InputError("action: map over a different semilattice");
      }
    }
    if (!(alpha[t.identity()]
          == IdealIso::identity(y.order(), ElemSet::full(y.order())))) {
      throw InputError("action: alpha(1) is not the identity of Y");
    }
    ActionKind kind = ActionKind::homomorphism;
    for (Elem a = 0; a < t.order(); ++a) {
      for (Elem b = 0; b < t.order(); ++b) {
        auto const      ab     = iso_compose(alpha[a], alpha[b]);
        IdealIso const& target = alpha[t.mul(a, b)];
        if (ab && *ab == target) {
          continue;
        }
        if (!ab || !iso_leq(*ab, target)) {
          throw InputError("action: alpha(" + t.name(a) + ")alpha("
                           + t.name(b) + ") is not below alpha("
                           + t.name(t.mul(a, b)) + ")");
        }
        kind = ActionKind::subhomomorphism;
      }
    }
    if (declared && *declared != kind) {
      throw PreconditionError("action declared " + to_string(*declared)
                              + " but is a " + to_string(kind));
    }
    return {std::move(t), std::move(y), std::move(alpha), kind};
  }

  WProduct w_product(MonoidAction const& act) {
    Monoid const&      t  = act.monoid;
    Semilattice const& y  = act.semilattice;
    std::size_t const  ny = y.order();
    WProduct           w;
    w.action = act;
    w.lookup.assign(t.order() * ny, npos);
    for (Elem u = 0; u < t.order(); ++u) {
      act.ran(u).for_each([&](Elem f) {
        w.lookup[u * ny + f] = w.catalog.size();
        w.catalog.push_back({u, f});
      });
    }
    std::vector<IdealIso> inv;
    for (IdealIso const& f : act.alpha) {
      inv.push_back(f.inverse());
    }
    std::size_t const        n = w.catalog.size();
    Table                    mul(n, std::vector<Elem>(n));
    std::vector<Elem>        plus(n), star(n);
    std::vector<std::string> labels(n);
    for (Elem i = 0; i < n; ++i) {
      auto [a, g] = w.catalog[i];
      labels[i]   = "(" + t.name(a) + "," + std::to_string(g) + ")";
      plus[i]     = w.index_of(t.identity(), inv[a](g));
      star[i]     = w.index_of(t.identity(), g);
      for (Elem j = 0; j < n; ++j) {
        auto [b, h]  = w.catalog[j];
        Elem const m = y.meet(g, inv[b](h));
        Elem const k = w.index_of(t.mul(a, b), act.alpha[b](m));
        if (k == npos) {
          throw InternalError("W-product not closed at " + labels[i] + " "
                              + std::to_string(j));
        }
        mul[i][j] = k;
      }
    }
    w.semigroup = RSemigroup(mul, plus, star, labels);
    return w;
  }

  Elem STRProduct::index_of(Elem a, Elem u) const {
    auto it = std::ranges::lower_bound(catalog, std::pair{a, u});
    if (it == catalog.end() || *it != std::pair{a, u}) {
      return npos;
    }
    return static_cast<Elem>(it - catalog.begin());
  }

  STRProduct s_t_r(RSemigroup const&     s,
                   RSemigroup const&     r,
                   std::span<Elem const> embed,
                   Monoid const&         t,
                   std::span<Elem const> alpha) {
    auto const one = r.identity();
    if (!one) {
      throw InputError("s_t_r: R is not a monoid");
    }
    if (!is_homomorphism(s, r, embed)) {
      throw InputError("s_t_r: embedding is not a homomorphism");
    }
    std::vector<Elem> in_s(r.order(), npos);
    for (Elem a = 0; a < s.order(); ++a) {
      if (in_s[embed[a]] != npos) {
        throw InputError("s_t_r: embedding is not injective");
      }
      in_s[embed[a]] = a;
    }
    if (alpha.size() != t.order()) {
      throw InputError("s_t_r: alpha needs one image per element of T");
    }
    for (Elem v : alpha) {
      if (v >= r.order()) {
        throw InputError("s_t_r: alpha image out of range");
      }
    }
    if (alpha[t.identity()] != *one) {
      throw InputError("s_t_r: alpha is not monoidal");
    }
    STRProduct out;
    out.t = t;
    for (Elem a = 0; a < t.order(); ++a) {
      for (Elem b = 0; b < t.order(); ++b) {
        Elem const prod   = r.mul(alpha[a], alpha[b]);
        Elem const target = alpha[t.mul(a, b)];
        if (prod == target) {
          continue;
        }
        if (!natural_leq(r, prod, target)) {
          throw InputError("s_t_r: alpha is not a subhomomorphism at ("
                           + t.name(a) + "," + t.name(b) + ")");
        }
        out.kind = ActionKind::subhomomorphism;
      }
    }
    std::vector<Elem> const projs = projections(s);
    for (Elem x = 0; x < r.order(); ++x) {
      for (bool const left : {true, false}) {
        Elem const bound = left ? r.plus(x) : r.star(x);
        bool       any   = false;
        for (Elem e : projs) {
          if (!natural_leq(r, embed[e], bound)) {
            continue;
          }
          any             = true;
          Elem const prod = left ? r.mul(embed[e], x) : r.mul(x, embed[e]);
          if (in_s[prod] == npos) {
            throw PreconditionError(
                "s_t_r: " + (left ? s.name(e) + " r" : "r " + s.name(e))
                + " is not in S for r = " + r.name(x));
          }
        }
        if (!any) {
          throw PreconditionError(std::string("s_t_r: no projection of S below ")
                                  + (left ? "r+" : "r*") + " for r = "
                                  + r.name(x));
        }
      }
    }
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem u = 0; u < t.order(); ++u) {
        if (natural_leq(r, embed[a], alpha[u])) {
          out.catalog.emplace_back(a, u);
        }
      }
    }
    std::size_t const        n = out.catalog.size();
    Table                    mul(n, std::vector<Elem>(n));
    std::vector<Elem>        plus(n), star(n);
    std::vector<std::string> labels(n);
    auto                     at = [&](Elem a, Elem u) {
      Elem const k = out.index_of(a, u);
      if (k == npos) {
        throw InternalError("S_{T,R} is not closed");
      }
      return k;
    };
    for (Elem i = 0; i < n; ++i) {
      auto [a, u] = out.catalog[i];
      labels[i]   = "(" + s.name(a) + "," + t.name(u) + ")";
      plus[i]     = at(s.plus(a), t.identity());
      star[i]     = at(s.star(a), t.identity());
      for (Elem j = 0; j < n; ++j) {
        auto [b, v] = out.catalog[j];
        mul[i][j]   = at(s.mul(a, b), t.mul(u, v));
      }
      out.first.push_back(a);
      out.second.push_back(u);
    }
    out.semigroup = RSemigroup(mul, plus, star, labels);
    return out;
  }

  STRProduct t_proper_cover(RSemigroup const& s) {
    Adjoined const    s1 = adjoin_identity(s);
    Monoid const      t  = Monoid::of(s1.semigroup);
    std::vector<Elem> embed(s.order()), alpha(t.order());
    for (Elem a = 0; a < s.order(); ++a) {
      embed[a] = a;
    }
    for (Elem a = 0; a < t.order(); ++a) {
      alpha[a] = a;
    }
    return s_t_r(s, s1.semigroup, embed, t, alpha);
  }

  STRProduct special_cover(RSemigroup const& s) {
    CMonoid const c = c_monoid(s);
    Kappa const   k = kappa(s, c);
    return s_t_r(s, c.monoid, tau(s, c), Monoid::of(k.t.semigroup), k.image);
  }

  bool actions_equivalent(MonoidAction const&   a,
                          MonoidAction const&   b,
                          std::span<Elem const> phi,
                          std::span<Elem const> psi) {
    Monoid const&      ta = a.monoid;
    Monoid const&      tb = b.monoid;
    Semilattice const& ya = a.semilattice;
    Semilattice const& yb = b.semilattice;
    if (ta.order() != tb.order() || ya.order() != yb.order()
        || phi.size() != ta.order() || psi.size() != ya.order()) {
      return false;
    }
    std::vector<bool> hit_t(tb.order(), false), hit_y(yb.order(), false);
    for (Elem x : phi) {
      if (x >= tb.order() || hit_t[x]) {
        return false;
      }
      hit_t[x] = true;
    }
    for (Elem x : psi) {
      if (x >= yb.order() || hit_y[x]) {
        return false;
      }
      hit_y[x] = true;
    }
    for (Elem u = 0; u < ta.order(); ++u) {
      for (Elem v = 0; v < ta.order(); ++v) {
        if (phi[ta.mul(u, v)] != tb.mul(phi[u], phi[v])) {
          return false;
        }
      }
    }
    for (Elem e = 0; e < ya.order(); ++e) {
      for (Elem f = 0; f < ya.order(); ++f) {
        if (psi[ya.meet(e, f)] != yb.meet(psi[e], psi[f])) {
          return false;
        }
      }
    }
    for (Elem u = 0; u < ta.order(); ++u) {
      IdealIso const& fa = a.alpha[u];
      IdealIso const& fb = b.alpha[phi[u]];
      for (Elem e = 0; e < ya.order(); ++e) {
        if (fa.defined(e) != fb.defined(psi[e])) {
          return false;
        }
        if (fa.defined(e) && psi[fa(e)] != fb(psi[e])) {
          return false;
        }
      }
    }
    return true;
  }

  bool round_trip_equivalent(MonoidAction const&   act,
                             WProduct const&       w,
                             Reconstruction const& r) {
    Elem const        one = act.monoid.identity();
    std::vector<Elem> phi(act.monoid.order()), psi(act.semilattice.order());
    for (Elem u = 0; u < act.monoid.order(); ++u) {
      phi[u] = r.t.map[w.index_of(u, act.ran(u).first())];
    }
    for (Elem f = 0; f < act.semilattice.order(); ++f) {
      psi[f] = r.y.index[w.index_of(one, f)];
    }
    return actions_equivalent(act, r.action, phi, psi);
  }

}  // namespace rsg
