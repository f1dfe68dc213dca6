#include "rsg/cset.hpp"

#include <algorithm>
#include <set>

#include "rsg/classification.hpp"
#include "rsg/errors.hpp"
#include "rsg/munn.hpp"

namespace rsg {

  namespace {

    bool compatible(RSemigroup const& s, Elem a, Elem b) {
      return s.mul(s.plus(a), b) == s.mul(s.plus(b), a)
             && s.mul(a, s.star(b)) == s.mul(b, s.star(a));
    }

    void require_small(RSemigroup const& s, char const* what) {
      if (s.order() > ElemSet::capacity) {
        throw ResourceError(std::string(what) + ": order exceeds 64");
      }
    }

    class Enumerator {
     public:
      Enumerator(RSemigroup const& s, std::size_t limit)
          : s_(s), limit_(limit), down_(s.order()), compat_(s.order()) {
        for (Elem a = 0; a < s.order(); ++a) {
          down_[a] = down_set(s, a);
          for (Elem b = 0; b < s.order(); ++b) {
            if (compatible(s, a, b)) {
              compat_[a].insert(b);
            }
          }
        }
      }

      std::set<ElemSet> run() {
        extend(ElemSet(), 0);
        return std::move(found_);
      }

     private:
      // Grows unions of down-sets of pairwise compatible elements; every
      // permissible set is such a union (of the down-sets of its members).
      void extend(ElemSet current, Elem from) {
        if (!current.empty()) {
          found_.insert(current);
          if (found_.size() > limit_) {
            throw ResourceError("c_monoid: more than "
                                + std::to_string(limit_)
                                + " permissible sets");
          }
        }
        for (Elem x = from; x < s_.order(); ++x) {
          if (current.contains(x)) {
            continue;
          }
          ElemSet const next  = current | down_[x];
          bool          ok    = true;
          ElemSet const fresh = ElemSet(next.bits() & ~current.bits());
          fresh.for_each([&](Elem z) { ok = ok && next.subset_of(compat_[z]); });
          if (ok) {
            extend(next, x + 1);
          }
        }
      }

      RSemigroup const&    s_;
      std::size_t          limit_;
      std::vector<ElemSet> down_;
      std::vector<ElemSet> compat_;
      std::set<ElemSet>    found_;
    };

    ElemSet image(ElemSet a, auto&& f) {
      ElemSet out;
      a.for_each([&](Elem x) { out.insert(f(x)); });
      return out;
    }

    std::string set_label(RSemigroup const& s, ElemSet a) {
      std::string out = "{";
      bool        first = true;
      a.for_each([&](Elem x) {
        out += (first ? "" : ",") + s.name(x);
        first = false;
      });
      return out + "}";
    }

  }  // namespace

  bool is_permissible(RSemigroup const& s, ElemSet a) {
    require_small(s, "is_permissible");
    if (a.empty() || !a.subset_of(ElemSet::full(s.order()))) {
      return false;
    }
    for (Elem x : a.members()) {
      if (!down_set(s, x).subset_of(a)) {
        return false;
      }
      for (Elem y : a.members()) {
        if (!compatible(s, x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  Elem CMonoid::index_of(ElemSet a) const {
    auto it = std::ranges::lower_bound(catalog, a);
    if (it == catalog.end() || *it != a) {
      return npos;
    }
    return static_cast<Elem>(it - catalog.begin());
  }

  CMonoid c_monoid(RSemigroup const& s, std::size_t limit) {
    require_small(s, "c_monoid");
    CMonoid out;
    auto    sets = Enumerator(s, limit).run();
    out.catalog.assign(sets.begin(), sets.end());
    std::size_t const        k = out.catalog.size();
    Table                    mul(k, std::vector<Elem>(k));
    std::vector<Elem>        plus(k), star(k);
    std::vector<std::string> labels(k);
    auto                     lookup = [&](ElemSet a, char const* what) {
      Elem const i = out.index_of(a);
      if (i == npos) {
        throw InternalError(std::string("C(S) not closed under ") + what
                            + ": " + set_label(s, a));
      }
      return i;
    };
    for (Elem i = 0; i < k; ++i) {
      ElemSet const a = out.catalog[i];
      if (!is_permissible(s, a)) {
        throw InternalError("enumerated set is not permissible: "
                            + set_label(s, a));
      }
      labels[i] = set_label(s, a);
      plus[i]   = lookup(image(a, [&](Elem x) { return s.plus(x); }), "+");
      star[i]   = lookup(image(a, [&](Elem x) { return s.star(x); }), "*");
      for (Elem j = 0; j < k; ++j) {
        ElemSet prod;
        a.for_each([&](Elem x) {
          out.catalog[j].for_each([&](Elem y) { prod.insert(s.mul(x, y)); });
        });
        mul[i][j] = lookup(prod, "products");
      }
    }
    out.one    = lookup(projection_set(s), "identity");
    out.monoid = RSemigroup(mul, plus, star, labels);
    if (out.monoid.identity() != out.one) {
      throw InternalError("P_S is not the identity of C(S)");
    }
    return out;
  }

  Map tau(RSemigroup const& s, CMonoid const& c) {
    Map out(s.order());
    for (Elem a = 0; a < s.order(); ++a) {
      out[a] = c.index_of(down_set(s, a));
      if (out[a] == npos) {
        throw InternalError("principal order ideal of " + s.name(a)
                            + " is not permissible");
      }
    }
    return out;
  }

  Kappa kappa(RSemigroup const& s, CMonoid const& c) {
    Partition const p = sigma(s).partition();
    if (!is_proper(s, p)) {
      throw PreconditionError("kappa: the semigroup is not proper");
    }
    Kappa k{quotient(s, p), {}, true};
    for (auto const& block : p.blocks()) {
      Elem const i = c.index_of(ElemSet::from(block));
      if (i == npos) {
        throw InternalError("a sigma-class of a proper semigroup is not "
                            "permissible");
      }
      k.image.push_back(i);
    }
    RSemigroup const& t = k.t.semigroup;
    for (Elem a = 0; a < t.order(); ++a) {
      for (Elem b = 0; b < t.order(); ++b) {
        Elem const prod   = c.monoid.mul(k.image[a], k.image[b]);
        Elem const target = k.image[t.mul(a, b)];
        if (prod != target) {
          k.is_homomorphism = false;
          if (!c.catalog[prod].subset_of(c.catalog[target])) {
            throw InternalError("kappa is not a subhomomorphism");
          }
        }
      }
    }
    return k;
  }

  KappaThetaBar kappa_theta_bar(RSemigroup const& s, CMonoid const& c) {
    KappaThetaBar out{kappa(s, c), projection_semilattice(s), {}, true};
    for (Elem i : out.kappa.image) {
      out.alpha.push_back(extend_munn_at(s, out.y, c.catalog[i]));
    }
    RSemigroup const& t = out.kappa.t.semigroup;
    for (Elem a = 0; a < t.order(); ++a) {
      for (Elem b = 0; b < t.order(); ++b) {
        auto const       ab     = iso_compose(out.alpha[a], out.alpha[b]);
        IdealIso const&  target = out.alpha[t.mul(a, b)];
        if (!ab || !(*ab == target)) {
          out.is_homomorphism = false;
          if (!ab || !iso_leq(*ab, target)) {
            throw InternalError("kappa theta-bar is not a subhomomorphism");
          }
        }
      }
    }
    if (out.is_homomorphism != classify(s).is_almost_perfect) {
      throw InternalError("homomorphy of kappa theta-bar disagrees with "
                          "almost perfection");
    }
    return out;
  }

  Map hat_extend(RSemigroup const&     s,
                 RSemigroup const&     u,
                 std::span<Elem const> beta,
                 CMonoid const&        cs,
                 CMonoid const&        cu) {
    if (!is_homomorphism(s, u, beta)) {
      throw InputError("hat_extend: map is not a homomorphism");
    }
    require_small(u, "hat_extend");
    ElemSet const img = ElemSet::from({beta.begin(), beta.end()});
    for (Elem x : img.members()) {
      if (!down_set(u, x).subset_of(img)) {
        throw PreconditionError("hat_extend: image is not an order ideal");
      }
    }
    Map out(cs.catalog.size());
    for (Elem i = 0; i < cs.catalog.size(); ++i) {
      ElemSet const a = image(cs.catalog[i], [&](Elem x) { return beta[x]; });
      out[i]          = cu.index_of(a);
      if (out[i] == npos) {
        throw InternalError("image of a permissible set is not permissible");
      }
    }
    return out;
  }

}  // namespace rsg
