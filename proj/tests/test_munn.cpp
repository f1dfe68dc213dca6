#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rsg/classification.hpp"
#include "rsg/congruence.hpp"
#include "rsg/corpus.hpp"
#include "rsg/cset.hpp"
#include "rsg/errors.hpp"
#include "rsg/munn.hpp"

using namespace rsg;

TEST_CASE("Munn semigroups are restriction semigroups of the expected size") {
  IsoSemigroup const t2 = munn_semigroup(chain(2));
  IsoSemigroup const tv = munn_semigroup(v3());
  IsoSemigroup const iv = ideal_iso_semigroup(v3());
  CHECK(t2.semigroup.order() == 2);
  CHECK(tv.semigroup.order() == 5);
  CHECK(iv.semigroup.order() == 7);
  for (IsoSemigroup const* m : {&t2, &tv, &iv}) {
    CHECK(oracle::axioms(m->semigroup));
    CHECK(inverse_structure(m->semigroup).has_value());
  }
  // x(fg) = (xf)g read off the table
  for (Elem f = 0; f < iv.catalog.size(); ++f) {
    for (Elem g = 0; g < iv.catalog.size(); ++g) {
      IdealIso const& h = iv.catalog[iv.semigroup.mul(f, g)];
      for (Elem x = 0; x < 3; ++x) {
        bool const through = iv.catalog[f].defined(x)
                             && iv.catalog[g].defined(iv.catalog[f](x));
        REQUIRE(h.defined(x) == through);
        if (through) {
          CHECK(h(x) == iv.catalog[g](iv.catalog[f](x)));
        }
      }
    }
  }
}

TEST_CASE("Munn representation is a homomorphism whose kernel is mu") {
  std::vector<RSemigroup> corpus = enumerate_restriction_semigroups(3);
  for (auto& e : named_examples()) {
    corpus.push_back(e.semigroup);
  }
  for (RSemigroup const& s : corpus) {
    MunnRep const      m  = munn_rep(s);
    IsoSemigroup const ty = munn_semigroup(m.y.lattice);
    Map                theta;
    for (IdealIso const& f : m.theta) {
      theta.push_back(ty.index_of(f));
      REQUIRE(theta.back() != npos);
    }
    CHECK(is_homomorphism(s, ty.semigroup, theta));
    for (Elem a = 0; a < s.order(); ++a) {
      // theta_a: e -> (ea)* on a+-down, computed from the tables alone
      for (Elem e : oracle::projections(s)) {
        Elem const i = m.y.index[e];
        if (oracle::leq(s, e, s.plus(a))) {
          CHECK(m.theta[a](i) == m.y.index[s.star(s.mul(e, a))]);
        } else {
          CHECK_FALSE(m.theta[a].defined(i));
        }
      }
      for (Elem b = 0; b < s.order(); ++b) {
        CHECK((m.theta[a] == m.theta[b]) == mu(s).same(a, b));
      }
    }
    MunnRep const l = left_munn_rep(s);
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem b = 0; b < s.order(); ++b) {
        CHECK((l.theta[a] == l.theta[b]) == mu(s).same(a, b));
      }
    }
  }
}

TEST_CASE("Sigma: C(T_Y) is isomorphic to TI_Y") {
  for (Semilattice const& y : enumerate_semilattices(4)) {
    SigmaReport const r = verify_sigma_iso(y);
    INFO(r.failure);
    CHECK(r.ok);
    CHECK(r.c_size == r.ti_size);
    CHECK(c_monoid(munn_semigroup(y).semigroup).catalog.size() == r.c_size);
  }
  CHECK(verify_sigma_iso(chain(2)).c_size == 2);
  CHECK(verify_sigma_iso(v3()).c_size == 7);
  IsoSemigroup const ty = munn_semigroup(v3());
  std::size_t         rejected = 0;
  for (Elem a = 0; a < ty.catalog.size(); ++a) {
    for (Elem b = a; b < ty.catalog.size(); ++b) {
      ElemSet const set{a, b};
      if (!is_permissible(ty.semigroup, set)) {
        CHECK_THROWS_AS(sigma_union(ty, set), InputError);
        ++rejected;
        continue;
      }
      IdealIso const u = sigma_union(ty, set);
      for (Elem x = 0; x < 3; ++x) {
        bool in = false;
        for (Elem m : {a, b}) {
          if (ty.catalog[m].defined(x)) {
            CHECK(u(x) == ty.catalog[m](x));
            in = true;
          }
        }
        CHECK(u.defined(x) == in);
      }
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("theta-bar extends the Munn representation") {
  RSemigroup const            s = named("W(C2,V3)");
  ProjectionSemilattice const y = projection_semilattice(s);
  CMonoid const               c = c_monoid(s);
  MunnRep const               m = munn_rep(s);
  Map const                   t = tau(s, c);
  std::vector<IdealIso> const bar = extend_munn(s, y, c);
  for (Elem a = 0; a < s.order(); ++a) {
    CHECK(bar[t[a]] == m.theta[a]);
  }
}
