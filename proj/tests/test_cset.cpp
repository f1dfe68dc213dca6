#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rsg/classification.hpp"
#include "rsg/congruence.hpp"
#include "rsg/corpus.hpp"
#include "rsg/cset.hpp"
#include "rsg/errors.hpp"

using namespace rsg;

namespace {

  std::vector<RSemigroup> corpus() {
    std::vector<RSemigroup> out = enumerate_restriction_semigroups(3);
    for (auto& e : named_examples()) {
      out.push_back(e.semigroup);
    }
    return out;
  }

}  // namespace

TEST_CASE("permissible sets match a subset scan") {
  for (RSemigroup const& s : corpus()) {
    CMonoid const               c = c_monoid(s);
    std::set<std::vector<Elem>> lib;
    for (ElemSet a : c.catalog) {
      lib.insert(a.members());
      CHECK(is_permissible(s, a));
    }
    CHECK(lib == oracle::permissible_sets(s));
    CHECK(oracle::axioms(c.monoid));
    CHECK(c.monoid.identity() == c.one);
    CHECK(c.catalog[c.one] == projection_set(s));
    CHECK(c.index_of(ElemSet{}) == npos);
  }
  CHECK(c_monoid(named("W(C2,V3)")).catalog.size() == 8);
  CHECK(c_monoid(as_rsemigroup(v3())).catalog.size() == 4);
  CHECK_FALSE(is_permissible(named("W(C2,V3)"), ElemSet{}));
}

TEST_CASE("C(S) operations are setwise") {
  RSemigroup const s = named("W(C2,V3)");
  CMonoid const    c = c_monoid(s);
  for (Elem i = 0; i < c.catalog.size(); ++i) {
    ElemSet plus;
    c.catalog[i].for_each([&](Elem x) { plus.insert(s.plus(x)); });
    CHECK(c.catalog[c.monoid.plus(i)] == plus);
    for (Elem j = 0; j < c.catalog.size(); ++j) {
      ElemSet prod;
      c.catalog[i].for_each([&](Elem x) {
        c.catalog[j].for_each([&](Elem y) { prod.insert(s.mul(x, y)); });
      });
      CHECK(c.catalog[c.monoid.mul(i, j)] == prod);
    }
  }
}

TEST_CASE("tau embeds S in C(S)") {
  for (RSemigroup const& s : corpus()) {
    CMonoid const c = c_monoid(s);
    Map const     t = tau(s, c);
    CHECK(is_homomorphism(s, c.monoid, t));
    CHECK(std::set<Elem>(t.begin(), t.end()).size() == s.order());
  }
}

TEST_CASE("kappa") {
  CHECK_THROWS_AS(kappa(i2(), c_monoid(i2())), PreconditionError);
  CHECK_THROWS_AS(kappa_theta_bar(i2(), c_monoid(i2())), PreconditionError);
  for (RSemigroup const& s : corpus()) {
    ClassificationReport const r = classify(s);
    if (!r.is_proper) {
      continue;
    }
    CMonoid const c = c_monoid(s);
    Kappa const   k = kappa(s, c);
    CHECK(k.is_homomorphism == r.sigma_perfect);
    KappaThetaBar const kt = kappa_theta_bar(s, c);
    CHECK(kt.is_homomorphism == r.is_almost_perfect);
  }
  RSemigroup const sub = named("W(C2,2-chain,sub)");
  CHECK_FALSE(kappa_theta_bar(sub, c_monoid(sub)).is_homomorphism);
}

TEST_CASE("hat_extend") {
  RSemigroup const  w  = named("W(C2,V3)");
  Restriction const p  = restrict_to(w, projection_set(w));
  CMonoid const     cw = c_monoid(w);
  CMonoid const     cp = c_monoid(p.semigroup);
  Map const         h  = hat_extend(p.semigroup, w, p.embedding, cp, cw);
  CHECK(is_homomorphism(cp.monoid, cw.monoid, h));
  for (Elem i = 0; i < cp.catalog.size(); ++i) {
    ElemSet img;
    cp.catalog[i].for_each([&](Elem x) { img.insert(p.embedding[x]); });
    CHECK(cw.catalog[h[i]] == img);
  }

  RSemigroup const  b   = monoid_b();
  Elem const        one = *b.identity();
  Restriction const top = restrict_to(b, ElemSet{one});
  CHECK_THROWS_AS(hat_extend(top.semigroup, b, top.embedding,
                             c_monoid(top.semigroup), c_monoid(b)),
                  PreconditionError);
  Map const swap{1, 0};
  CHECK_THROWS_AS(hat_extend(b, b, swap, c_monoid(b), c_monoid(b)), InputError);
}

TEST_CASE("c_monoid limit") {
  CHECK_THROWS_AS(c_monoid(named("W(C2,V3)"), 3), ResourceError);
}
