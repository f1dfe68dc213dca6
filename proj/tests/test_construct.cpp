#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rsg/classification.hpp"
#include "rsg/congruence.hpp"
#include "rsg/construct.hpp"
#include "rsg/corpus.hpp"
#include "rsg/cset.hpp"
#include "rsg/errors.hpp"
#include "rsg/isomorphism.hpp"

using namespace rsg;

namespace {

  std::size_t corner_units(RSemigroup const& m) {
    std::size_t n = 0;
    for (Elem a = 0; a < m.order(); ++a) {
      for (Elem b = 0; b < m.order(); ++b) {
        n += m.mul(a, b) == *m.identity() && m.mul(b, a) == *m.identity();
      }
    }
    return n;
  }

  Map identity_map(std::size_t n) {
    Map m(n);
    for (Elem a = 0; a < n; ++a) {
      m[a] = a;
    }
    return m;
  }

}  // namespace

TEST_CASE("W-product multiplication formula") {
  for (MonoidAction const& act : {swap_action(), sub_action(), idempotent_action()}) {
    WProduct const w = w_product(act);
    REQUIRE(oracle::axioms(w.semigroup));
    Semilattice const& y = act.semilattice;
    Monoid const&      t = act.monoid;
    std::size_t        expect = 0;
    for (Elem u = 0; u < t.order(); ++u) {
      expect += act.ran(u).size();
    }
    CHECK(w.semigroup.order() == expect);
    for (Elem i = 0; i < w.catalog.size(); ++i) {
      auto const [ti, g] = w.catalog[i];
      REQUIRE(act.ran(ti).contains(g));
      IdealIso const inv_t = act.alpha[ti].inverse();
      CHECK(w.catalog[w.semigroup.plus(i)] == WElement{t.identity(), inv_t(g)});
      CHECK(w.catalog[w.semigroup.star(i)] == WElement{t.identity(), g});
      for (Elem j = 0; j < w.catalog.size(); ++j) {
        auto const [uj, h] = w.catalog[j];
        Elem const pre     = act.alpha[uj].inverse()(h);
        Elem const f       = act.alpha[uj](y.meet(g, pre));
        CHECK(w.catalog[w.semigroup.mul(i, j)] == WElement{t.mul(ti, uj), f});
      }
    }
  }
  CHECK(w_product(swap_action()).semigroup.order() == 6);
  CHECK(w_product(sub_action()).semigroup.order() == 3);
}

TEST_CASE("S_T over B") {
  RSemigroup const b = monoid_b();
  STRProduct const n = t_proper_cover(b);
  Elem const       e = 0, one = 1;
  REQUIRE(b.name(e) == "e");
  using P = std::pair<Elem, Elem>;
  CHECK(n.catalog == std::vector<P>{{e, e}, {e, one}, {one, one}});
  CHECK(oracle::axioms(n.semigroup));
  CHECK(classify(n.semigroup).is_perfect);
  CHECK(n.kind == ActionKind::homomorphism);
  CHECK(n.index_of(one, e) == npos);
}

TEST_CASE("s_t_r rejects bad input") {
  RSemigroup const b  = monoid_b();
  Monoid const     t  = Monoid::of(b);
  Map const        id = identity_map(2);
  CHECK_THROWS_AS(s_t_r(b, named("W(C2,V3)"), id, t, id), InputError);
  CHECK_THROWS_AS(s_t_r(b, b, Map{0, 0}, t, id), InputError);
  CHECK_THROWS_AS(s_t_r(b, b, id, t, Map{0, 0}), InputError);
  CHECK_THROWS_AS(s_t_r(b, b, id, t, Map{1}), InputError);
}

TEST_CASE("Pi, reconstruction and round trips") {
  for (MonoidAction const& act : {swap_action(), sub_action(), idempotent_action()}) {
    PiIso const p = pi_iso(act);
    CHECK(p.ok);
    CHECK(is_isomorphism(p.source.semigroup, p.target.semigroup, p.pi));
    WProduct const       w = w_product(act);
    Reconstruction const r = reconstruct(w.semigroup);
    CHECK(r.ok);
    CHECK(r.action.kind == act.kind);
    CHECK(is_isomorphism(w.semigroup, r.w.semigroup, r.canonical));
    CHECK(round_trip_equivalent(act, w, r));
  }
  CHECK_THROWS_AS(reconstruct(i2()), PreconditionError);
}

TEST_CASE("actions_equivalent") {
  MonoidAction const a = swap_action();
  CHECK(actions_equivalent(a, a, identity_map(2), identity_map(3)));
  // relabelling the atoms commutes with the swap
  CHECK(actions_equivalent(a, a, identity_map(2), Map{0, 2, 1}));
  CHECK_FALSE(actions_equivalent(a, a, Map{0, 0}, identity_map(3)));
  CHECK_FALSE(actions_equivalent(a, sub_action(), identity_map(2), identity_map(3)));
}

TEST_CASE("S_T versus W(T, P_S)") {
  for (auto const& ex : named_examples()) {
    RSemigroup const& s  = ex.semigroup;
    Adjoined const    s1 = adjoin_identity(s);
    StToW const sw = st_to_w(s, Monoid::of(s1.semigroup), identity_map(s1.semigroup.order()));
    INFO(ex.name);
    CHECK(sw.ok);
    CHECK(is_isomorphism(sw.st.semigroup, sw.w.semigroup, sw.forward));
    CHECK(is_isomorphism(sw.w.semigroup, sw.st.semigroup, sw.backward));
  }
  RSemigroup const b = monoid_b();
  CHECK_THROWS_AS(st_to_w(b, Monoid::trivial(), Map{0}), PreconditionError);

  // the adjoined identity is the only unit of W(C2,V3)^1
  RSemigroup const w1  = named("W(C2,V3)^1");
  Elem const       one = *w1.identity();
  CHECK(corner_units(w1) == 1);
  CHECK_THROWS_AS(st_to_w(w1, Monoid::cyclic_group(2), Map{one, one}),
                  PreconditionError);
  ClassificationReport const c = classify(w1);
  CHECK(c.is_proper);
  CHECK_FALSE(c.is_almost_perfect);
}

TEST_CASE("verify_cover") {
  RSemigroup const  w   = named("W(C2,V3)");
  CoverReport const rep = verify_cover(w, w, identity_map(w.order()));
  CHECK(rep.ok);
  CHECK(rep.onto);
  CHECK(is_isomorphism(w, rep.target.semigroup, rep.omega));

  RSemigroup const b = monoid_b();
  CHECK_THROWS_AS(verify_cover(b, b, Map{1, 0}), InputError);
  RSemigroup const sub = named("W(C2,2-chain,sub)");
  CHECK_THROWS_AS(verify_cover(sub, sub, identity_map(3)), PreconditionError);
  // constant map to e is a homomorphism but identifies projections
  CHECK_THROWS_AS(verify_cover(b, b, Map{0, 0}), PreconditionError);

  for (STRProduct const& p : cover_catalog(b, 2)) {
    CoverReport const r = verify_cover(p.semigroup, b, p.first);
    CHECK(r.ok);
    CHECK(classify(p.semigroup).is_almost_perfect);
  }
  CHECK_FALSE(cover_catalog(chain2(), 2).empty());
}

TEST_CASE("R-representation") {
  RRepReport const r = r_rep(named("W(C2,V3)"));
  CHECK(r.ok);
  CHECK(r.munn_image_iso);
  CHECK(r.f.semigroup.order() == 5);
  CHECK(r_rep(monoid_b()).ok);
  CHECK_THROWS_AS(r_rep(named("W(C2,2-chain,sub)")), PreconditionError);
}

TEST_CASE("proper but not almost perfect: no almost perfect cover over S/sigma") {
  RSemigroup const sub = named("W(C2,2-chain,sub)");
  REQUIRE(sub.order() == 3);
  STRProduct const sc = special_cover(sub);
  CHECK(sc.kind == ActionKind::subhomomorphism);

  // An almost perfect cover over C2 with P-separating, onto beta would be
  // W(C2, Y) with Y = P_S the 2-chain under a homomorphic action.
  auto const acts = enumerate_actions(Monoid::cyclic_group(2), chain(2),
                                      ActionKind::homomorphism);
  REQUIRE(acts.size() == 1);
  CHECK(acts[0].alpha[1].is_identity());
  RSemigroup const n = w_product(acts[0]).semigroup;
  REQUIRE(n.order() == 4);
  std::size_t homs = 0;
  Map         beta(4);
  for (int code = 0; code < 81; ++code) {
    int c = code;
    for (Elem& x : beta) {
      x = static_cast<Elem>(c % 3);
      c /= 3;
    }
    if (!is_homomorphism(n, sub, beta)) {
      continue;
    }
    ++homs;
    std::set<Elem> const img(beta.begin(), beta.end());
    bool const separating = separates_projections(
        n, Partition(std::vector<std::size_t>(beta.begin(), beta.end())));
    CHECK_FALSE((img.size() == 3 && separating));
  }
  CHECK(homs > 0);
}

TEST_CASE("validate_action") {
  Monoid const      c2 = Monoid::cyclic_group(2);
  Semilattice const y  = chain(2);
  IdealIso const    id = IdealIso::identity(2, ElemSet::full(2));
  IdealIso const    lo = IdealIso::identity(2, ElemSet{0});
  CHECK_THROWS_AS(validate_action(c2, y, {lo, id}), InputError);
  CHECK_THROWS_AS(validate_action(c2, y, {id, lo}, ActionKind::homomorphism),
                  PreconditionError);
  CHECK(validate_action(c2, y, {id, lo}).kind == ActionKind::subhomomorphism);
  CHECK(validate_action(c2, y, {id, id}).kind == ActionKind::homomorphism);
  // x x = x with alpha_x the identity on the bottom: alpha_x alpha_x = alpha_x
  Monoid const t({{0, 1}, {1, 1}}, 0);
  CHECK(validate_action(t, y, {id, lo}).kind == ActionKind::homomorphism);
  Semilattice const v = v3();
  std::vector<std::pair<Elem, Elem>> const swap{{0, 0}, {1, 2}, {2, 1}};
  CHECK_THROWS_AS(validate_action(t, v, {IdealIso::identity(3, ElemSet::full(3)),
                                         IdealIso::from_pairs(v, swap)}),
                  InputError);
  CHECK_THROWS_AS(Monoid({{0, 0}, {0, 0}}, 1), InputError);
}
