#include <algorithm>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rsg/classification.hpp"
#include "rsg/congruence.hpp"
#include "rsg/corpus.hpp"
#include "rsg/errors.hpp"
#include "rsg/factorize.hpp"
#include "rsg/isomorphism.hpp"

using namespace rsg;

namespace {

  Elem by_label(RSemigroup const& s, std::string const& label) {
    auto const& l = s.labels();
    auto const  it = std::ranges::find(l, label);
    REQUIRE(it != l.end());
    return static_cast<Elem>(it - l.begin());
  }

  std::vector<RSemigroup> small_corpus() {
    std::vector<RSemigroup> out = enumerate_restriction_semigroups(3);
    for (auto& e : named_examples()) {
      out.push_back(e.semigroup);
    }
    return out;
  }

}  // namespace

TEST_CASE("check_axioms agrees with the identities on every 2-element table") {
  std::size_t passed = 0;
  for (int code = 0; code < 256; ++code) {
    int        c = code;
    Table      mul(2, std::vector<Elem>(2));
    std::vector<Elem> plus(2), star(2);
    for (auto& row : mul) {
      for (auto& v : row) {
        v = c & 1;
        c >>= 1;
      }
    }
    for (auto& v : plus) {
      v = c & 1;
      c >>= 1;
    }
    for (auto& v : star) {
      v = c & 1;
      c >>= 1;
    }
    RSemigroup const s(mul, plus, star);
    bool const       ok = static_cast<bool>(check_axioms(s));
    REQUIRE(ok == oracle::axioms(s));
    passed += ok;
  }
  // three classes, each with two labellings and no automorphism
  CHECK(passed == 6);
}

TEST_CASE("check_axioms reports the violated identity") {
  RSemigroup const
      s({{0, 0}, {0, 1}}, {1, 0}, {0, 1});
  AxiomReport const r = check_axioms(s);
  CHECK_FALSE(r.pass);
  CHECK(r.identity == "x+x = x");
  REQUIRE(r.witness.size() == 1);
  CHECK(s.mul(s.plus(r.witness[0]), r.witness[0]) != r.witness[0]);
  CHECK(check_axioms(chain2()));
  CHECK(check_axioms(named("W(C2,V3)")));
}

TEST_CASE("projections") {
  CHECK(projections(as_rsemigroup(v3())).size() == 3);
  CHECK(projections(c2_reduced()).size() == 1);
  RSemigroup const w = named("W(C2,V3)");
  std::vector<Elem> expect{by_label(w, "(1,0)"), by_label(w, "(1,1)"),
                           by_label(w, "(1,2)")};
  std::ranges::sort(expect);
  CHECK(projections(w) == expect);
  for (auto const& s : small_corpus()) {
    CHECK(projections(s) == oracle::projections(s));
  }
}

TEST_CASE("natural order") {
  RSemigroup const b = monoid_b();
  CHECK(natural_leq(b, by_label(b, "e"), by_label(b, "1")));
  CHECK_FALSE(natural_leq(b, by_label(b, "1"), by_label(b, "e")));
  RSemigroup const w = named("W(C2,V3)");
  CHECK(natural_leq(w, by_label(w, "(g,0)"), by_label(w, "(g,1)")));
  CHECK_FALSE(natural_leq(w, by_label(w, "(g,0)"), by_label(w, "(1,1)")));
  for (auto const& s : small_corpus()) {
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem c = 0; c < s.order(); ++c) {
        REQUIRE(natural_leq(s, a, c) == oracle::leq(s, a, c));
      }
    }
  }
}

TEST_CASE("Green relations") {
  RSemigroup const y = as_rsemigroup(v3());
  CHECK(green(y, Green::R).is_identity());
  CHECK(green(y, Green::L).is_identity());
  CHECK(green(y, Green::H).is_identity());

  // R-classes of I_2 are the sets of partial bijections sharing a domain.
  RSemigroup const i = i2();
  REQUIRE(i.order() == 7);
  std::map<std::string, std::size_t> by_domain;
  for (std::string const& l : i.labels()) {
    std::string dom;
    for (std::size_t k = 0; k + 3 < l.size(); ++k) {
      if (l.substr(k + 1, 2) == "->") {
        dom += l[k];
      }
    }
    ++by_domain[dom];
  }
  std::vector<std::size_t> sizes;
  for (auto const& [d, k] : by_domain) {
    sizes.push_back(k);
  }
  std::ranges::sort(sizes);
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(green(i, Green::R).block_sizes() == sizes);

  WProduct const w = w_product(swap_action());
  Partition const r = green(w.semigroup, Green::R);
  for (Elem a = 0; a < w.catalog.size(); ++a) {
    for (Elem b = 0; b < w.catalog.size(); ++b) {
      Elem const e = w.action.alpha[w.catalog[a].t].inverse()(w.catalog[a].f);
      Elem const f = w.action.alpha[w.catalog[b].t].inverse()(w.catalog[b].f);
      CHECK(r.same(a, b) == (e == f));
    }
  }
}

TEST_CASE("sigma matches its defining formula") {
  for (auto const& s : small_corpus()) {
    Congruence const        sg = sigma(s);
    oracle::Relation const  o  = oracle::sigma(s);
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem b = 0; b < s.order(); ++b) {
        REQUIRE(sg.same(a, b) == o[a][b]);
      }
    }
  }
  CHECK(sigma(c2_reduced()).partition().is_identity());
  CHECK(sigma(as_rsemigroup(v3())).num_classes() == 1);
  CHECK(sigma(named("W(C2,V3)")).num_classes() == 2);
}

TEST_CASE("mu is the greatest P-separating congruence") {
  for (auto const& s : small_corpus()) {
    if (s.order() > 5) {
      continue;
    }
    auto const              all = oracle::congruences(s);
    Partition const         m   = mu(s).partition();
    std::vector<Partition>  lib = congruences(s);
    REQUIRE(lib.size() == all.size());
    bool found = false;
    for (auto const& c : all) {
      Partition const p(c);
      CHECK(std::ranges::find(lib, p) != lib.end());
      if (separates_projections(s, p)) {
        CHECK(p.subset_of(m));
        found = found || p == m;
      }
    }
    CHECK(found);
  }
  CHECK(mu(as_rsemigroup(v3())).partition().is_identity());
  CHECK(mu(c2_reduced()).num_classes() == 1);
  RSemigroup const w  = named("W(C2,V3)");
  Partition const  mw = mu(w).partition();
  CHECK(mw.num_blocks() == 5);
  CHECK(mw.same(by_label(w, "(1,0)"), by_label(w, "(g,0)")));
}

TEST_CASE("quotients") {
  RSemigroup const w = named("W(C2,V3)");
  Quotient const   q = quotient(w, sigma(w).partition());
  CHECK(oracle::isomorphic(q.semigroup, c2_reduced()));
  CHECK(is_homomorphism(w, q.semigroup, q.map));
  CHECK(quotient(w, Partition::identity(w.order())).semigroup.order() == 6);
  CHECK(quotient(as_rsemigroup(v3()), Partition::universal(3)).semigroup.order()
        == 1);
  CHECK_THROWS_AS(quotient(w, Partition({0, 1, 1, 0, 0, 0})), InputError);
}

TEST_CASE("classification of named examples") {
  ClassificationReport const b = classify(monoid_b());
  CHECK(b.is_proper);
  CHECK(b.is_perfect);
  CHECK(b.is_almost_perfect);
  ClassificationReport const i = classify(i2());
  CHECK_FALSE(i.is_proper);
  CHECK(sigma(i2()).num_classes() == 1);
  ClassificationReport const sub = classify(named("W(C2,2-chain,sub)"));
  CHECK(sub.is_monoid);
  CHECK(sub.is_proper);
  CHECK(sub.is_F_restriction);
  CHECK_FALSE(sub.is_almost_perfect);
  CHECK(classify(named("W({1,x},V3)^1")).is_almost_perfect);
  CHECK_FALSE(classify(named("W({1,x},V3)^1")).is_perfect);
  ClassificationReport const bad = classify(RSemigroup({{0, 0}, {0, 1}}, {1, 0}, {0, 1}));
  CHECK_FALSE(bad.is_restriction);
  CHECK_FALSE(bad.is_proper);
}

TEST_CASE("proper agrees with the definition") {
  for (auto const& s : small_corpus()) {
    oracle::Relation const sg = oracle::sigma(s);
    bool                   proper = true;
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem b = 0; b < s.order(); ++b) {
        if (a != b && sg[a][b]
            && (s.plus(a) == s.plus(b) || s.star(a) == s.star(b))) {
          proper = false;
        }
      }
    }
    CHECK(classify(s).is_proper == proper);
  }
}

TEST_CASE("T-properness") {
  RSemigroup const b = monoid_b();
  Elem const       one = by_label(b, "1");
  CHECK(is_T_proper(b, {one}));
  CHECK_FALSE(is_T_proper(b, {0, 1}));
  RSemigroup const y = as_rsemigroup(chain(3));
  CHECK(is_T_proper(y, {2}));
  CHECK_THROWS_AS(is_T_proper(as_rsemigroup(v3()), {0}), PreconditionError);
  CHECK_THROWS_AS(is_T_proper(b, {by_label(b, "e")}), InputError);
  CHECK(find_T_proper(b).has_value());
  CHECK_FALSE(find_T_proper(named("W(C2,2-chain,sub)")).has_value());
}

TEST_CASE("isomorphism search") {
  RSemigroup const w = named("W(C2,V3)");
  auto const       self = find_isomorphism(w, w);
  REQUIRE(self);
  CHECK(is_isomorphism(w, w, *self));
  CHECK_FALSE(isomorphic(chain2(), c2_reduced()));
  CHECK(isomorphic(w, semidirect_product(swap_action())));
  auto const corpus = small_corpus();
  for (auto const& a : corpus) {
    for (auto const& b : corpus) {
      if (a.order() != b.order() || a.order() > 7) {
        continue;
      }
      bool const lib = isomorphic(a, b);
      CHECK(lib == isomorphic(b, a));
      CHECK(lib == oracle::isomorphic(a, b));
    }
  }
}

TEST_CASE("basic lemma and order ideals on the corpus") {
  for (auto const& s : small_corpus()) {
    Congruence const sg = sigma(s);
    for (Elem x = 0; x < s.order(); ++x) {
      for (Elem y = 0; y < s.order(); ++y) {
        Elem const xy = s.mul(x, y);
        CHECK(oracle::leq(s, s.plus(xy), s.plus(x)));
        CHECK(s.plus(xy) == s.plus(s.mul(x, s.plus(y))));
        CHECK(oracle::leq(s, s.star(xy), s.star(y)));
        CHECK(s.star(xy) == s.star(s.mul(s.star(x), y)));
        if (oracle::leq(s, y, x)) {
          CHECK(sg.same(x, y));
        }
      }
    }
    if (classify(s).is_proper) {
      CHECK(sg.partition().meet(mu(s).partition()).is_identity());
    }
  }
}
