#include <algorithm>
#include <numeric>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "rsg/classification.hpp"
#include "rsg/corpus.hpp"
#include "rsg/errors.hpp"

using namespace rsg;

namespace {

  using Flat = std::vector<Elem>;

  // Least relabelling of a flat n x n table plus unary maps, over
  // permutations fixing the first `fixed` elements.
  Flat canonical_form(Flat const& mul, std::vector<Flat> const& unary,
                      std::size_t n, std::size_t fixed) {
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), Elem{0});
    Flat best;
    do {
      Flat img(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          img[p[a] * n + p[b]] = p[mul[a * n + b]];
        }
      }
      for (Flat const& u : unary) {
        Flat v(n);
        for (Elem a = 0; a < n; ++a) {
          v[p[a]] = p[u[a]];
        }
        img.insert(img.end(), v.begin(), v.end());
      }
      if (best.empty() || img < best) {
        best = img;
      }
    } while (std::next_permutation(p.begin() + static_cast<long>(fixed), p.end()));
    return best;
  }

  bool associative(Flat const& m, std::size_t n) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (m[m[a * n + b] * n + c] != m[a * n + m[b * n + c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Calls f on every n x n table with entries < n.
  template <typename F>
  void all_tables(std::size_t n, F&& f) {
    Flat m(n * n, 0);
    while (true) {
      f(m);
      std::size_t i = 0;
      while (i < m.size() && ++m[i] == n) {
        m[i++] = 0;
      }
      if (i == m.size()) {
        return;
      }
    }
  }

  Table unflat(Flat const& m, std::size_t n) {
    Table t(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t[a][b] = m[a * n + b];
      }
    }
    return t;
  }

}  // namespace

TEST_CASE("semilattice counts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<Flat> classes;
    all_tables(n, [&](Flat const& m) {
      for (Elem a = 0; a < n; ++a) {
        if (m[a * n + a] != a) {
          return;
        }
        for (Elem b = 0; b < n; ++b) {
          if (m[a * n + b] != m[b * n + a]) {
            return;
          }
        }
      }
      if (associative(m, n)) {
        classes.insert(canonical_form(m, {}, n, 0));
      }
    });
    CHECK(semilattices_of_order(n).size() == classes.size());
  }
  // lattices with one more element: 1, 1, 2, 5, 15, 53
  CHECK(semilattices_of_order(5).size() == 15);
  CHECK(semilattices_of_order(6).size() == 53);
  CHECK(enumerate_semilattices(4).size() == 9);
  CHECK_THROWS_AS(semilattices_of_order(7), ResourceError);
}

TEST_CASE("monoid counts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<Flat> classes;
    all_tables(n, [&](Flat const& m) {
      for (Elem a = 0; a < n; ++a) {
        if (m[a] != a || m[a * n] != a) {
          return;
        }
      }
      if (associative(m, n)) {
        classes.insert(canonical_form(m, {}, n, 1));
      }
    });
    std::vector<Monoid> const lib = monoids_of_order(n);
    CHECK(lib.size() == classes.size());
    std::set<Flat> lib_classes;
    for (Monoid const& t : lib) {
      CHECK(t.identity() == 0);
      Flat m;
      for (auto const& row : t.table()) {
        m.insert(m.end(), row.begin(), row.end());
      }
      lib_classes.insert(canonical_form(m, {}, n, 1));
    }
    CHECK(lib_classes == classes);
  }
  CHECK(monoids_of_order(3).size() == 7);
  CHECK(monoids_of_order(4).size() == 35);
  CHECK_THROWS_AS(monoids_of_order(5), ResourceError);
}

TEST_CASE("restriction semigroup counts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<Flat> classes;
    all_tables(n, [&](Flat const& m) {
      if (!associative(m, n)) {
        return;
      }
      Flat plus(n, 0);
      while (true) {
        Flat star(n, 0);
        while (true) {
          RSemigroup const s(unflat(m, n), plus, star);
          if (oracle::axioms(s)) {
            classes.insert(canonical_form(m, {plus, star}, n, 0));
          }
          std::size_t i = 0;
          while (i < n && ++star[i] == n) {
            star[i++] = 0;
          }
          if (i == n) {
            break;
          }
        }
        std::size_t i = 0;
        while (i < n && ++plus[i] == n) {
          plus[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
    });
    std::vector<RSemigroup> const lib = rsemigroups_of_order(n);
    CHECK(lib.size() == classes.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
      CHECK(oracle::axioms(lib[i]));
      for (std::size_t j = i + 1; j < lib.size(); ++j) {
        CHECK_FALSE(oracle::isomorphic(lib[i], lib[j]));
      }
    }
  }
  CHECK(enumerate_restriction_semigroups(3).size() == 1 + 3 + 13);
  CHECK_THROWS_AS(rsemigroups_of_order(4), ResourceError);
}

TEST_CASE("actions against brute force") {
  for (Monoid const& t : enumerate_monoids(3)) {
    for (Semilattice const& y : enumerate_semilattices(3)) {
      std::vector<IdealIso> const isos = ideal_isos(y, false);
      std::size_t const           n    = y.order();
      std::set<std::vector<IdealIso>> hom, sub;
      std::vector<std::size_t>        pick(t.order(), 0);
      while (true) {
        std::vector<IdealIso> alpha;
        for (std::size_t i : pick) {
          alpha.push_back(isos[i]);
        }
        bool ok = alpha[t.identity()].dom() == ElemSet::full(n)
                  && alpha[t.identity()].is_identity();
        bool equal = true;
        for (Elem u = 0; u < t.order() && ok; ++u) {
          for (Elem v = 0; v < t.order() && ok; ++v) {
            IdealIso const& w = alpha[t.mul(u, v)];
            for (Elem x = 0; x < n; ++x) {
              bool const through = alpha[u].defined(x)
                                   && alpha[v].defined(alpha[u](x));
              if (through && !(w.defined(x) && w(x) == alpha[v](alpha[u](x)))) {
                ok = false;
              }
              if (w.defined(x) && !through) {
                equal = false;
              }
            }
          }
        }
        if (ok) {
          (equal ? hom : sub).insert(alpha);
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == isos.size()) {
          pick[i++] = 0;
        }
        if (i == pick.size()) {
          break;
        }
      }
      auto collect = [&](ActionKind k) {
        std::set<std::vector<IdealIso>> out;
        for (MonoidAction const& a : enumerate_actions(t, y, k)) {
          CHECK(a.kind == k);
          out.insert(a.alpha);
        }
        return out;
      };
      CHECK(collect(ActionKind::homomorphism) == hom);
      CHECK(collect(ActionKind::subhomomorphism) == sub);
    }
  }
}

TEST_CASE("named examples") {
  std::vector<NamedExample> const ex = named_examples();
  REQUIRE(ex.size() == 10);
  CHECK(ex.front().name == "2-chain");
  CHECK(ex.back().name == "W({1,x},V3)^1");
  for (auto const& e : ex) {
    INFO(e.name);
    CHECK(oracle::axioms(e.semigroup));
  }
  CHECK(named("I2").order() == 7);
  CHECK(named("S_T(B)").order() == 3);
  CHECK(named("W(C2,V3)^1").order() == 7);
  CHECK_THROWS_AS(named("nope"), InputError);
  CHECK(oracle::isomorphic(monoid_b(), chain2()));
  CHECK(classify(c2_reduced()).is_reduced);
}
