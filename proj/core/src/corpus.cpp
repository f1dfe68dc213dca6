#include "rsg/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>

#include "rsg/errors.hpp"

namespace rsg {

  namespace {

    using Flat = std::vector<Elem>;

    Table unflatten(Flat const& f, std::size_t n) {
      Table t(n, std::vector<Elem>(n));
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          t[a][b] = f[a * n + b];
        }
      }
      return t;
    }

    // Image of a binary table under the relabelling x -> p[x].
    Flat relabel(Flat const& mul, std::vector<Elem> const& p) {
      std::size_t const n = p.size();
      Flat              out(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          out[p[a] * n + p[b]] = p[mul[a * n + b]];
        }
      }
      return out;
    }

    // Least relabelling over permutations with p[fixed] = 0 (or all
    // permutations when fixed is npos). extra carries unary maps.
    Flat canonical(Flat const& mul, std::vector<Flat> const& extra,
                   std::size_t n, Elem fixed) {
      std::vector<Elem> q(n);
      std::iota(q.begin(), q.end(), Elem{0});
      Flat best;
      do {
        if (fixed != npos && q[0] != fixed) {
          continue;
        }
        // q lists the old elements in new order; p is its inverse.
        std::vector<Elem> p(n);
        for (Elem i = 0; i < n; ++i) {
          p[q[i]] = i;
        }
        Flat cand = relabel(mul, p);
        for (Flat const& u : extra) {
          Flat v(n);
          for (Elem a = 0; a < n; ++a) {
            v[p[a]] = p[u[a]];
          }
          cand.insert(cand.end(), v.begin(), v.end());
        }
        if (best.empty() || cand < best) {
          best = std::move(cand);
        }
      } while (std::next_permutation(q.begin(), q.end()));
      return best;
    }

    bool associative(Flat const& m, std::size_t n) {
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          Elem const ab = m[a * n + b];
          for (Elem c = 0; c < n; ++c) {
            if (m[ab * n + c] != m[a * n + m[b * n + c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    // Advances a mixed counter over the free cells; false after the last.
    bool advance(Flat& cells, std::vector<std::size_t> const& free,
                 std::size_t base) {
      for (std::size_t i : free) {
        if (++cells[i] < base) {
          return true;
        }
        cells[i] = 0;
      }
      return false;
    }

    std::vector<std::string> index_labels(std::size_t n) {
      std::vector<std::string> out;
      for (Elem a = 0; a < n; ++a) {
        out.push_back(std::to_string(a));
      }
      return out;
    }

  }  // namespace

  std::vector<Semilattice> semilattices_of_order(std::size_t n) {
    if (n > 6) {
      throw ResourceError("semilattices_of_order: order above 6");
    }
    if (n == 0) {
      return {};
    }
    // Naturally labelled posets with bottom 0: strict down-set of j is a
    // down-closed subset of {0..j-1} containing 0.
    std::set<Flat>       seen;
    std::vector<ElemSet> down(n);
    down[0] = ElemSet{0};
    auto const emit = [&] {
      Flat meet(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          ElemSet const common = down[a] & down[b];
          Elem          top    = npos;
          common.for_each([&](Elem m) {
            if (common.subset_of(down[m])) {
              top = m;
            }
          });
          if (top == npos) {
            return;
          }
          meet[a * n + b] = top;
        }
      }
      seen.insert(canonical(meet, {}, n, 0));
    };
    auto const rec = [&](auto const& self, Elem j) -> void {
      if (j == n) {
        emit();
        return;
      }
      std::uint64_t const span = std::uint64_t{1} << j;
      for (std::uint64_t bits = 1; bits < span; bits += 2) {
        ElemSet const lower(bits);
        bool          closed = true;
        lower.for_each([&](Elem x) {
          closed = closed && down[x].subset_of(lower);
        });
        if (!closed) {
          continue;
        }
        down[j] = lower;
        down[j].insert(j);
        self(self, j + 1);
      }
    };
    rec(rec, 1);
    std::vector<Semilattice> out;
    for (Flat const& f : seen) {
      out.emplace_back(unflatten(f, n));
    }
    return out;
  }

  std::vector<Semilattice> enumerate_semilattices(std::size_t max_n) {
    if (max_n > 6) {
      throw ResourceError("enumerate_semilattices: order above 6");
    }
    std::vector<Semilattice> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto part = semilattices_of_order(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<Monoid> monoids_of_order(std::size_t n) {
    if (n > 4) {
      throw ResourceError("monoids_of_order: order above 4");
    }
    if (n == 0) {
      return {};
    }
    Flat                     m(n * n, 0);
    std::vector<std::size_t> free;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (a == 0 || b == 0) {
          m[a * n + b] = a == 0 ? b : a;
        } else {
          free.push_back(a * n + b);
        }
      }
    }
    std::set<Flat> seen;
    do {
      if (associative(m, n)) {
        seen.insert(canonical(m, {}, n, 0));
      }
    } while (advance(m, free, n));
    std::vector<std::string> labels{"1"};
    for (Elem a = 1; a < n; ++a) {
      labels.push_back(std::string(1, static_cast<char>('a' + a - 1)));
    }
    std::vector<Monoid> out;
    for (Flat const& f : seen) {
      out.emplace_back(unflatten(f, n), 0, labels);
    }
    return out;
  }

  std::vector<Monoid> enumerate_monoids(std::size_t max_n) {
    if (max_n > 4) {
      throw ResourceError("enumerate_monoids: order above 4");
    }
    std::vector<Monoid> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto part = monoids_of_order(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<RSemigroup> rsemigroups_of_order(std::size_t n) {
    if (n > 3) {
      throw ResourceError("rsemigroups_of_order: order above 3");
    }
    if (n == 0) {
      return {};
    }
    Flat                     m(n * n, 0);
    std::vector<std::size_t> cells(n * n);
    std::iota(cells.begin(), cells.end(), std::size_t{0});
    std::vector<std::size_t> unary(n);
    std::iota(unary.begin(), unary.end(), std::size_t{0});
    std::set<Flat> seen;
    do {
      if (!associative(m, n)) {
        continue;
      }
      Table const t = unflatten(m, n);
      Flat        plus(n, 0);
      do {
        Flat star(n, 0);
        do {
          RSemigroup const s(t, plus, star);
          if (check_axioms(s)) {
            seen.insert(canonical(m, {plus, star}, n, npos));
          }
        } while (advance(star, unary, n));
      } while (advance(plus, unary, n));
    } while (advance(m, cells, n));
    std::vector<RSemigroup> out;
    for (Flat const& f : seen) {
      Flat const mul(f.begin(), f.begin() + static_cast<long>(n * n));
      Flat const plus(f.begin() + static_cast<long>(n * n),
                      f.begin() + static_cast<long>(n * n + n));
      Flat const star(f.begin() + static_cast<long>(n * n + n), f.end());
      out.emplace_back(unflatten(mul, n), plus, star, index_labels(n));
    }
    return out;
  }

  std::vector<RSemigroup> enumerate_restriction_semigroups(std::size_t max_n) {
    if (max_n > 3) {
      throw ResourceError("enumerate_restriction_semigroups: order above 3");
    }
    std::vector<RSemigroup> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto part = rsemigroups_of_order(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<MonoidAction> enumerate_actions(Monoid const&      t,
                                              Semilattice const& y,
                                              ActionKind         kind) {
    if (t.order() > 4 || y.order() > 4) {
      throw ResourceError("enumerate_actions: |T| and |Y| are limited to 4");
    }
    std::vector<IdealIso> const ti = ideal_isos(y, false);
    IdealIso const id = IdealIso::identity(y.order(), ElemSet::full(y.order()));
    std::size_t const k  = ti.size();
    Elem const        one = t.identity();
    std::vector<MonoidAction> out;

    if (kind == ActionKind::homomorphism) {
      // Greedy generating set; images of the rest follow by right
      // multiplication, with a clash rejecting the assignment.
      std::vector<Elem> gens;
      std::vector<bool> reached(t.order(), false);
      reached[one] = true;
      auto const close = [&] {
        bool grew = true;
        while (grew) {
          grew = false;
          for (Elem x = 0; x < t.order(); ++x) {
            for (Elem g : gens) {
              if (reached[x] && !reached[t.mul(x, g)]) {
                reached[t.mul(x, g)] = grew = true;
              }
            }
          }
        }
      };
      for (Elem u = 0; u < t.order(); ++u) {
        if (!reached[u]) {
          gens.push_back(u);
          reached[u] = true;
          close();
        }
      }
      std::vector<std::size_t> choice(gens.size(), 0);
      for (;;) {
        std::vector<std::optional<IdealIso>> img(t.order());
        img[one]  = id;
        bool ok   = true;
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
          if (img[gens[i]] && !(*img[gens[i]] == ti[choice[i]])) {
            ok = false;
          }
          img[gens[i]] = ti[choice[i]];
        }
        bool grew = ok;
        while (grew && ok) {
          grew = false;
          for (Elem x = 0; x < t.order() && ok; ++x) {
            for (std::size_t i = 0; i < gens.size() && ok && img[x]; ++i) {
              auto const p = iso_compose(*img[x], ti[choice[i]]);
              Elem const xg = t.mul(x, gens[i]);
              if (!p) {
                ok = false;
              } else if (!img[xg]) {
                img[xg] = *p;
                grew    = true;
              } else if (!(*img[xg] == *p)) {
                ok = false;
              }
            }
          }
        }
        if (ok) {
          std::vector<IdealIso> alpha;
          for (auto const& f : img) {
            alpha.push_back(*f);
          }
          try {
            out.push_back(validate_action(t, y, std::move(alpha),
                                          ActionKind::homomorphism));
          } catch (Error const&) {
          }
        }
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == k) {
          choice[i++] = 0;
        }
        if (i == choice.size()) {
          break;
        }
      }
      return out;
    }

    std::size_t total = 1;
    for (std::size_t i = 1; i < t.order(); ++i) {
      total *= k;
      if (total > (std::size_t{1} << 22)) {
        throw ResourceError("enumerate_actions: too many candidate maps");
      }
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<IdealIso> alpha(t.order(), id);
      std::size_t           c = code;
      for (Elem u = 0; u < t.order(); ++u) {
        if (u != one) {
          alpha[u] = ti[c % k];
          c /= k;
        }
      }
      try {
        MonoidAction act = validate_action(t, y, std::move(alpha));
        if (act.kind == ActionKind::subhomomorphism) {
          out.push_back(std::move(act));
        }
      } catch (InputError const&) {
      }
    }
    return out;
  }

  Semilattice chain(std::size_t n) {
    Table meet(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        meet[a][b] = std::min(a, b);
      }
    }
    return Semilattice(meet);
  }

  Semilattice v3() { return Semilattice({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}); }

  RSemigroup chain2() {
    RSemigroup const s = as_rsemigroup(chain(2));
    return RSemigroup(s.table(), s.plus_map(), s.star_map(), {"0", "1"});
  }

  RSemigroup monoid_b() {
    RSemigroup const s = as_rsemigroup(chain(2));
    return RSemigroup(s.table(), s.plus_map(), s.star_map(), {"e", "1"});
  }

  RSemigroup c2_reduced() { return Monoid::cyclic_group(2).as_reduced(); }

  RSemigroup i2() {
    // A partial bijection of {0, 1} as (0f, 1f), 2 meaning undefined.
    std::vector<std::array<Elem, 2>> maps;
    for (Elem x = 0; x < 3; ++x) {
      for (Elem y = 0; y < 3; ++y) {
        if (x == 2 || y == 2 || x != y) {
          maps.push_back({x, y});
        }
      }
    }
    std::ranges::sort(maps, [](auto const& f, auto const& g) {
      auto const rank = [](auto const& h) {
        return std::pair((h[0] != 2) + (h[1] != 2), h);
      };
      return rank(f) < rank(g);
    });
    std::size_t const        n = maps.size();
    Table                    mul(n, std::vector<Elem>(n));
    std::vector<Elem>        plus(n), star(n);
    std::vector<std::string> labels(n);
    auto const               find = [&](std::array<Elem, 2> const& h) {
      return static_cast<Elem>(std::ranges::find(maps, h) - maps.begin());
    };
    for (Elem i = 0; i < n; ++i) {
      auto const& f = maps[i];
      std::array<Elem, 2> p{2, 2}, q{2, 2};
      std::string         label;
      for (Elem x = 0; x < 2; ++x) {
        if (f[x] != 2) {
          p[x]    = x;
          q[f[x]] = f[x];
          label += (label.empty() ? "" : ", ") + std::to_string(x) + "->"
                   + std::to_string(f[x]);
        }
      }
      plus[i]   = find(p);
      star[i]   = find(q);
      labels[i] = "[" + label + "]";
      for (Elem j = 0; j < n; ++j) {
        auto const&         g = maps[j];
        std::array<Elem, 2> h{};
        for (Elem x = 0; x < 2; ++x) {
          h[x] = f[x] == 2 ? 2 : g[f[x]];
        }
        mul[i][j] = find(h);
      }
    }
    return RSemigroup(mul, plus, star, labels);
  }

  MonoidAction swap_action() {
    Semilattice const                        y = v3();
    std::vector<std::pair<Elem, Elem>> const swap{{0, 0}, {1, 2}, {2, 1}};
    return validate_action(Monoid::cyclic_group(2), y,
                           {IdealIso::identity(3, ElemSet::full(3)),
                            IdealIso::from_pairs(y, swap)},
                           ActionKind::homomorphism);
  }

  MonoidAction sub_action() {
    return validate_action(Monoid::cyclic_group(2), chain(2),
                           {IdealIso::identity(2, ElemSet::full(2)),
                            IdealIso::identity(2, ElemSet{0})},
                           ActionKind::subhomomorphism);
  }

  MonoidAction idempotent_action() {
    Monoid const   t({{0, 1}, {1, 1}}, 0, {"1", "x"});
    IdealIso const id = IdealIso::identity(3, ElemSet::full(3));
    return validate_action(t, v3(), {id, id}, ActionKind::homomorphism);
  }

  std::vector<NamedExample> named_examples() {
    RSemigroup y3 = as_rsemigroup(v3());
    y3            = RSemigroup(y3.table(), y3.plus_map(), y3.star_map(),
                               {"0", "a", "b"});
    RSemigroup const w_swap = w_product(swap_action()).semigroup;
    return {
        {"2-chain", chain2()},
        {"V3", y3},
        {"B", monoid_b()},
        {"C2", c2_reduced()},
        {"I2", i2()},
        {"W(C2,V3)", w_swap},
        {"W(C2,2-chain,sub)", w_product(sub_action()).semigroup},
        {"S_T(B)", t_proper_cover(monoid_b()).semigroup},
        {"W(C2,V3)^1", adjoin_identity(w_swap).semigroup},
        {"W({1,x},V3)^1",
         adjoin_identity(w_product(idempotent_action()).semigroup).semigroup},
    };
  }

  RSemigroup named(std::string const& name) {
    for (NamedExample& e : named_examples()) {
      if (e.name == name) {
        return std::move(e.semigroup);
      }
    }
    throw InputError("unknown example: " + name);
  }

}  // namespace rsg
