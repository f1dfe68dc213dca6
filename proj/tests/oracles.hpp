#ifndef RSG_TESTS_ORACLES_HPP
#define RSG_TESTS_ORACLES_HPP

// Brute-force reference implementations. They only read the raw tables and
// share no code with the library algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "rsg/rsemigroup.hpp"

namespace oracle {

  using rsg::Elem;
  using rsg::RSemigroup;

  inline bool axioms(RSemigroup const& s) {
    std::size_t const n = s.order();
    auto m = [&](Elem a, Elem b) { return s.mul(a, b); };
    auto p = [&](Elem a) { return s.plus(a); };
    auto q = [&](Elem a) { return s.star(a); };
    for (Elem x = 0; x < n; ++x) {
      if (m(p(x), x) != x || m(x, q(x)) != x || q(p(x)) != p(x)
          || p(q(x)) != q(x)) {
        return false;
      }
      for (Elem y = 0; y < n; ++y) {
        if (m(p(x), p(y)) != m(p(y), p(x)) || p(m(p(x), y)) != m(p(x), p(y))
            || m(x, p(y)) != m(p(m(x, y)), x) || m(q(x), q(y)) != m(q(y), q(x))
            || q(m(x, q(y))) != m(q(x), q(y)) || m(q(x), y) != m(y, q(m(x, y)))) {
          return false;
        }
        for (Elem z = 0; z < n; ++z) {
          if (m(m(x, y), z) != m(x, m(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline std::vector<Elem> projections(RSemigroup const& s) {
    std::set<Elem> p;
    for (Elem a = 0; a < s.order(); ++a) {
      p.insert(s.plus(a));
    }
    return {p.begin(), p.end()};
  }

  // a <= b iff a = eb for some projection e.
  inline bool leq(RSemigroup const& s, Elem a, Elem b) {
    for (Elem e : oracle::projections(s)) {
      if (s.mul(e, b) == a) {
        return true;
      }
    }
    return false;
  }

  using Relation = std::vector<std::vector<bool>>;

  inline Relation sigma(RSemigroup const& s) {
    std::size_t const n = s.order();
    Relation          r(n, std::vector<bool>(n, false));
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem e : oracle::projections(s)) {
          if (s.mul(e, a) == s.mul(e, b)) {
            r[a][b] = true;
          }
        }
      }
    }
    return r;
  }

  // Every set partition of 0..n-1, as restricted growth strings.
  inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              cur(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                            std::size_t k) {
      if (i == n) {
        out.push_back(cur);
        return;
      }
      for (std::size_t b = 0; b <= k; ++b) {
        cur[i] = b;
        rec(i + 1, std::max(k, b + 1));
      }
    };
    if (n > 0) {
      rec(1, 1);
    }
    return out;
  }

  inline bool is_congruence(RSemigroup const& s, std::vector<std::size_t> const& c) {
    std::size_t const n = s.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (c[a] != c[b]) {
          continue;
        }
        if (c[s.plus(a)] != c[s.plus(b)] || c[s.star(a)] != c[s.star(b)]) {
          return false;
        }
        for (Elem x = 0; x < n; ++x) {
          if (c[s.mul(a, x)] != c[s.mul(b, x)] || c[s.mul(x, a)] != c[s.mul(x, b)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline std::vector<std::vector<std::size_t>> congruences(RSemigroup const& s) {
    std::vector<std::vector<std::size_t>> out;
    for (auto const& c : partitions(s.order())) {
      if (is_congruence(s, c)) {
        out.push_back(c);
      }
    }
    return out;
  }

  // All permissible sets as sorted element lists, by scanning every subset.
  inline std::set<std::vector<Elem>> permissible_sets(RSemigroup const& s) {
    std::size_t const           n = s.order();
    std::set<std::vector<Elem>> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<Elem> a;
      for (Elem x = 0; x < n; ++x) {
        if ((bits >> x) & 1U) {
          a.push_back(x);
        }
      }
      bool ok = true;
      for (Elem x : a) {
        for (Elem y = 0; y < n && ok; ++y) {
          if (oracle::leq(s, y, x) && !((bits >> y) & 1U)) {
            ok = false;
          }
        }
        for (Elem y : a) {
          ok = ok && s.mul(s.plus(x), y) == s.mul(s.plus(y), x)
               && s.mul(x, s.star(y)) == s.mul(y, s.star(x));
        }
      }
      if (ok) {
        out.insert(a);
      }
    }
    return out;
  }

  // Isomorphism by trying every permutation (small orders only).
  inline bool isomorphic(RSemigroup const& a, RSemigroup const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    std::vector<Elem> p(a.order());
    std::iota(p.begin(), p.end(), Elem{0});
    do {
      bool ok = true;
      for (Elem x = 0; x < a.order() && ok; ++x) {
        ok = p[a.plus(x)] == b.plus(p[x]) && p[a.star(x)] == b.star(p[x]);
        for (Elem y = 0; y < a.order() && ok; ++y) {
          ok = p[a.mul(x, y)] == b.mul(p[x], p[y]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // Isomorphisms between nonempty down-closed subsets of the meet table,
  // found by trying all partial injections. Each is a sorted list of pairs.
  using PartialMap = std::vector<std::pair<Elem, Elem>>;
  inline std::set<PartialMap> ideal_isos(std::vector<std::vector<Elem>> const& meet,
                                         bool principal_only) {
    std::size_t const n = meet.size();
    auto le = [&](Elem a, Elem b) { return meet[a][b] == a; };
    auto ideal = [&](std::uint64_t bits) {
      if (bits == 0) {
        return false;
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (((bits >> x) & 1U) && le(y, x) && !((bits >> y) & 1U)) {
            return false;
          }
        }
      }
      return true;
    };
    auto principal = [&](std::uint64_t bits) {
      for (Elem x = 0; x < n; ++x) {
        std::uint64_t d = 0;
        for (Elem y = 0; y < n; ++y) {
          if (le(y, x)) {
            d |= std::uint64_t{1} << y;
          }
        }
        if (d == bits) {
          return true;
        }
      }
      return false;
    };
    std::set<PartialMap> out;
    // f as a vector over 0..n-1 with value n meaning undefined.
    std::vector<Elem> f(n, n);
    std::function<void(Elem)> rec = [&](Elem x) {
      if (x == n) {
        std::uint64_t dom = 0, ran = 0;
        for (Elem a = 0; a < n; ++a) {
          if (f[a] != n) {
            dom |= std::uint64_t{1} << a;
            ran |= std::uint64_t{1} << f[a];
          }
        }
        if (!ideal(dom) || !ideal(ran)) {
          return;
        }
        if (principal_only && (!principal(dom) || !principal(ran))) {
          return;
        }
        PartialMap m;
        for (Elem a = 0; a < n; ++a) {
          if (f[a] == n) {
            continue;
          }
          for (Elem b = 0; b < n; ++b) {
            if (f[b] != n && f[meet[a][b]] != meet[f[a]][f[b]]) {
              return;
            }
          }
          m.emplace_back(a, f[a]);
        }
        out.insert(m);
        return;
      }
      for (Elem v = 0; v <= n; ++v) {
        if (v < n && std::find(f.begin(), f.end(), v) != f.end()) {
          continue;
        }
        f[x] = v;
        rec(x + 1);
        f[x] = n;
      }
    };
    rec(0);
    return out;
  }

}  // namespace oracle

#endif  // RSG_TESTS_ORACLES_HPP
