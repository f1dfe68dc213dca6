#include "rsg/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rsg/errors.hpp"
#include "rsg/munn.hpp"

namespace rsg {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
      }
      Elem find(Elem a) {
        while (parent_[a] != a) {
          parent_[a] = parent_[parent_[a]];
          a          = parent_[a];
        }
        return a;
      }
      bool unite(Elem a, Elem b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent_[b] = a;
        return true;
      }
      Partition partition() {
        std::vector<std::size_t> root(parent_.size());
        for (Elem a = 0; a < parent_.size(); ++a) {
          root[a] = find(a);
        }
        return Partition(root);
      }

     private:
      std::vector<Elem> parent_;
    };

    // Merges blocks of uf until the relation is compatible with all
    // operations of s.
    void close_under_operations(RSemigroup const& s, UnionFind& uf) {
      std::size_t const n       = s.order();
      bool              changed = true;
      while (changed) {
        changed = false;
        for (Elem a = 0; a < n; ++a) {
          Elem const ra = uf.find(a);
          if (ra == a) {
            continue;
          }
          // a is related to its root; it suffices to push pairs (a, root).
          changed |= uf.unite(s.plus(a), s.plus(ra));
          changed |= uf.unite(s.star(a), s.star(ra));
          for (Elem c = 0; c < n; ++c) {
            changed |= uf.unite(s.mul(c, a), s.mul(c, ra));
            changed |= uf.unite(s.mul(a, c), s.mul(ra, c));
          }
        }
      }
    }

    void unite_blocks(Partition const& p, UnionFind& uf) {
      std::vector<Elem> first(p.num_blocks(), npos);
      for (Elem a = 0; a < p.size(); ++a) {
        Elem& f = first[p.block(a)];
        if (f == npos) {
          f = a;
        } else {
          uf.unite(f, a);
        }
      }
    }

  }  // namespace

  Partition::Partition(std::vector<std::size_t> block_of)
      : block_(block_of.size()) {
    std::vector<std::size_t> seen;
    for (Elem a = 0; a < block_of.size(); ++a) {
      auto it = std::ranges::find(seen, block_of[a]);
      if (it == seen.end()) {
        seen.push_back(block_of[a]);
        block_[a] = seen.size() - 1;
      } else {
        block_[a] = static_cast<std::size_t>(it - seen.begin());
      }
    }
    num_blocks_ = seen.size();
  }

  Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> b(n);
    std::iota(b.begin(), b.end(), 0);
    return Partition(b);
  }

  Partition Partition::universal(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  std::vector<std::vector<Elem>> Partition::blocks() const {
    std::vector<std::vector<Elem>> out(num_blocks_);
    for (Elem a = 0; a < block_.size(); ++a) {
      out[block_[a]].push_back(a);
    }
    return out;
  }

  std::vector<std::size_t> Partition::block_sizes() const {
    std::vector<std::size_t> sizes(num_blocks_, 0);
    for (std::size_t b : block_) {
      ++sizes[b];
    }
    std::ranges::sort(sizes);
    return sizes;
  }

  bool Partition::subset_of(Partition const& other) const {
    if (other.size() != size()) {
      return false;
    }
    // Each block of *this must map into a single block of other.
    std::vector<std::size_t> image(num_blocks_, npos);
    for (Elem a = 0; a < block_.size(); ++a) {
      auto& img = image[block_[a]];
      if (img == npos) {
        img = other.block_[a];
      } else if (img != other.block_[a]) {
        return false;
      }
    }
    return true;
  }

  Partition Partition::meet(Partition const& other) const {
    std::vector<std::size_t> key(block_.size());
    for (Elem a = 0; a < block_.size(); ++a) {
      key[a] = block_[a] * other.num_blocks_ + other.block_[a];
    }
    return Partition(key);
  }

  bool is_congruence(RSemigroup const& s, Partition const& p) {
    if (p.size() != s.order()) {
      return false;
    }
    std::size_t const n = s.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (!p.same(a, b)) {
          continue;
        }
        if (!p.same(s.plus(a), s.plus(b)) || !p.same(s.star(a), s.star(b))) {
          return false;
        }
        for (Elem c = 0; c < n; ++c) {
          if (!p.same(s.mul(c, a), s.mul(c, b))
              || !p.same(s.mul(a, c), s.mul(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Congruence::Congruence(RSemigroup const& s, Partition p) : p_(std::move(p)) {
    if (!is_congruence(s, p_)) {
      throw InputError("relation is not a congruence");
    }
  }

  Partition green(RSemigroup const& s, Green which) {
    std::vector<std::size_t> key(s.order());
    for (Elem a = 0; a < s.order(); ++a) {
      switch (which) {
        case Green::R: key[a] = s.plus(a); break;
        case Green::L: key[a] = s.star(a); break;
        case Green::H: key[a] = s.plus(a) * s.order() + s.star(a); break;
      }
    }
    return Partition(key);
  }

  Congruence sigma(RSemigroup const& s) {
    std::size_t const       n     = s.order();
    std::vector<Elem> const projs = projections(s);
    std::vector<bool>       rel(n * n, false);
    UnionFind               uf(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem e : projs) {
          if (s.mul(e, a) == s.mul(e, b)) {
            rel[a * n + b] = true;
            uf.unite(a, b);
            break;
          }
        }
      }
    }
    Partition p = uf.partition();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (p.same(a, b) != rel[a * n + b]) {
          throw InternalError("sigma formula is not transitive on ("
                              + s.name(a) + "," + s.name(b) + ")");
        }
      }
    }
    if (!is_congruence(s, p)) {
      throw InternalError("sigma is not a congruence");
    }
    return Congruence(s, std::move(p));
  }

  Congruence mu(RSemigroup const& s) {
    MunnRep const            rep = munn_rep(s);
    std::vector<IdealIso>    seen;
    std::vector<std::size_t> key(s.order());
    for (Elem a = 0; a < s.order(); ++a) {
      auto it = std::ranges::find(seen, rep.theta[a]);
      if (it == seen.end()) {
        seen.push_back(rep.theta[a]);
        key[a] = seen.size() - 1;
      } else {
        key[a] = static_cast<std::size_t>(it - seen.begin());
      }
    }
    Partition p(key);
    if (!is_congruence(s, p)) {
      throw InternalError("kernel of the Munn representation is not a "
                          "congruence");
    }
    return Congruence(s, std::move(p));
  }

  Quotient quotient(RSemigroup const& s, Partition const& rho) {
    if (rho.size() != s.order() || !is_congruence(s, rho)) {
      throw InputError("quotient: relation is not a congruence");
    }
    std::size_t const k = rho.num_blocks();
    std::vector<Elem> rep(k, npos);
    for (Elem a = 0; a < s.order(); ++a) {
      if (rep[rho.block(a)] == npos) {
        rep[rho.block(a)] = a;
      }
    }
    Table                    mul(k, std::vector<Elem>(k));
    std::vector<Elem>        plus(k), star(k);
    std::vector<std::string> labels(k);
    for (Elem i = 0; i < k; ++i) {
      plus[i]   = rho.block(s.plus(rep[i]));
      star[i]   = rho.block(s.star(rep[i]));
      labels[i] = "[" + s.name(rep[i]) + "]";
      for (Elem j = 0; j < k; ++j) {
        mul[i][j] = rho.block(s.mul(rep[i], rep[j]));
      }
    }
    Map map(s.order());
    for (Elem a = 0; a < s.order(); ++a) {
      map[a] = rho.block(a);
    }
    return {RSemigroup(mul, plus, star, labels), map, rep};
  }

  Partition congruence_closure(RSemigroup const&                         s,
                               std::vector<std::pair<Elem, Elem>> const& pairs) {
    UnionFind uf(s.order());
    for (auto [a, b] : pairs) {
      uf.unite(a, b);
    }
    close_under_operations(s, uf);
    return uf.partition();
  }

  std::vector<Partition> congruences(RSemigroup const& s, std::size_t limit) {
    std::size_t const n = s.order();
    std::set<Partition> principal;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        principal.insert(congruence_closure(s, {{a, b}}));
      }
    }
    // Every congruence is the join of the principal congruences it
    // contains, so closing the principal ones under binary joins is exact.
    std::set<Partition>    all(principal.begin(), principal.end());
    std::vector<Partition> frontier(principal.begin(), principal.end());
    while (!frontier.empty()) {
      std::vector<Partition> next;
      for (Partition const& p : frontier) {
        for (Partition const& q : principal) {
          if (q.subset_of(p)) {
            continue;
          }
          UnionFind uf(n);
          unite_blocks(p, uf);
          unite_blocks(q, uf);
          close_under_operations(s, uf);
          Partition j = uf.partition();
          if (all.insert(j).second) {
            if (all.size() > limit) {
              throw ResourceError("congruences: more than "
                                  + std::to_string(limit) + " congruences");
            }
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }
    all.insert(Partition::identity(n));
    return {all.begin(), all.end()};
  }

  bool separates_projections(RSemigroup const& s, Partition const& p) {
    std::vector<Elem> const projs = projections(s);
    for (std::size_t i = 0; i < projs.size(); ++i) {
      for (std::size_t j = i + 1; j < projs.size(); ++j) {
        if (p.same(projs[i], projs[j])) {
          return false;
        }
      }
    }
    return true;
  }

  bool identifies_projections(RSemigroup const& s, Partition const& p) {
    std::vector<Elem> const projs = projections(s);
    for (Elem e : projs) {
      if (!p.same(e, projs.front())) {
        return false;
      }
    }
    return true;
  }

}  // namespace rsg
