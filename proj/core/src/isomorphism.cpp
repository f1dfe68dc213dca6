#include "rsg/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace rsg {

  namespace {

    using Signature = std::vector<std::size_t>;

    std::vector<Signature> signatures(RSemigroup const& s) {
      std::size_t const        n = s.order();
      std::vector<std::size_t> r(n, 0), l(n, 0), h(n, 0);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          bool const sr = s.plus(a) == s.plus(b);
          bool const sl = s.star(a) == s.star(b);
          r[a] += sr ? 1 : 0;
          l[a] += sl ? 1 : 0;
          h[a] += sr && sl ? 1 : 0;
        }
      }
      std::vector<Signature> out(n);
      for (Elem a = 0; a < n; ++a) {
        // Index and period of the monogenic subsemigroup of a.
        std::vector<std::size_t> first(n, 0);
        Elem                     x = a;
        std::size_t              k = 1;
        while (first[x] == 0) {
          first[x] = k++;
          x        = s.mul(x, a);
        }
        std::size_t const index  = first[x];
        std::size_t const period = k - first[x];
        std::size_t       down = 0, up = 0, left_id = 0, right_id = 0;
        for (Elem b = 0; b < n; ++b) {
          down += natural_leq(s, b, a) ? 1 : 0;
          up += natural_leq(s, a, b) ? 1 : 0;
          left_id += s.mul(b, a) == a ? 1 : 0;
          right_id += s.mul(a, b) == a ? 1 : 0;
        }
        out[a] = {s.plus(a) == a ? 1U : 0U,
                  s.mul(a, a) == a ? 1U : 0U,
                  r[a],
                  l[a],
                  h[a],
                  index,
                  period,
                  down,
                  up,
                  left_id,
                  right_id};
      }
      return out;
    }

    class Search {
     public:
      Search(RSemigroup const& s1, RSemigroup const& s2)
          : s1_(s1),
            s2_(s2),
            sig1_(signatures(s1)),
            sig2_(signatures(s2)),
            f_(s1.order(), npos),
            g_(s2.order(), npos) {}

      bool invariants_match() const {
        auto a = sig1_, b = sig2_;
        std::ranges::sort(a);
        std::ranges::sort(b);
        return a == b;
      }

      std::optional<Map> run() {
        std::map<Signature, std::size_t> freq;
        for (auto const& sg : sig1_) {
          ++freq[sg];
        }
        order_.resize(s1_.order());
        for (Elem a = 0; a < s1_.order(); ++a) {
          order_[a] = a;
        }
        std::ranges::stable_sort(order_, [&](Elem a, Elem b) {
          return freq[sig1_[a]] < freq[sig1_[b]];
        });
        if (backtrack()) {
          return f_;
        }
        return std::nullopt;
      }

     private:
      // Assigns x -> y and everything it forces; on conflict returns false,
      // leaving the trail for the caller to undo.
      bool assign(Elem x, Elem y) {
        std::vector<std::pair<Elem, Elem>> queue{{x, y}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (f_[a] == b) {
            continue;
          }
          if (f_[a] != npos || g_[b] != npos || sig1_[a] != sig2_[b]) {
            return false;
          }
          f_[a] = b;
          g_[b] = a;
          trail_.push_back(a);
          queue.emplace_back(s1_.plus(a), s2_.plus(b));
          queue.emplace_back(s1_.star(a), s2_.star(b));
          for (Elem c : trail_) {
            queue.emplace_back(s1_.mul(a, c), s2_.mul(b, f_[c]));
            queue.emplace_back(s1_.mul(c, a), s2_.mul(f_[c], b));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          Elem const a = trail_.back();
          trail_.pop_back();
          g_[f_[a]] = npos;
          f_[a]     = npos;
        }
      }

      bool backtrack() {
        auto it = std::ranges::find_if(order_, [&](Elem a) {
          return f_[a] == npos;
        });
        if (it == order_.end()) {
          return true;
        }
        Elem const a = *it;
        for (Elem b = 0; b < s2_.order(); ++b) {
          if (g_[b] != npos || sig1_[a] != sig2_[b]) {
            continue;
          }
          std::size_t const mark = trail_.size();
          if (assign(a, b) && backtrack()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      RSemigroup const&      s1_;
      RSemigroup const&      s2_;
      std::vector<Signature> sig1_, sig2_;
      Map                    f_, g_;
      std::vector<Elem>      trail_;
      std::vector<Elem>      order_;
    };

  }  // namespace

  std::optional<Map> find_isomorphism(RSemigroup const& s1,
                                      RSemigroup const& s2) {
    if (s1.order() != s2.order()
        || projections(s1).size() != projections(s2).size()) {
      return std::nullopt;
    }
    Search search(s1, s2);
    if (!search.invariants_match()) {
      return std::nullopt;
    }
    auto f = search.run();
    if (f && !is_isomorphism(s1, s2, *f)) {
      return std::nullopt;
    }
    return f;
  }

}  // namespace rsg
