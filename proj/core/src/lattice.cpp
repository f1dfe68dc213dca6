#include "rsg/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "rsg/errors.hpp"

namespace rsg {

  Semilattice::Semilattice(Table const& meet) : n_(meet.size()) {
    if (n_ == 0) {
      throw InputError("a semilattice must have at least one element");
    }
    if (n_ > ElemSet::capacity) {
      throw ResourceError("semilattice order exceeds 64");
    }
    meet_.reserve(n_ * n_);
    for (auto const& row : meet) {
      if (row.size() != n_) {
        throw InputError("meet table is not square");
      }
      for (Elem v : row) {
        if (v >= n_) {
          throw InputError("meet table contains out-of-range index "
                           + std::to_string(v));
        }
        meet_.push_back(v);
      }
    }
    for (Elem a = 0; a < n_; ++a) {
      if (this->meet(a, a) != a) {
        throw InputError("meet is not idempotent at " + std::to_string(a));
      }
      for (Elem b = 0; b < n_; ++b) {
        if (this->meet(a, b) != this->meet(b, a)) {
          throw InputError("meet is not commutative at ("
                           + std::to_string(a) + "," + std::to_string(b)
                           + ")");
        }
        for (Elem c = 0; c < n_; ++c) {
          if (this->meet(this->meet(a, b), c) != this->meet(a, this->meet(b, c))) {
            throw InputError("meet is not associative at ("
                             + std::to_string(a) + "," + std::to_string(b)
                             + "," + std::to_string(c) + ")");
          }
        }
      }
    }
    down_.resize(n_);
    Elem bottom = 0;
    for (Elem a = 0; a < n_; ++a) {
      bottom = this->meet(bottom, a);
      for (Elem b = 0; b < n_; ++b) {
        if (leq(b, a)) {
          down_[a].insert(b);
        }
      }
      if (down_[a].size() == n_) {
        top_ = a;
      }
    }
    bottom_ = bottom;
  }

  bool Semilattice::is_ideal(ElemSet s) const {
    if (s.empty() || !s.subset_of(ElemSet::full(n_))) {
      return false;
    }
    bool ok = true;
    s.for_each([&](Elem a) { ok = ok && down_[a].subset_of(s); });
    return ok;
  }

  std::optional<Elem> Semilattice::maximum(ElemSet s) const {
    std::optional<Elem> result;
    s.for_each([&](Elem a) {
      if (!result && s.subset_of(down_[a])) {
        result = a;
      }
    });
    return result;
  }

  Table Semilattice::table() const {
    Table t(n_, std::vector<Elem>(n_));
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        t[a][b] = meet(a, b);
      }
    }
    return t;
  }

  RSemigroup as_rsemigroup(Semilattice const& y) {
    std::vector<Elem> id(y.order());
    for (Elem a = 0; a < y.order(); ++a) {
      id[a] = a;
    }
    return RSemigroup(y.table(), id, id);
  }

  std::vector<ElemSet> ideals(Semilattice const& y) {
    if (y.order() > 20) {
      throw ResourceError("ideal enumeration is limited to order 20");
    }
    std::vector<ElemSet> out;
    std::uint64_t const  limit = std::uint64_t{1} << y.order();
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      if (y.is_ideal(ElemSet(bits))) {
        out.emplace_back(bits);
      }
    }
    return out;
  }

  std::vector<ElemSet> principal_ideals(Semilattice const& y) {
    std::vector<ElemSet> out;
    for (Elem a = 0; a < y.order(); ++a) {
      out.push_back(y.down(a));
    }
    std::ranges::sort(out);
    return out;
  }

  IdealIso::IdealIso(std::vector<Elem> map) : map_(std::move(map)) {
    for (Elem x = 0; x < map_.size(); ++x) {
      if (map_[x] != npos) {
        dom_.insert(x);
        ran_.insert(map_[x]);
      }
    }
  }

  IdealIso IdealIso::from_pairs(Semilattice const&                     y,
                                std::span<std::pair<Elem, Elem> const> pairs) {
    std::size_t const n = y.order();
    std::vector<Elem> map(n, npos);
    for (auto [x, fx] : pairs) {
      if (x >= n || fx >= n) {
        throw InputError("ideal isomorphism: index out of range");
      }
      if (map[x] != npos && map[x] != fx) {
        throw InputError("ideal isomorphism: " + std::to_string(x)
                         + " has two images");
      }
      map[x] = fx;
    }
    IdealIso f(std::move(map));
    if (f.dom_.empty()) {
      throw InputError("ideal isomorphism: empty map");
    }
    if (f.dom_.size() != f.ran_.size()) {
      throw InputError("ideal isomorphism: map is not injective");
    }
    if (!y.is_ideal(f.dom_) || !y.is_ideal(f.ran_)) {
      throw InputError("ideal isomorphism: domain or range is not an ideal");
    }
    for (Elem a : f.dom_.members()) {
      for (Elem b : f.dom_.members()) {
        if (f(y.meet(a, b)) != y.meet(f(a), f(b))) {
          throw InputError("ideal isomorphism: meet not preserved at ("
                           + std::to_string(a) + "," + std::to_string(b)
                           + ")");
        }
      }
    }
    return f;
  }

  IdealIso IdealIso::identity(std::size_t n, ElemSet ideal) {
    std::vector<Elem> map(n, npos);
    ideal.for_each([&](Elem a) { map[a] = a; });
    return IdealIso(std::move(map));
  }

  std::vector<std::pair<Elem, Elem>> IdealIso::pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    dom_.for_each([&](Elem a) { out.emplace_back(a, map_[a]); });
    return out;
  }

  IdealIso IdealIso::inverse() const {
    std::vector<Elem> inv(map_.size(), npos);
    dom_.for_each([&](Elem a) { inv[map_[a]] = a; });
    return IdealIso(std::move(inv));
  }

  IdealIso IdealIso::restrict_to(ElemSet ideal) const {
    std::vector<Elem> map(map_.size(), npos);
    (dom_ & ideal).for_each([&](Elem a) { map[a] = map_[a]; });
    IdealIso r(std::move(map));
    if (r.dom_.empty()) {
      throw InputError("restriction of an ideal isomorphism is empty");
    }
    return r;
  }

  bool IdealIso::is_identity() const {
    bool ok = true;
    dom_.for_each([&](Elem a) { ok = ok && map_[a] == a; });
    return ok;
  }

  std::string IdealIso::to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    dom_.for_each([&](Elem a) {
      os << (first ? "" : ", ") << a << "->" << map_[a];
      first = false;
    });
    os << ']';
    return os.str();
  }

  std::optional<IdealIso> iso_compose(IdealIso const& f, IdealIso const& g) {
    if (f.degree() != g.degree()) {
      throw InputError("iso_compose: maps over different semilattices");
    }
    std::vector<Elem> map(f.degree(), npos);
    bool              any = false;
    f.dom_.for_each([&](Elem a) {
      Elem const fa = f.map_[a];
      if (g.map_[fa] != npos) {
        map[a] = g.map_[fa];
        any    = true;
      }
    });
    if (!any) {
      return std::nullopt;
    }
    return IdealIso(std::move(map));
  }

  bool iso_leq(IdealIso const& f, IdealIso const& g) {
    if (f.degree() != g.degree() || !f.dom().subset_of(g.dom())) {
      return false;
    }
    bool ok = true;
    f.dom().for_each([&](Elem a) { ok = ok && f(a) == g(a); });
    return ok;
  }

  namespace {

    // Extends the partial bijection map one element of dom at a time,
    // keeping it an order isomorphism onto its image.
    void extend_isos(Semilattice const&       y,
                     std::vector<Elem> const& dom,
                     std::vector<Elem> const& ran,
                     std::vector<Elem>&       map,
                     std::vector<bool>&       used,
                     std::size_t              depth,
                     std::vector<IdealIso>&   out) {
      if (depth == dom.size()) {
        std::vector<std::pair<Elem, Elem>> pairs;
        for (Elem a : dom) {
          pairs.emplace_back(a, map[a]);
        }
        out.push_back(IdealIso::from_pairs(y, pairs));
        return;
      }
      Elem const a = dom[depth];
      for (std::size_t k = 0; k < ran.size(); ++k) {
        Elem const b = ran[k];
        if (used[k] || y.down(a).size() != y.down(b).size()) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
          Elem const c = dom[i];
          ok           = y.leq(a, c) == y.leq(b, map[c])
               && y.leq(c, a) == y.leq(map[c], b);
        }
        if (!ok) {
          continue;
        }
        used[k] = true;
        map[a]  = b;
        extend_isos(y, dom, ran, map, used, depth + 1, out);
        map[a]  = npos;
        used[k] = false;
      }
    }

    // Members of an ideal listed so that each element follows everything
    // strictly below it.
    std::vector<Elem> linear_extension(Semilattice const& y, ElemSet ideal) {
      std::vector<Elem> v = ideal.members();
      std::ranges::stable_sort(v, [&](Elem a, Elem b) {
        return y.down(a).size() < y.down(b).size();
      });
      return v;
    }

  }  // namespace

  std::vector<IdealIso> ideal_isos(Semilattice const& y, bool principal_only) {
    std::vector<ElemSet> const ids
        = principal_only ? principal_ideals(y) : ideals(y);
    std::vector<IdealIso> out;
    for (ElemSet const& d : ids) {
      for (ElemSet const& r : ids) {
        if (d.size() != r.size()) {
          continue;
        }
        std::vector<Elem> const dom = linear_extension(y, d);
        std::vector<Elem> const ran = r.members();
        std::vector<Elem>       map(y.order(), npos);
        std::vector<bool>       used(ran.size(), false);
        extend_isos(y, dom, ran, map, used, 0, out);
      }
    }
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ProjectionSemilattice projection_semilattice(RSemigroup const& s) {
    ProjectionSemilattice out;
    out.element = projections(s);
    out.index.assign(s.order(), npos);
    for (Elem i = 0; i < out.element.size(); ++i) {
      out.index[out.element[i]] = i;
    }
    std::size_t const k = out.element.size();
    Table             meet(k, std::vector<Elem>(k));
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        Elem const ef = s.mul(out.element[i], out.element[j]);
        if (out.index[ef] == npos) {
          throw InternalError("product of projections is not a projection");
        }
        meet[i][j] = out.index[ef];
      }
    }
    out.lattice = Semilattice(meet);
    return out;
  }

}  // namespace rsg
