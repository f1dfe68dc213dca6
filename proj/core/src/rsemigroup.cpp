#include "rsg/rsemigroup.hpp"

#include <algorithm>
#include <sstream>

#include "rsg/errors.hpp"

namespace rsg {

  namespace {

    void require_index(Elem v, std::size_t n, char const* what) {
      if (v >= n) {
        throw InputError(std::string(what) + " contains out-of-range index "
                         + std::to_string(v) + " (order "
                         + std::to_string(n) + ")");
      }
    }

  }  // namespace

  RSemigroup::RSemigroup(Table const&             mul,
                         std::vector<Elem>        plus,
                         std::vector<Elem>        star,
                         std::vector<std::string> labels)
      : n_(mul.size()),
        plus_(std::move(plus)),
        star_(std::move(star)),
        labels_(std::move(labels)) {
    if (n_ == 0) {
      throw InputError("a semigroup must have at least one element");
    }
    mul_.reserve(n_ * n_);
    for (auto const& row : mul) {
      if (row.size() != n_) {
        throw InputError("multiplication table is not square");
      }
      for (Elem v : row) {
        require_index(v, n_, "multiplication table");
        mul_.push_back(v);
      }
    }
    if (plus_.size() != n_ || star_.size() != n_) {
      throw InputError("unary maps must have one entry per element");
    }
    for (Elem v : plus_) {
      require_index(v, n_, "plus map");
    }
    for (Elem v : star_) {
      require_index(v, n_, "star map");
    }
    if (!labels_.empty() && labels_.size() != n_) {
      throw InputError("labels must be absent or one per element");
    }
    for (Elem e = 0; e < n_; ++e) {
      if (plus_[e] != e || star_[e] != e) {
        continue;
      }
      bool is_one = true;
      for (Elem x = 0; x < n_ && is_one; ++x) {
        is_one = mul_[e * n_ + x] == x && mul_[x * n_ + e] == x;
      }
      if (is_one) {
        identity_ = e;
        break;
      }
    }
  }

  Table RSemigroup::table() const {
    Table t(n_, std::vector<Elem>(n_));
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        t[a][b] = mul(a, b);
      }
    }
    return t;
  }

  std::string RSemigroup::name(Elem a) const {
    if (a < labels_.size()) {
      return labels_[a];
    }
    return std::to_string(a);
  }

  AxiomReport check_axioms(RSemigroup const& s) {
    std::size_t const n = s.order();
    auto              m = [&s](Elem a, Elem b) { return s.mul(a, b); };
    auto              p = [&s](Elem a) { return s.plus(a); };
    auto              q = [&s](Elem a) { return s.star(a); };

    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem const xy = m(x, y);
        for (Elem z = 0; z < n; ++z) {
          if (m(xy, z) != m(x, m(y, z))) {
            return {false, "(xy)z = x(yz)", {x, y, z}};
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (m(p(x), x) != x) {
        return {false, "x+x = x", {x}};
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (p(m(p(x), y)) != m(p(x), p(y))) {
          return {false, "(x+y)+ = x+y+", {x, y}};
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (m(p(x), p(y)) != m(p(y), p(x))) {
          return {false, "x+y+ = y+x+", {x, y}};
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (m(x, p(y)) != m(p(m(x, y)), x)) {
          return {false, "xy+ = (xy)+x", {x, y}};
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (m(x, q(x)) != x) {
        return {false, "xx* = x", {x}};
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (q(m(y, q(x))) != m(q(y), q(x))) {
          return {false, "(yx*)* = y*x*", {x, y}};
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (m(q(x), q(y)) != m(q(y), q(x))) {
          return {false, "x*y* = y*x*", {x, y}};
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (m(q(y), x) != m(x, q(m(y, x)))) {
          return {false, "y*x = x(yx)*", {x, y}};
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (q(p(x)) != p(x)) {
        return {false, "(x+)* = x+", {x}};
      }
      if (p(q(x)) != q(x)) {
        return {false, "(x*)+ = x*", {x}};
      }
    }
    return {};
  }

  std::vector<Elem> projections(RSemigroup const& s) {
    std::vector<Elem> plus_image, star_image;
    for (Elem a = 0; a < s.order(); ++a) {
      plus_image.push_back(s.plus(a));
      star_image.push_back(s.star(a));
    }
    std::ranges::sort(plus_image);
    std::ranges::sort(star_image);
    plus_image.erase(std::unique(plus_image.begin(), plus_image.end()),
                     plus_image.end());
    star_image.erase(std::unique(star_image.begin(), star_image.end()),
                     star_image.end());
    if (plus_image != star_image) {
      throw InternalError("images of + and * differ; not a restriction "
                          "semigroup");
    }
    return plus_image;
  }

  ElemSet projection_set(RSemigroup const& s) {
    if (s.order() > ElemSet::capacity) {
      throw ResourceError("projection_set: order exceeds 64");
    }
    return ElemSet::from(projections(s));
  }

  bool is_projection(RSemigroup const& s, Elem a) {
    return s.plus(a) == a;
  }

  bool natural_leq(RSemigroup const& s, Elem a, Elem b) {
    return s.mul(s.plus(a), b) == a;
  }

  ElemSet down_set(RSemigroup const& s, Elem a) {
    if (s.order() > ElemSet::capacity) {
      throw ResourceError("down_set: order exceeds 64");
    }
    ElemSet out;
    for (Elem b = 0; b < s.order(); ++b) {
      if (natural_leq(s, b, a)) {
        out.insert(b);
      }
    }
    return out;
  }

  bool is_homomorphism(RSemigroup const& from,
                       RSemigroup const& to,
                       std::span<Elem const> f) {
    if (f.size() != from.order()) {
      return false;
    }
    for (Elem v : f) {
      if (v >= to.order()) {
        return false;
      }
    }
    for (Elem a = 0; a < from.order(); ++a) {
      if (f[from.plus(a)] != to.plus(f[a])
          || f[from.star(a)] != to.star(f[a])) {
        return false;
      }
      for (Elem b = 0; b < from.order(); ++b) {
        if (f[from.mul(a, b)] != to.mul(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_isomorphism(RSemigroup const& from,
                      RSemigroup const& to,
                      std::span<Elem const> f) {
    if (from.order() != to.order() || !is_homomorphism(from, to, f)) {
      return false;
    }
    std::vector<bool> hit(to.order(), false);
    for (Elem v : f) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  RSemigroup direct_product(RSemigroup const& s, RSemigroup const& t) {
    std::size_t const        m = t.order();
    std::size_t const        n = s.order() * m;
    Table                    mul(n, std::vector<Elem>(n));
    std::vector<Elem>        plus(n), star(n);
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) {
      Elem const a1 = a / m, a2 = a % m;
      plus[a]   = s.plus(a1) * m + t.plus(a2);
      star[a]   = s.star(a1) * m + t.star(a2);
      labels[a] = "(" + s.name(a1) + "," + t.name(a2) + ")";
      for (Elem b = 0; b < n; ++b) {
        mul[a][b] = s.mul(a1, b / m) * m + t.mul(a2, b % m);
      }
    }
    return RSemigroup(mul, plus, star, labels);
  }

  Adjoined adjoin_identity(RSemigroup const& s) {
    if (auto one = s.identity()) {
      return {s, *one, false};
    }
    std::size_t const n   = s.order();
    Elem const        one = n;
    Table             mul(n + 1, std::vector<Elem>(n + 1));
    std::vector<Elem> plus(n + 1), star(n + 1);
    for (Elem a = 0; a <= n; ++a) {
      plus[a] = a == one ? one : s.plus(a);
      star[a] = a == one ? one : s.star(a);
      for (Elem b = 0; b <= n; ++b) {
        if (a == one) {
          mul[a][b] = b;
        } else if (b == one) {
          mul[a][b] = a;
        } else {
          mul[a][b] = s.mul(a, b);
        }
      }
    }
    std::vector<std::string> labels;
    if (!s.labels().empty()) {
      labels = s.labels();
      labels.push_back("1");
    }
    return {RSemigroup(mul, plus, star, labels), one, true};
  }

  Restriction restrict_to(RSemigroup const& s, std::vector<Elem> elems) {
    std::ranges::sort(elems);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) {
      throw InputError("restrict_to: empty element set");
    }
    std::vector<Elem> index(s.order(), npos);
    for (Elem i = 0; i < elems.size(); ++i) {
      if (elems[i] >= s.order()) {
        throw InputError("restrict_to: element out of range");
      }
      index[elems[i]] = i;
    }
    auto at = [&](Elem v) {
      if (index[v] == npos) {
        throw InputError("restrict_to: subset is not closed (produces "
                         + s.name(v) + ")");
      }
      return index[v];
    };
    std::size_t const        n = elems.size();
    Table                    mul(n, std::vector<Elem>(n));
    std::vector<Elem>        plus(n), star(n);
    std::vector<std::string> labels;
    for (Elem i = 0; i < n; ++i) {
      plus[i] = at(s.plus(elems[i]));
      star[i] = at(s.star(elems[i]));
      for (Elem j = 0; j < n; ++j) {
        mul[i][j] = at(s.mul(elems[i], elems[j]));
      }
      if (!s.labels().empty()) {
        labels.push_back(s.labels()[elems[i]]);
      }
    }
    return {RSemigroup(mul, plus, star, labels), elems};
  }

  Restriction restrict_to(RSemigroup const& s, ElemSet elems) {
    return restrict_to(s, elems.members());
  }

  std::vector<Elem> biunary_closure(RSemigroup const& s,
                                    std::vector<Elem>  generators) {
    std::vector<bool> in(s.order(), false);
    std::vector<Elem> out;
    auto              add = [&](Elem a) {
      if (!in[a]) {
        in[a] = true;
        out.push_back(a);
      }
    };
    for (Elem g : generators) {
      add(g);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      Elem const a = out[i];
      add(s.plus(a));
      add(s.star(a));
      for (std::size_t j = 0; j <= i; ++j) {
        add(s.mul(a, out[j]));
        add(s.mul(out[j], a));
      }
    }
    std::ranges::sort(out);
    return out;
  }

  std::string describe(RSemigroup const& s) {
    std::ostringstream os;
    std::size_t const  n = s.order();
    os << "order " << n << '\n';
    for (Elem a = 0; a < n; ++a) {
      os << "  " << s.name(a) << ":";
      for (Elem b = 0; b < n; ++b) {
        os << ' ' << s.name(s.mul(a, b));
      }
      os << "   + " << s.name(s.plus(a)) << "   * " << s.name(s.star(a))
         << '\n';
    }
    return os.str();
  }

}  // namespace rsg
