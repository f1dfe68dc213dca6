#include "rsg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rsg/errors.hpp"

namespace rsg {

  namespace {

    using json = nlohmann::json;

    json parse(std::string const& text) {
      try {
        json j = json::parse(text);
        if (!j.is_object() && !j.is_array()) {
          throw InputError("document is not a JSON object");
        }
        return j;
      } catch (json::exception const& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
    }

    template <typename F>
    auto guarded(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw InputError(std::string(what) + ": " + e.what());
      }
    }

    void expect_kind(json const& j, std::string const& kind) {
      if (!j.contains("kind") || j.at("kind") != kind) {
        throw InputError("expected a document of kind \"" + kind + "\"");
      }
    }

    std::size_t order_of(json const& j) {
      std::size_t const n = j.at("order").get<std::size_t>();
      if (n == 0) {
        throw InputError("order must be positive");
      }
      return n;
    }

    std::vector<Elem> elems(json const& j, std::size_t n, char const* field) {
      auto const v = j.at(field).get<std::vector<Elem>>();
      if (v.size() != n) {
        throw InputError(std::string(field) + " must have " + std::to_string(n)
                         + " entries");
      }
      for (Elem x : v) {
        if (x >= n) {
          throw InputError(std::string(field) + " entry out of range");
        }
      }
      return v;
    }

    Table square(json const& j, std::size_t n, char const* field) {
      auto const rows = j.at(field);
      if (!rows.is_array() || rows.size() != n) {
        throw InputError(std::string(field) + " must have " + std::to_string(n)
                         + " rows");
      }
      Table t;
      for (auto const& row : rows) {
        t.push_back(elems(json{{field, row}}, n, field));
      }
      return t;
    }

    std::vector<std::string> labels_of(json const& j, std::size_t n) {
      if (!j.contains("labels")) {
        return {};
      }
      auto v = j.at("labels").get<std::vector<std::string>>();
      if (v.size() != n) {
        throw InputError("labels must have one entry per element");
      }
      return v;
    }

    Semilattice semilattice_from(json const& j) {
      expect_kind(j, "semilattice");
      std::size_t const n = order_of(j);
      return Semilattice(square(j, n, "meet"));
    }

    Monoid monoid_from(json const& j) {
      expect_kind(j, "monoid");
      std::size_t const n   = order_of(j);
      Elem const        one = j.at("identity").get<Elem>();
      if (one >= n) {
        throw InputError("identity out of range");
      }
      return Monoid(square(j, n, "mul"), one, labels_of(j, n));
    }

    json table_json(Table const& t) { return json(t); }

    json semilattice_json(Semilattice const& y) {
      return {{"kind", "semilattice"},
              {"order", y.order()},
              {"meet", table_json(y.table())}};
    }

    json monoid_json(Monoid const& t) {
      json j{{"kind", "monoid"},
             {"order", t.order()},
             {"mul", table_json(t.table())},
             {"identity", t.identity()}};
      if (!t.labels().empty()) {
        j["labels"] = t.labels();
      }
      return j;
    }

  }  // namespace

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string document_kind(std::string const& text) {
    json const j = parse(text);
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
      throw InputError("document has no \"kind\"");
    }
    return j.at("kind").get<std::string>();
  }

  RSemigroup parse_rsemigroup(std::string const& text) {
    json const j = parse(text);
    return guarded("restriction_semigroup", [&] {
      std::string const kind = j.value("kind", "");
      if (kind == "semilattice") {
        return as_rsemigroup(semilattice_from(j));
      }
      if (kind == "monoid") {
        return monoid_from(j).as_reduced();
      }
      expect_kind(j, "restriction_semigroup");
      std::size_t const n = order_of(j);
      return RSemigroup(square(j, n, "mul"), elems(j, n, "plus"),
                        elems(j, n, "star"), labels_of(j, n));
    });
  }

  Semilattice parse_semilattice(std::string const& text) {
    json const j = parse(text);
    return guarded("semilattice", [&] { return semilattice_from(j); });
  }

  Monoid parse_monoid(std::string const& text) {
    json const j = parse(text);
    return guarded("monoid", [&] { return monoid_from(j); });
  }

  MonoidAction parse_action(std::string const& text) {
    json const j = parse(text);
    return guarded("action", [&] {
      expect_kind(j, "action");
      Monoid      t = monoid_from(j.at("monoid"));
      Semilattice y = semilattice_from(j.at("semilattice"));
      std::vector<std::optional<IdealIso>> alpha(t.order());
      for (auto const& entry : j.at("alpha")) {
        Elem const u = entry.at("t").get<Elem>();
        if (u >= t.order() || alpha[u]) {
          throw InputError("alpha: t out of range or repeated");
        }
        auto const pairs =
            entry.at("map").get<std::vector<std::pair<Elem, Elem>>>();
        for (auto [x, fx] : pairs) {
          if (x >= y.order() || fx >= y.order()) {
            throw InputError("alpha: map entry out of range");
          }
        }
        alpha[u] = IdealIso::from_pairs(y, pairs);
      }
      std::vector<IdealIso> maps;
      for (Elem u = 0; u < t.order(); ++u) {
        if (!alpha[u]) {
          throw InputError("alpha: no map for t = " + std::to_string(u));
        }
        maps.push_back(*alpha[u]);
      }
      std::optional<ActionKind> declared;
      if (j.contains("declared")) {
        std::string const d = j.at("declared").get<std::string>();
        if (d == "homomorphism") {
          declared = ActionKind::homomorphism;
        } else if (d == "subhomomorphism") {
          declared = ActionKind::subhomomorphism;
        } else {
          throw InputError("declared must be homomorphism or subhomomorphism");
        }
      }
      return validate_action(std::move(t), std::move(y), std::move(maps),
                             declared);
    });
  }

  Map parse_map(std::string const& text) {
    json const j = parse(text);
    return guarded("map", [&] {
      if (j.is_array()) {
        return j.get<Map>();
      }
      expect_kind(j, "map");
      return j.at("map").get<Map>();
    });
  }

  std::string to_json(RSemigroup const& s) {
    json j{{"kind", "restriction_semigroup"},
           {"order", s.order()},
           {"mul", table_json(s.table())},
           {"plus", s.plus_map()},
           {"star", s.star_map()}};
    if (!s.labels().empty()) {
      j["labels"] = s.labels();
    }
    return j.dump();
  }

  std::string to_json(Semilattice const& y) {
    return semilattice_json(y).dump();
  }

  std::string to_json(Monoid const& t) { return monoid_json(t).dump(); }

  std::string to_json(MonoidAction const& act) {
    json alpha = json::array();
    for (Elem u = 0; u < act.alpha.size(); ++u) {
      alpha.push_back({{"t", u}, {"map", act.alpha[u].pairs()}});
    }
    return json{{"kind", "action"},
                {"monoid", monoid_json(act.monoid)},
                {"semilattice", semilattice_json(act.semilattice)},
                {"alpha", alpha},
                {"declared", to_string(act.kind)}}
        .dump();
  }

  std::string map_to_json(Map const& m) {
    return json{{"kind", "map"}, {"map", m}}.dump();
  }

}  // namespace rsg
