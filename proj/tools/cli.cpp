#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsg/classification.hpp"
#include "rsg/congruence.hpp"
#include "rsg/corpus.hpp"
#include "rsg/cset.hpp"
#include "rsg/errors.hpp"
#include "rsg/io.hpp"
#include "rsg/munn.hpp"
#include "rsg/suites.hpp"

namespace rsg::cli {

  namespace {

    using json = nlohmann::json;

    std::string names(RSemigroup const& s, std::vector<Elem> const& elems) {
      std::string out = "{";
      for (std::size_t i = 0; i < elems.size(); ++i) {
        out += (i ? ", " : "") + s.name(elems[i]);
      }
      return out + "}";
    }

    std::string blocks(RSemigroup const& s, Partition const& p) {
      std::string out;
      for (auto const& b : p.blocks()) {
        out += (out.empty() ? "" : " ") + names(s, b);
      }
      return out;
    }

    std::string tf(bool b) { return b ? "true" : "false"; }

    std::string witness(RSemigroup const& s, std::vector<Elem> const& w) {
      std::string out = "(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(w[i]);
        if (!s.labels().empty()) {
          out += " [" + s.name(w[i]) + "]";
        }
      }
      return out + ")";
    }

    // Loads a restriction semigroup and insists on the axioms; a failure is
    // reported as a false property.
    bool load_valid(std::string const& path, RSemigroup& s, std::ostream& out) {
      s                    = parse_rsemigroup(read_file(path));
      AxiomReport const ax = check_axioms(s);
      if (!ax) {
        out << "not a restriction semigroup: " << ax.identity << " fails at "
            << witness(s, ax.witness) << "\n";
        return false;
      }
      return true;
    }

    std::string iso_names(IdealIso const& f, ProjectionSemilattice const& y,
                          RSemigroup const& s) {
      std::string out = "[";
      bool        first = true;
      for (auto [x, fx] : f.pairs()) {
        out += (first ? "" : ", ") + s.name(y.element[x]) + "->"
               + s.name(y.element[fx]);
        first = false;
      }
      return out + "]";
    }

    json partition_json(Partition const& p) { return json(p.blocks()); }

    int cmd_check(std::string const& path, std::ostream& out) {
      RSemigroup const  s  = parse_rsemigroup(read_file(path));
      AxiomReport const ax = check_axioms(s);
      if (ax) {
        out << "pass: all restriction identities hold (order " << s.order()
            << ")\n";
        return exit_ok;
      }
      out << "fail: " << ax.identity << " at " << witness(s, ax.witness) << "\n";
      return exit_false;
    }

    int cmd_analyze(std::string const& path, bool as_json, std::ostream& out) {
      RSemigroup s;
      if (!load_valid(path, s, out)) {
        return exit_false;
      }
      ClassificationReport const c  = classify(s);
      Partition const            sg = sigma(s).partition();
      Partition const            m  = mu(s).partition();
      Partition const            r  = green(s, Green::R);
      Partition const            l  = green(s, Green::L);
      Partition const            h  = green(s, Green::H);
      std::vector<std::pair<std::string, bool>> const flags{
          {"is_restriction", c.is_restriction},
          {"is_monoid", c.is_monoid},
          {"is_reduced", c.is_reduced},
          {"is_inverse", c.is_inverse},
          {"is_proper", c.is_proper},
          {"sigma_perfect", c.sigma_perfect},
          {"is_almost_perfect", c.is_almost_perfect},
          {"is_F_restriction", c.is_F_restriction},
          {"is_perfect", c.is_perfect}};
      if (as_json) {
        json j{{"order", s.order()},
               {"projections", projections(s)},
               {"R", partition_json(r)},
               {"L", partition_json(l)},
               {"H", partition_json(h)},
               {"sigma", partition_json(sg)},
               {"mu", partition_json(m)}};
        for (auto const& [k, v] : flags) {
          j[k] = v;
        }
        if (c.sigma_class_maxima) {
          j["sigma_class_maxima"] = *c.sigma_class_maxima;
        }
        out << j.dump(2) << "\n";
        return exit_ok;
      }
      out << "order: " << s.order() << "\n"
          << "projections: " << names(s, projections(s)) << "\n"
          << "R: " << blocks(s, r) << "\n"
          << "L: " << blocks(s, l) << "\n"
          << "H: " << blocks(s, h) << "\n"
          << "sigma: " << blocks(s, sg) << "\n"
          << "mu: " << blocks(s, m) << "\n";
      for (auto const& [k, v] : flags) {
        out << k << " = " << tf(v) << "\n";
      }
      if (c.sigma_class_maxima) {
        out << "sigma_class_maxima: " << names(s, *c.sigma_class_maxima) << "\n";
      }
      return exit_ok;
    }

    int cmd_munn(std::string const& path, bool ideal_isos, std::ostream& out) {
      RSemigroup s;
      if (!load_valid(path, s, out)) {
        return exit_false;
      }
      MunnRep const m = munn_rep(s);
      out << "P_S: " << names(s, m.y.element) << "\n";
      for (Elem a = 0; a < s.order(); ++a) {
        out << "theta " << s.name(a) << ": " << iso_names(m.theta[a], m.y, s)
            << "\n";
      }
      out << "kernel (mu): " << blocks(s, mu(s).partition()) << "\n";
      if (ideal_isos) {
        IsoSemigroup const ty = munn_semigroup(m.y.lattice);
        IsoSemigroup const ti = ideal_iso_semigroup(m.y.lattice);
        out << "|T_Y| = " << ty.catalog.size() << "\n";
        for (IdealIso const& f : ty.catalog) {
          out << "  " << iso_names(f, m.y, s) << "\n";
        }
        out << "|TI_Y| = " << ti.catalog.size() << "\n";
        for (IdealIso const& f : ti.catalog) {
          out << "  " << iso_names(f, m.y, s) << "\n";
        }
        SigmaReport const rep = verify_sigma_iso(m.y.lattice);
        out << "|C(T_Y)| = " << rep.c_size << ", Sigma isomorphism: "
            << tf(rep.ok) << (rep.failure.empty() ? "" : " (" + rep.failure + ")")
            << "\n";
        if (!rep.ok) {
          return exit_false;
        }
      }
      return exit_ok;
    }

    int cmd_cset(std::string const& path, bool as_json, std::ostream& out) {
      RSemigroup s;
      if (!load_valid(path, s, out)) {
        return exit_false;
      }
      CMonoid const c = c_monoid(s);
      if (as_json) {
        json members = json::array();
        for (ElemSet a : c.catalog) {
          members.push_back(a.members());
        }
        out << json{{"order", c.catalog.size()},
                    {"members", members},
                    {"identity", c.one},
                    {"semigroup", json::parse(to_json(c.monoid))}}
                   .dump()
            << "\n";
        return exit_ok;
      }
      out << "|C(S)| = " << c.catalog.size() << "\n";
      for (Elem i = 0; i < c.catalog.size(); ++i) {
        out << "  " << i << ": " << names(s, c.catalog[i].members())
            << (i == c.one ? "  (identity)" : "") << "\n";
      }
      out << "is_proper = " << tf(classify(c.monoid).is_proper) << "\n";
      return exit_ok;
    }

    int cmd_w_product(std::string const& path, bool as_json, std::ostream& out) {
      MonoidAction const act = parse_action(read_file(path));
      WProduct const     w   = w_product(act);
      if (as_json) {
        out << to_json(w.semigroup) << "\n";
        return exit_ok;
      }
      ClassificationReport const c = classify(w.semigroup);
      out << "W(T,Y): " << w.semigroup.order() << " elements, action kind "
          << to_string(act.kind) << "\n";
      for (Elem a = 0; a < w.semigroup.order(); ++a) {
        out << "  " << a << ": " << w.semigroup.name(a) << "\n";
      }
      out << "is_proper = " << tf(c.is_proper) << "\n"
          << "is_almost_perfect = " << tf(c.is_almost_perfect) << "\n"
          << "is_perfect = " << tf(c.is_perfect) << "\n";
      return exit_ok;
    }

    int cmd_cover(std::string const& spath, std::string const& tpath,
                  std::string const& mpath, std::string const& via, bool as_json,
                  std::ostream& out) {
      RSemigroup s;
      if (!load_valid(spath, s, out)) {
        return exit_false;
      }
      Monoid const t     = parse_monoid(read_file(tpath));
      Map const    alpha = parse_map(read_file(mpath));
      STRProduct   n;
      if (via == "cset") {
        CMonoid const c = c_monoid(s);
        n               = s_t_r(s, c.monoid, tau(s, c), t, alpha);
      } else {
        Adjoined const s1 = adjoin_identity(s);
        std::vector<Elem> embed(s.order());
        for (Elem a = 0; a < s.order(); ++a) {
          embed[a] = a;
        }
        n = s_t_r(s, s1.semigroup, embed, t, alpha);
      }
      if (as_json) {
        out << to_json(n.semigroup) << "\n";
      }
      ClassificationReport const c = classify(n.semigroup);
      std::ostream&              o = as_json ? std::cerr : out;
      o << "cover: " << n.semigroup.order() << " elements, alpha is a "
        << to_string(n.kind) << "\n"
        << "is_proper = " << tf(c.is_proper) << "\n"
        << "is_almost_perfect = " << tf(c.is_almost_perfect) << "\n";
      std::vector<bool> hit(s.order(), false);
      for (Elem x : n.first) {
        hit[x] = true;
      }
      bool const onto = std::ranges::all_of(hit, [](bool b) { return b; });
      o << "first projection onto S = " << tf(onto) << "\n";
      if (!c.is_almost_perfect) {
        return onto ? exit_ok : exit_false;
      }
      CoverReport const rep = verify_cover(n.semigroup, s, n.first);
      o << "omega: n -> (n beta, n sigma) is an isomorphism onto S_{T,C(S)} = "
        << tf(rep.ok) << (rep.failure.empty() ? "" : " (" + rep.failure + ")")
        << "\n";
      return rep.ok && onto ? exit_ok : exit_false;
    }

    int cmd_reconstruct(std::string const& path, bool as_json,
                        std::ostream& out) {
      RSemigroup s;
      if (!load_valid(path, s, out)) {
        return exit_false;
      }
      if (!classify(s).is_proper) {
        out << "not proper: no W-product representation\n";
        return exit_false;
      }
      Reconstruction const r = reconstruct(s);
      if (as_json) {
        out << to_json(r.action) << "\n";
        return r.ok ? exit_ok : exit_false;
      }
      out << "T = S/sigma: " << r.t.semigroup.order() << " elements\n"
          << "Y = P_S: " << names(s, r.y.element) << "\n"
          << "action kind: " << to_string(r.action.kind) << "\n";
      for (Elem u = 0; u < r.action.alpha.size(); ++u) {
        out << "  alpha(" << r.t.semigroup.name(u)
            << ") = " << iso_names(r.action.alpha[u], r.y, s) << "\n";
      }
      out << "s -> (s sigma, s*) is an isomorphism onto W(T,Y) = " << tf(r.ok)
          << "\n";
      return r.ok ? exit_ok : exit_false;
    }

    int cmd_verify(std::string const& suite, SuiteOptions const& opts,
                   bool as_json, std::ostream& out) {
      std::vector<int> const ids    = suite_criteria(suite);
      Corpus const           corpus = build_corpus(opts);
      bool                   all    = true;
      json                   report = json::array();
      for (int id : ids) {
        CriterionResult const r = run_criterion(id, corpus, opts);
        all                     = all && r.pass;
        if (as_json) {
          report.push_back({{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"checks", r.checks},
                            {"failure", r.failure},
                            {"notes", r.notes}});
          continue;
        }
        out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name
            << " (" << r.checks << " checks)";
        if (!r.pass) {
          out << ": " << r.failure;
        }
        out << "\n";
        for (std::string const& n : r.notes) {
          out << "    " << n << "\n";
        }
      }
      if (as_json) {
        out << json{{"suite", suite}, {"pass", all}, {"criteria", report}}.dump(2)
            << "\n";
      }
      return all ? exit_ok : exit_false;
    }

    int cmd_enumerate(std::string const& kind, std::size_t max, std::ostream& out) {
      if (kind == "semilattice") {
        for (Semilattice const& y : enumerate_semilattices(max)) {
          out << to_json(y) << "\n";
        }
      } else if (kind == "monoid") {
        for (Monoid const& t : enumerate_monoids(max)) {
          out << to_json(t) << "\n";
        }
      } else if (kind == "rsemigroup") {
        for (RSemigroup const& s : enumerate_restriction_semigroups(max)) {
          out << to_json(s) << "\n";
        }
      } else if (kind == "action") {
        if (max > 4) {
          throw ResourceError("enumerate: actions are limited to size 4");
        }
        for (Monoid const& t : enumerate_monoids(max)) {
          for (Semilattice const& y : enumerate_semilattices(max)) {
            for (ActionKind k :
                 {ActionKind::homomorphism, ActionKind::subhomomorphism}) {
              for (MonoidAction const& a : enumerate_actions(t, y, k)) {
                out << to_json(a) << "\n";
              }
            }
          }
        }
      } else {
        throw InputError("unknown kind " + kind);
      }
      return exit_ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Finite restriction semigroups: classification, Munn "
                 "representations, C(S), W-products and covers"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string file;
    auto* check = app.add_subcommand("check", "Check the restriction axioms");
    check->add_option("file", file)->required();

    auto* analyze = app.add_subcommand("analyze", "Classification report");
    analyze->add_option("file", file)->required();

    bool  ideal_isos = false;
    auto* munn       = app.add_subcommand("munn", "Munn representation");
    munn->add_option("file", file)->required();
    munn->add_flag("--ideal-isos", ideal_isos, "List T_Y and TI_Y of P_S");

    auto* cset = app.add_subcommand("cset", "The monoid C(S) of permissible sets");
    cset->add_option("file", file)->required();

    std::string action;
    auto*       wp = app.add_subcommand("w-product", "Build W(T,Y)");
    wp->add_option("--action", action)->required();

    std::string spath, tpath, mpath, via = "unit";
    auto*       cover = app.add_subcommand("cover", "Build S_{T,R}");
    cover->add_option("--semigroup", spath)->required();
    cover->add_option("--monoid", tpath)->required();
    cover->add_option("--map", mpath)->required();
    cover->add_option("--via", via)->check(CLI::IsMember({"unit", "cset"}));

    auto* rec = app.add_subcommand("reconstruct", "W-product representation");
    rec->add_option("file", file)->required();

    std::string  suite;
    SuiteOptions opts;
    auto*        verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"axioms", "munn", "cset", "wproduct", "covers",
                               "factorizable", "inverse", "perfection", "all"}));
    verify->add_option("--max-semilattice", opts.max_semilattice);
    verify->add_option("--max-monoid", opts.max_monoid);
    verify->add_option("--max-rsemigroup", opts.max_rsemigroup);
    verify->add_option("--max-congruence-order", opts.max_congruence_order);

    std::string kind;
    std::size_t max_size = 0;
    auto*       en = app.add_subcommand("enumerate", "Export an enumeration");
    en->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"semilattice", "monoid", "rsemigroup", "action"}));
    en->add_option("--max-size", max_size)->required();

    for (CLI::App* sub : app.get_subcommands({})) {
      sub->add_flag("--json", as_json, "Machine-readable output");
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_input;
    }

    try {
      if (*check) return cmd_check(file, out);
      if (*analyze) return cmd_analyze(file, as_json, out);
      if (*munn) return cmd_munn(file, ideal_isos, out);
      if (*cset) return cmd_cset(file, as_json, out);
      if (*wp) return cmd_w_product(action, as_json, out);
      if (*cover) return cmd_cover(spath, tpath, mpath, via, as_json, out);
      if (*rec) return cmd_reconstruct(file, as_json, out);
      if (*verify) return cmd_verify(suite, opts, as_json, out);
      return cmd_enumerate(kind, max_size, out);
    } catch (InputError const& e) {
      err << "input error: " << e.what() << "\n";
      return exit_input;
    } catch (ResourceError const& e) {
      err << "resource bound: " << e.what() << "\n";
      return exit_resource;
    } catch (PreconditionError const& e) {
      err << "hypothesis not met: " << e.what() << "\n";
      return exit_false;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << "\n";
      return exit_false;
    }
  }

}  // namespace rsg::cli
