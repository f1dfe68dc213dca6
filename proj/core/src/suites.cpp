#include "rsg/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "rsg/classification.hpp"
#include "rsg/congruence.hpp"
#include "rsg/cset.hpp"
#include "rsg/errors.hpp"
#include "rsg/factorize.hpp"
#include "rsg/isomorphism.hpp"
#include "rsg/munn.hpp"

namespace rsg {

  namespace {

    class Checker {
     public:
      explicit Checker(CriterionResult& r) : r_(r) {}

      void operator()(bool ok, std::string const& where, char const* what) {
        ++r_.checks;
        if (!ok && r_.pass) {
          r_.pass    = false;
          r_.failure = where + ": " + what;
        }
      }

      template <typename F>
      void guard(std::string const& where, F&& f) {
        try {
          f();
        } catch (Error const& e) {
          (*this)(false, where, e.what());
        }
      }

      void note(std::string s) { r_.notes.push_back(std::move(s)); }

     private:
      CriterionResult& r_;
    };

    Map identity_map(std::size_t n) {
      Map m(n);
      for (Elem a = 0; a < n; ++a) {
        m[a] = a;
      }
      return m;
    }

    bool onto(Map const& m, std::size_t n) {
      std::vector<bool> hit(n, false);
      for (Elem x : m) {
        hit[x] = true;
      }
      return std::ranges::all_of(hit, [](bool b) { return b; });
    }

    std::vector<Elem> sorted_unique(std::vector<Elem> v) {
      std::ranges::sort(v);
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    bool trivial_units(RSemigroup const& m) {
      Elem const  one   = *m.identity();
      std::size_t units = 0;
      for (Elem a = 0; a < m.order(); ++a) {
        for (Elem b = 0; b < m.order(); ++b) {
          if (m.mul(a, b) == one && m.mul(b, a) == one) {
            ++units;
            break;
          }
        }
      }
      return units == 1;
    }

    RSemigroup const* find_named(Corpus const& c, std::string const& name) {
      for (NamedExample const& e : c.named) {
        if (e.name == name) {
          return &e.semigroup;
        }
      }
      return nullptr;
    }

    std::vector<NamedExample> proper_instances(Corpus const& c) {
      std::vector<NamedExample> out;
      for (NamedExample& e : c.all()) {
        if (classify(e.semigroup).is_proper) {
          out.push_back(std::move(e));
        }
      }
      return out;
    }

    // Criterion 1.
    void axioms_suite(Corpus const& c, SuiteOptions const& opts, Checker& ck) {
      std::size_t cross = 0;
      for (NamedExample const& inst : c.all()) {
        RSemigroup const& s = inst.semigroup;
        ck.guard(inst.name, [&] {
          ck(static_cast<bool>(check_axioms(s)), inst.name, "axioms fail");
          for (Elem x = 0; x < s.order(); ++x) {
            for (Elem y = 0; y < s.order(); ++y) {
              Elem const xy = s.mul(x, y);
              ck(natural_leq(s, s.plus(xy), s.plus(x))
                     && s.plus(xy) == s.plus(s.mul(x, s.plus(y)))
                     && natural_leq(s, s.star(xy), s.star(y))
                     && s.star(xy) == s.star(s.mul(s.star(x), y)),
                 inst.name, "basic lemma identity fails");
            }
          }
          Congruence const sg = sigma(s);
          Congruence const mu_s = mu(s);
          Quotient const   q  = quotient(s, sg.partition());
          ck(projections(q.semigroup).size() == 1, inst.name,
             "S/sigma has more than one projection");
          ck(identifies_projections(s, sg.partition()), inst.name,
             "sigma separates two projections");
          ck(separates_projections(s, mu_s.partition()), inst.name,
             "mu identifies two projections");
          ck(mu_s.partition().subset_of(green(s, Green::H)), inst.name,
             "mu is not inside H");
          for (Elem a = 0; a < s.order(); ++a) {
            down_set(s, a).for_each([&](Elem b) {
              ck(sg.same(a, b), inst.name,
                 "a principal order ideal meets two sigma-classes");
            });
          }
          if (s.order() <= opts.max_congruence_order) {
            ++cross;
            for (Partition const& rho : congruences(s)) {
              if (identifies_projections(s, rho)) {
                ck(sg.partition().subset_of(rho), inst.name,
                   "sigma is not the least congruence with one projection");
              }
              if (separates_projections(s, rho)) {
                ck(rho.subset_of(mu_s.partition()), inst.name,
                   "a P-separating congruence is not inside mu");
              }
            }
          }
          if (classify(s).is_proper) {
            ck(sg.partition().meet(mu_s.partition()).is_identity(), inst.name,
               "proper but sigma n mu is not trivial");
          }
        });
      }
      ck.note(std::to_string(c.all().size()) + " instances, "
              + std::to_string(cross) + " with full congruence enumeration");
    }

    // Criterion 2.
    void sigma_suite(SuiteOptions const& opts, Checker& ck) {
      std::size_t count = 0;
      for (Semilattice const& y : enumerate_semilattices(opts.max_semilattice)) {
        std::string const where = "Y of order " + std::to_string(y.order()) + " #"
                                  + std::to_string(count++);
        ck.guard(where, [&] {
          SigmaReport const rep = verify_sigma_iso(y);
          ck(rep.ok && rep.c_size == rep.ti_size, where,
             rep.failure.empty() ? "sizes differ" : rep.failure.c_str());
        });
      }
      SigmaReport const c2 = verify_sigma_iso(chain(2));
      SigmaReport const v  = verify_sigma_iso(v3());
      ck(c2.c_size == 2 && c2.ti_size == 2, "2-chain", "|C(T_Y)| or |TI_Y| != 2");
      ck(v.c_size == 7 && v.ti_size == 7, "V3", "|C(T_Y)| or |TI_Y| != 7");
      ck(munn_semigroup(chain(2)).catalog.size() == 2, "2-chain", "|T_Y| != 2");
      ck(munn_semigroup(v3()).catalog.size() == 5, "V3", "|T_Y| != 5");
      ck.note(std::to_string(count) + " semilattices");
    }

    // Criterion 3.
    void w_suite(Corpus const& c, Checker& ck) {
      for (std::size_t i = 0; i < c.homomorphic.size(); ++i) {
        MonoidAction const& act  = c.homomorphic[i];
        std::string const&  name = c.w_homomorphic[i].name;
        ck.guard(name, [&] {
          WProduct const    w = w_product(act);
          RSemigroup const& s = w.semigroup;
          Semilattice const& y = act.semilattice;
          ck(static_cast<bool>(check_axioms(s)), name, "axioms fail");
          ClassificationReport const cl = classify(s);
          ck(cl.is_almost_perfect, name, "not almost perfect");
          ProjectionSemilattice const p = projection_semilattice(s);
          ck(isomorphic(as_rsemigroup(p.lattice), as_rsemigroup(y)), name,
             "P_W is not isomorphic to Y");
          Quotient const q = quotient(s, sigma(s).partition());
          ck(isomorphic(q.semigroup, act.monoid.as_reduced()), name,
             "W/sigma is not isomorphic to T");
          ck(pi_iso(act).ok, name, "Pi is not an isomorphism");
          Partition const r = green(s, Green::R);
          Partition const l = green(s, Green::L);
          Congruence const sg = sigma(s);
          Elem const       one = act.monoid.identity();
          for (Elem a = 0; a < s.order(); ++a) {
            auto const [t, f] = w.catalog[a];
            Elem const e      = act.alpha[t].inverse()(f);
            ck(s.plus(a) == w.index_of(one, e) && s.star(a) == w.index_of(one, f),
               name, "(t,f)+ or (t,f)* differs from the closed form");
            for (Elem b = 0; b < s.order(); ++b) {
              auto const [u, h] = w.catalog[b];
              Elem const e2     = act.alpha[u].inverse()(h);
              ck(r.same(a, b) == (e == e2), name, "R differs from closed form");
              ck(l.same(a, b) == (f == h), name, "L differs from closed form");
              ck(sg.same(a, b) == (t == u), name,
                 "sigma differs from closed form");
              ck(natural_leq(s, a, b) == (t == u && y.leq(f, h)), name,
                 "natural order differs from closed form");
            }
          }
          bool principal = y.top().has_value();
          for (Elem t = 0; t < act.monoid.order(); ++t) {
            principal = principal && y.maximum(act.dom(t)).has_value()
                        && y.maximum(act.ran(t)).has_value();
          }
          ck(cl.is_perfect == principal, name,
             "perfection differs from the principal-domain criterion");
        });
      }
      ck.note(std::to_string(c.homomorphic.size()) + " homomorphic actions");
    }

    // Criterion 4.
    void round_trip_suite(Corpus const& c, SuiteOptions const& opts,
                          Checker& ck) {
      for (std::size_t i = 0; i < c.homomorphic.size(); ++i) {
        std::string const& name = c.w_homomorphic[i].name;
        ck.guard(name, [&] {
          WProduct const       w = w_product(c.homomorphic[i]);
          Reconstruction const r = reconstruct(w.semigroup);
          ck(r.ok, name, "s -> (s sigma, s*) is not an isomorphism");
          ck(r.action.kind == ActionKind::homomorphism, name,
             "recovered action is not a homomorphism");
          ck(round_trip_equivalent(c.homomorphic[i], w, r), name,
             "recovered action is not equivalent");
        });
      }
      std::size_t found = 0;
      for (NamedExample const& e : c.enumerated) {
        if (e.semigroup.order() > opts.max_rsemigroup
            || !classify(e.semigroup).is_almost_perfect) {
          continue;
        }
        ++found;
        ck.guard(e.name, [&] {
          Reconstruction const r = reconstruct(e.semigroup);
          ck(r.ok, e.name, "s -> (s sigma, s*) is not an isomorphism");
          ck(isomorphic(r.w.semigroup, e.semigroup), e.name,
             "W of the recovered action is not isomorphic to S");
        });
      }
      ck.note(std::to_string(c.homomorphic.size()) + " W-products, "
              + std::to_string(found) + " enumerated almost perfect instances");
    }

    // Criterion 5.
    void cover_suite(Corpus const& c, SuiteOptions const& opts, Checker& ck) {
      std::vector<NamedExample> base = c.named;
      base.insert(base.end(), c.enumerated.begin(), c.enumerated.end());
      std::size_t t_covers = 0, omega = 0, rrep = 0;
      for (NamedExample const& e : base) {
        RSemigroup const& s = e.semigroup;
        ck.guard(e.name, [&] {
          STRProduct const n = t_proper_cover(s);
          ++t_covers;
          ck(onto(n.first, s.order()) && onto(n.second, n.t.order()), e.name,
             "S_T is not a subdirect product of S and T");
          CMonoid const cn = c_monoid(n.semigroup);
          Kappa const   k  = kappa(n.semigroup, cn);
          ck(k.is_homomorphism
                 && is_T_proper(cn.monoid, sorted_unique(k.image)),
             e.name, "S_T is not almost T-proper");
          CoverReport const rep = verify_cover(n.semigroup, s, n.first);
          ++omega;
          ck(rep.ok && rep.onto && rep.below_image, e.name,
             rep.failure.empty() ? "first projection is not a cover"
                                 : rep.failure.c_str());
          if (s.is_monoid()) {
            ck(classify(n.semigroup).is_perfect, e.name,
               "S_T over a monoid is not perfect");
          }
          Adjoined const s1 = adjoin_identity(s);
          StToW const    sw = st_to_w(s, Monoid::of(s1.semigroup),
                                      identity_map(s1.semigroup.order()));
          ck(sw.ok, e.name, "S_T -> W(T, P_S) maps are not inverse isomorphisms");
          ClassificationReport const cl = classify(s);
          if (!cl.is_almost_perfect) {
            return;
          }
          CoverReport const self = verify_cover(s, s, identity_map(s.order()));
          ++omega;
          ck(self.ok && self.target.semigroup.order() == s.order(), e.name,
             "S is not S_{T,C(S)} through the identity");
          STRProduct const  sc  = special_cover(s);
          CoverReport const scr = verify_cover(sc.semigroup, s, sc.first);
          ++omega;
          ck(scr.ok && scr.onto, e.name, "special cover is not a cover");
          RRepReport const rr = r_rep(s);
          ++rrep;
          ck(rr.ok, e.name,
             rr.cover.failure.empty() ? "S is not F_{T,C(F)}"
                                      : rr.cover.failure.c_str());
        });
      }
      for (std::string const name : {"B", "2-chain"}) {
        RSemigroup const* s = find_named(c, name);
        if (!s) {
          continue;
        }
        ck.guard(name, [&] {
          for (STRProduct const& p : cover_catalog(*s, opts.max_monoid)) {
            CoverReport const rep = verify_cover(p.semigroup, *s, p.first);
            ++omega;
            ck(rep.ok, name, "catalogued cover fails omega");
          }
        });
      }
      if (RSemigroup const* w = find_named(c, "W(C2,V3)")) {
        ck(r_rep(*w).f.semigroup.order() == 5, "W(C2,V3)", "|S/mu| != 5");
      }
      if (RSemigroup const* b = find_named(c, "B")) {
        STRProduct const n = t_proper_cover(*b);
        ck(n.semigroup.order() == 3 && classify(n.semigroup).is_perfect, "B",
           "S_T over B is not a perfect 3-element monoid");
      }
      ck.note(std::to_string(t_covers) + " S_T covers, " + std::to_string(omega)
              + " omega maps, " + std::to_string(rrep) + " R-representations");
    }

    // Criterion 6.
    void boundary_suite(Corpus const& c, Checker& ck) {
      for (std::size_t i = 0; i < c.subhomomorphic.size(); ++i) {
        std::string const& name = c.w_subhomomorphic[i].name;
        ck.guard(name, [&] {
          WProduct const w = w_product(c.subhomomorphic[i]);
          ClassificationReport const cl = classify(w.semigroup);
          ck(cl.is_proper, name, "W is not proper");
          ck(!cl.is_almost_perfect, name, "W is almost perfect");
          KappaThetaBar const ktb =
              kappa_theta_bar(w.semigroup, c_monoid(w.semigroup));
          ck(!ktb.is_homomorphism, name, "kappa theta-bar is a homomorphism");
          Reconstruction const r = reconstruct(w.semigroup);
          ck(r.ok && r.action.kind == ActionKind::subhomomorphism, name,
             "reconstruction fails for the sub-action");
          ck(round_trip_equivalent(c.subhomomorphic[i], w, r), name,
             "recovered sub-action is not equivalent");
        });
      }
      std::size_t proper = 0;
      for (NamedExample const& e : proper_instances(c)) {
        ++proper;
        ck.guard(e.name, [&] {
          KappaThetaBar const ktb =
              kappa_theta_bar(e.semigroup, c_monoid(e.semigroup));
          ck(ktb.is_homomorphism == classify(e.semigroup).is_almost_perfect,
             e.name, "kappa theta-bar kind disagrees with almost perfection");
        });
      }
      if (RSemigroup const* s = find_named(c, "W(C2,2-chain,sub)")) {
        ClassificationReport const cl = classify(*s);
        ck(s->order() == 3 && cl.is_monoid && cl.is_F_restriction
               && cl.is_proper && !cl.is_almost_perfect,
           "W(C2,2-chain,sub)",
           "not a 3-element proper F-restriction monoid that fails almost "
           "perfection");
      }
      ck.note(std::to_string(c.subhomomorphic.size())
              + " strict sub-actions, " + std::to_string(proper)
              + " proper instances");
    }

    // Criterion 7.
    void factorizable_suite(Corpus const& c, Checker& ck) {
      std::size_t count = 0;
      for (NamedExample const& e : proper_instances(c)) {
        ++count;
        ck.guard(e.name, [&] {
          CMonoid const        cs   = c_monoid(e.semigroup);
          ActionType const     kind = action_kind(reconstruct(e.semigroup).action);
          for (Side side : {Side::left, Side::right, Side::two}) {
            bool const def = is_almost_factorizable(e.semigroup, side);
            bool const tp  = is_T_proper(
                cs.monoid, corner_class(cs.monoid, corner_of(side)));
            bool const act = action_matches(kind, side);
            ck(def == tp && tp == act, e.name + " (" + to_string(side) + ")",
               "definition, C(S) corner properness and action kind disagree");
          }
        });
      }
      if (RSemigroup const* w = find_named(c, "W(C2,V3)")) {
        ck(is_almost_factorizable(*w, Side::two), "W(C2,V3)",
           "not almost factorizable");
      }
      if (RSemigroup const* w = find_named(c, "W(C2,2-chain,sub)")) {
        ck(!is_almost_factorizable(*w, Side::left), "W(C2,2-chain,sub)",
           "almost left factorizable");
      }
      if (RSemigroup const* y = find_named(c, "2-chain")) {
        ck(is_almost_factorizable(*y, Side::left), "2-chain",
           "not almost left factorizable");
      }
      ck.note(std::to_string(count) + " proper instances x 3 sides");
    }

    // Criterion 8.
    void inverse_suite(Corpus const& c, Checker& ck) {
      std::vector<RSemigroup> corpus;
      for (NamedExample const& e : c.all()) {
        corpus.push_back(e.semigroup);
      }
      std::vector<MonoidAction> groups;
      for (auto const* list : {&c.homomorphic, &c.subhomomorphic}) {
        for (MonoidAction const& a : *list) {
          if (a.monoid.is_group()) {
            groups.push_back(a);
          }
        }
      }
      ck.guard("inverse specialization", [&] {
        InverseSpecializationReport const rep =
            check_inverse_specialization(corpus, groups);
        ck(rep.ok, "inverse specialization", rep.failure.c_str());
        ck(rep.decomposed > 0 && rep.prehomomorphic > 0,
           "inverse specialization", "nothing was decomposed or checked");
        ck.note(std::to_string(rep.decomposed) + " decomposed, "
                + std::to_string(rep.exempt) + " exempt, "
                + std::to_string(rep.prehomomorphic)
                + " prehomomorphic W over groups");
      });
      if (RSemigroup const* w = find_named(c, "W(C2,V3)")) {
        ck.guard("W(C2,V3)", [&] {
          ck(decompose_semidirect(*w).has_value(), "W(C2,V3)",
             "does not decompose as V3 x| C2");
        });
      }
      if (RSemigroup const* i = find_named(c, "I2")) {
        ck(!classify(*i).is_proper && !decompose_semidirect(*i), "I2",
           "I2 is not exempt");
      }
    }

    // Criterion 9.
    void perfection_suite(Corpus const& c, Checker& ck) {
      std::size_t monoids = 0, proper = 0, adjoined = 0;
      for (NamedExample const& e : c.all()) {
        RSemigroup const&          s  = e.semigroup;
        ClassificationReport const cl = classify(s);
        ck.guard(e.name, [&] {
          if (cl.is_monoid && cl.is_proper) {
            ++monoids;
            ck(find_T_proper(s).has_value() == cl.is_perfect, e.name,
               "T-proper for some T differs from perfect");
          }
          ck(!cl.is_perfect || cl.is_almost_perfect, e.name,
             "perfect but not almost perfect");
          if (!cl.is_proper) {
            return;
          }
          ++proper;
          ck(find_T_proper(c_monoid(s).monoid).has_value()
                 == cl.is_almost_perfect,
             e.name, "almost T-proper for some T differs from almost perfect");
          if (!cl.is_monoid) {
            ++adjoined;
            RSemigroup const s1 = adjoin_identity(s).semigroup;
            bool const       ap1 = classify(s1).is_almost_perfect;
            ck(!ap1 || cl.is_almost_perfect, e.name,
               "S^1 almost perfect but S is not");
            Quotient const q = quotient(s, sigma(s).partition());
            if (cl.is_almost_perfect && q.semigroup.is_monoid()
                && trivial_units(q.semigroup)) {
              ck(ap1, e.name,
                 "S almost perfect, S/sigma without units, S^1 not almost "
                 "perfect");
            }
          }
        });
      }
      if (RSemigroup const* w = find_named(c, "W({1,x},V3)^1")) {
        ClassificationReport const cl = classify(*w);
        ck(cl.is_monoid && cl.is_almost_perfect && !cl.is_perfect,
           "W({1,x},V3)^1", "not an almost perfect, non-perfect monoid");
      }
      if (RSemigroup const* w = find_named(c, "W(C2,V3)^1")) {
        ClassificationReport const cl = classify(*w);
        ck(cl.is_proper && !cl.is_almost_perfect, "W(C2,V3)^1",
           "expected proper and not almost perfect");
      }
      ck.note(std::to_string(monoids) + " proper monoids, "
              + std::to_string(proper) + " proper instances, "
              + std::to_string(adjoined) + " identity adjunctions");
    }

    void cset_suite(Corpus const& c, Checker& ck) {
      for (NamedExample const& e : c.all()) {
        RSemigroup const& s = e.semigroup;
        ck.guard(e.name, [&] {
          CMonoid const              cs = c_monoid(s);
          ClassificationReport const cl = classify(s);
          ck(static_cast<bool>(check_axioms(cs.monoid)), e.name,
             "C(S) fails the axioms");
          ck(classify(cs.monoid).is_proper == cl.is_proper, e.name,
             "C(S) proper differs from S proper");
          Map const t = tau(s, cs);
          ck(is_homomorphism(s, cs.monoid, t)
                 && sorted_unique(t).size() == s.order(),
             e.name, "tau is not an embedding");
          ck(isomorphic(quotient(cs.monoid, sigma(cs.monoid).partition()).semigroup,
                        adjoin_identity(quotient(s, sigma(s).partition())
                                            .semigroup)
                            .semigroup),
             e.name, "C(S)/sigma differs from (S/sigma)^1");
          if (!cl.is_proper) {
            return;
          }
          std::size_t expected = 0;
          for (auto const& block : sigma(s).partition().blocks()) {
            std::size_t const k = block.size();
            for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
              ElemSet a;
              for (std::size_t i = 0; i < k; ++i) {
                if ((bits >> i) & 1U) {
                  a.insert(block[i]);
                }
              }
              bool ideal = true;
              a.for_each([&](Elem x) { ideal = ideal && down_set(s, x).subset_of(a); });
              expected += ideal ? 1 : 0;
            }
          }
          ck(cs.catalog.size() == expected, e.name,
             "|C(S)| differs from the ideals-per-class count");
        });
      }
      if (RSemigroup const* w = find_named(c, "W(C2,V3)")) {
        ck(c_monoid(*w).catalog.size() == 8, "W(C2,V3)", "|C(S)| != 8");
      }
      if (RSemigroup const* y = find_named(c, "2-chain")) {
        ck(c_monoid(*y).catalog.size() == 2, "2-chain", "|C(S)| != 2");
      }
    }

    std::string action_name(MonoidAction const& a, std::size_t ti, std::size_t yi,
                            std::size_t k) {
      return "W(T" + std::to_string(a.monoid.order()) + "#" + std::to_string(ti)
             + ",Y" + std::to_string(a.semilattice.order()) + "#"
             + std::to_string(yi) + "," + to_string(a.kind).substr(0, 3) + "#"
             + std::to_string(k) + ")";
    }

  }  // namespace

  std::vector<NamedExample> Corpus::all() const {
    std::vector<NamedExample> out = enumerated;
    for (auto const* list : {&named, &w_homomorphic, &w_subhomomorphic}) {
      out.insert(out.end(), list->begin(), list->end());
    }
    return out;
  }

  Corpus build_corpus(SuiteOptions const& opts) {
    Corpus c;
    for (std::size_t n = 1; n <= opts.max_rsemigroup; ++n) {
      std::size_t k = 0;
      for (RSemigroup& s : rsemigroups_of_order(n)) {
        c.enumerated.push_back(
            {"rs" + std::to_string(n) + "#" + std::to_string(k++), std::move(s)});
      }
    }
    c.named = named_examples();
    std::vector<Monoid> const      ts = enumerate_monoids(opts.max_monoid);
    // actions are enumerated over |Y| <= 4 only
    std::vector<Semilattice> const ys =
        enumerate_semilattices(std::min<std::size_t>(opts.max_semilattice, 4));
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        for (ActionKind kind :
             {ActionKind::homomorphism, ActionKind::subhomomorphism}) {
          auto&       acts = kind == ActionKind::homomorphism ? c.homomorphic
                                                              : c.subhomomorphic;
          auto&       ws   = kind == ActionKind::homomorphism ? c.w_homomorphic
                                                              : c.w_subhomomorphic;
          std::size_t k    = 0;
          for (MonoidAction& a : enumerate_actions(ts[ti], ys[yi], kind)) {
            ws.push_back({action_name(a, ti, yi, k++), w_product(a).semigroup});
            acts.push_back(std::move(a));
          }
        }
      }
    }
    return c;
  }

  std::string criterion_name(int id) {
    switch (id) {
      case 1: return "axioms and basic lemma";
      case 2: return "Sigma: C(T_Y) ~ TI_Y";
      case 3: return "W-product theorem";
      case 4: return "converse and round trip";
      case 5: return "covers";
      case 6: return "sub-action boundary";
      case 7: return "factorizability";
      case 8: return "inverse specialization";
      case 9: return "perfection ladder";
      case cset_suite_id: return "C(S) structure";
      default: break;
    }
    throw InputError("unknown criterion " + std::to_string(id));
  }

  CriterionResult run_criterion(int                 id,
                                Corpus const&       c,
                                SuiteOptions const& opts) {
    CriterionResult r;
    r.id   = id;
    r.name = criterion_name(id);
    Checker    ck(r);
    auto const start = std::chrono::steady_clock::now();
    ck.guard("criterion " + std::to_string(id), [&] {
      switch (id) {
        case 1: axioms_suite(c, opts, ck); break;
        case 2: sigma_suite(opts, ck); break;
        case 3: w_suite(c, ck); break;
        case 4: round_trip_suite(c, opts, ck); break;
        case 5: cover_suite(c, opts, ck); break;
        case 6: boundary_suite(c, ck); break;
        case 7: factorizable_suite(c, ck); break;
        case 8: inverse_suite(c, ck); break;
        case 9: perfection_suite(c, ck); break;
        default: cset_suite(c, ck); break;
      }
    });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                              - start)
                    .count();
    return r;
  }

  std::vector<int> suite_criteria(std::string const& suite) {
    if (suite == "axioms") return {1};
    if (suite == "munn") return {2};
    if (suite == "cset") return {cset_suite_id};
    if (suite == "wproduct") return {3, 4, 6};
    if (suite == "covers") return {5};
    if (suite == "factorizable") return {7};
    if (suite == "inverse") return {8};
    if (suite == "perfection") return {9};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, cset_suite_id};
    throw InputError("unknown suite " + suite);
  }

}  // namespace rsg
