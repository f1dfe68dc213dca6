#ifndef RSG_SUITES_HPP
#define RSG_SUITES_HPP

#include <string>
#include <vector>

#include "rsg/construct.hpp"
#include "rsg/corpus.hpp"

namespace rsg {

  struct SuiteOptions {
    std::size_t max_semilattice      = 6;
    std::size_t max_monoid           = 3;
    std::size_t max_rsemigroup       = 3;
    std::size_t max_congruence_order = 5;
  };

  struct Corpus {
    std::vector<NamedExample> enumerated;  // restriction semigroups
    std::vector<NamedExample> named;
    std::vector<MonoidAction> homomorphic;
    std::vector<MonoidAction> subhomomorphic;
    std::vector<NamedExample> w_homomorphic;  // W of each action, same order
    std::vector<NamedExample> w_subhomomorphic;

    // enumerated, named, then both W lists.
    std::vector<NamedExample> all() const;
  };
  Corpus build_corpus(SuiteOptions const& opts);

  struct CriterionResult {
    int         id = 0;
    std::string name;
    bool        pass    = true;
    std::size_t checks  = 0;
    std::string failure;  // first failed check
    std::vector<std::string> notes;
    double      seconds = 0;
  };

  // 1..9 are the numbered criteria; 10 is the C(S) suite.
  inline constexpr int cset_suite_id = 10;
  CriterionResult run_criterion(int id, Corpus const& c, SuiteOptions const& opts);
  std::string     criterion_name(int id);

  // axioms, munn, cset, wproduct, covers, factorizable, inverse, perfection,
  // all. InputError for other names.
  std::vector<int> suite_criteria(std::string const& suite);

}  // namespace rsg

#endif  // RSG_SUITES_HPP
