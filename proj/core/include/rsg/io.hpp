#ifndef RSG_IO_HPP
#define RSG_IO_HPP

#include <string>

#include "rsg/construct.hpp"
#include "rsg/lattice.hpp"
#include "rsg/rsemigroup.hpp"

namespace rsg {

  // JSON documents, one object each, all indices 0-based:
  //   {"kind":"restriction_semigroup","order":n,"mul":[[..]],"plus":[..],
  //    "star":[..],"labels":[..]?}
  //   {"kind":"semilattice","order":n,"meet":[[..]]}
  //   {"kind":"monoid","order":n,"mul":[[..]],"identity":i,"labels":[..]?}
  //   {"kind":"action","monoid":{..},"semilattice":{..},
  //    "alpha":[{"t":i,"map":[[x,y],..]}],"declared":"homomorphism"?}
  //   {"kind":"map","map":[..]}
  // Every parse failure, including a structure that fails validation, is an
  // InputError.

  std::string read_file(std::string const& path);
  // The "kind" field of a document.
  std::string document_kind(std::string const& text);

  // Also accepts a semilattice (a+ = a* = a) or a monoid (reduced).
  RSemigroup   parse_rsemigroup(std::string const& text);
  Semilattice  parse_semilattice(std::string const& text);
  Monoid       parse_monoid(std::string const& text);
  MonoidAction parse_action(std::string const& text);
  // A map document or a bare array.
  Map          parse_map(std::string const& text);

  std::string to_json(RSemigroup const& s);
  std::string to_json(Semilattice const& y);
  std::string to_json(Monoid const& t);
  std::string to_json(MonoidAction const& act);
  std::string map_to_json(Map const& m);

}  // namespace rsg

#endif  // RSG_IO_HPP
