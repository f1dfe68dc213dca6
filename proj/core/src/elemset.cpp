#include "rsg/elemset.hpp"

#include <sstream>

#include "rsg/errors.hpp"

namespace rsg {

  ElemSet::ElemSet(std::initializer_list<Elem> elems) {
    for (Elem a : elems) {
      if (a >= capacity) {
        throw InputError("element index " + std::to_string(a)
                         + " exceeds the 64-element set capacity");
      }
      insert(a);
    }
  }

  ElemSet ElemSet::from(std::vector<Elem> const& elems) {
    ElemSet result;
    for (Elem a : elems) {
      if (a >= capacity) {
        throw InputError("element index " + std::to_string(a)
                         + " exceeds the 64-element set capacity");
      }
      result.insert(a);
    }
    return result;
  }

  Elem ElemSet::first() const {
    return bits_ == 0 ? npos : static_cast<Elem>(std::countr_zero(bits_));
  }

  std::vector<Elem> ElemSet::members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for_each([&out](Elem a) { out.push_back(a); });
    return out;
  }

  std::string ElemSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for_each([&](Elem a) {
      os << (first_member ? "" : ",") << a;
      first_member = false;
    });
    os << '}';
    return os.str();
  }

}  // namespace rsg
