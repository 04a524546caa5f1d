#pragma once

#include <cstddef>
#include <vector>

#include "rue/group.hpp"

namespace rue {

struct ConjClass {
  std::size_t representative = 0;    // minimal member index
  std::vector<std::size_t> members;  // sorted ascending
};

// The partition of a group into conjugacy classes.
//
// Classes are sorted by (element order of representative, class size, minimal
// member index); the identity class is therefore always class 0. class_of maps
// each element index to its class index. Power classes are resolved on demand
// and are consistent with element exponentiation for every integer k.
class ConjClassSet {
 public:
  ConjClassSet(const GroupTable& g, std::vector<ConjClass> classes);

  std::size_t count() const { return classes_.size(); }
  const ConjClass& cls(std::size_t c) const { return classes_[c]; }
  const std::vector<ConjClass>& all() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }

  // Class of g^k for g the representative of class c (well defined: power maps
  // send classes to classes).
  std::size_t power_class(std::size_t c, long long k) const;

 private:
  const GroupTable* group_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
};

ConjClassSet conjugacy_classes(const GroupTable& g);

}  // namespace rue
