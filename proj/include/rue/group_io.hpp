#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rue/group.hpp"

namespace rue {

// Text format for permutation groups:
//   line 1:            degree <n>
//   following lines:   one generator each, in disjoint-cycle notation over
//                      0-based points, e.g. "(0 1 2)(3 4)"; "()" is the
//                      identity. Blank lines and lines starting with # are
//                      ignored.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Parses the format above. Throws ParseError with "<name>:<line>: ..." context.
GroupFile parse_group_stream(std::istream& in, const std::string& name);
GroupFile read_group_file(const std::string& path);

}  // namespace rue
