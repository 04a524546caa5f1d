#include "rue/group_io.hpp"

#include <fstream>
#include <sstream>

#include "rue/errors.hpp"

namespace rue {

GroupFile parse_group_stream(std::istream& in, const std::string& name) {
  GroupFile out;
  std::string line;
  std::size_t lineno = 0;
  bool have_degree = false;

  auto context = [&](const std::string& msg) {
    return name + ":" + std::to_string(lineno) + ": " + msg;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::string body = line.substr(start);
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ' || body.back() == '\t'))
      body.pop_back();

    if (!have_degree) {
      std::istringstream head(body);
      std::string keyword;
      long n = 0;
      head >> keyword >> n;
      if (keyword != "degree" || head.fail() || n < 1) {
        throw ParseError(context("expected 'degree <n>' with n >= 1, got '" + body + "'"));
      }
      std::string rest;
      if (head >> rest) throw ParseError(context("trailing text after degree"));
      out.degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      out.generators.push_back(parse_cycles(body, out.degree));
    } catch (const InvalidPermutation& e) {
      throw ParseError(context(e.what()));
    }
  }
  if (!have_degree) throw ParseError(name + ":1: missing 'degree <n>' header");
  return out;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_group_stream(in, path);
}

}  // namespace rue
