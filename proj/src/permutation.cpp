#include "rue/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "rue/errors.hpp"

namespace rue {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidPermutation("image sequence is not a bijection on 0.." +
                               std::to_string(images_.size() ? images_.size() - 1 : 0));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = rhs.images_[images_[i]];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<Point>(i);
  }
  return out;
}

std::size_t Permutation::order() const {
  // lcm of cycle lengths.
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::power(long long k) const {
  std::size_t n = order();
  long long e = k % static_cast<long long>(n);
  if (e < 0) e += static_cast<long long>(n);
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Permutation::Point v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.apply(static_cast<Permutation::Point>(i)) == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (Permutation::Point j = static_cast<Permutation::Point>(i); !seen[j]; j = p.apply(j)) {
      seen[j] = true;
      if (!first) out << ' ';
      out << static_cast<int>(j);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<Permutation::Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Permutation::Point>(i);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidPermutation("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<Permutation::Point> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidPermutation("expected point in cycle notation: " + text);
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      unsigned long v = std::stoul(text.substr(start, pos - start));
      if (v >= degree)
        throw InvalidPermutation("point " + std::to_string(v) + " out of range for degree " +
                                 std::to_string(degree));
      if (used[v])
        throw InvalidPermutation("point " + std::to_string(v) + " repeated in cycle notation");
      used[v] = true;
      cyc.push_back(static_cast<Permutation::Point>(v));
      skip_ws();
    }
    if (pos >= text.size()) throw InvalidPermutation("unterminated cycle in: " + text);
    ++pos;  // ')'
    saw_cycle = true;
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) im[cyc[i]] = cyc[i + 1];
    if (cyc.size() >= 2) im[cyc.back()] = cyc.front();
    skip_ws();
  }
  if (!saw_cycle) throw InvalidPermutation("empty generator line");
  return Permutation(std::move(im));
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> parts;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (Permutation::Point j = static_cast<Permutation::Point>(i); !seen[j]; j = p.apply(j)) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace rue
