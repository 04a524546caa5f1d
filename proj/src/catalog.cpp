#include "rue/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <set>

#include "rue/errors.hpp"
#include "rue/fq.hpp"
#include "rue/gamma.hpp"
#include "rue/group_io.hpp"

namespace rue {

std::size_t enumeration_bound() {
  const char* env = std::getenv("RUE_MAX_ELEMENTS");
  if (env != nullptr) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultEnumerationBound;
}

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Permutation::Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Permutation::Point>(i);
  for (std::size_t i = 0; i < length; ++i) {
    img[first + i] = static_cast<Permutation::Point>(first + (i + 1) % length);
  }
  return Permutation(std::move(img));
}

GroupTable cyclic_group(std::size_t n, std::size_t bound) {
  if (n == 0) throw ParseError("cyclic order must be >= 1");
  if (n == 1) return GroupTable::from_generators(1, {}, bound);
  return GroupTable::from_generators(n, {cycle_on(n, 0, n)}, bound);
}

GroupTable dihedral_group(std::size_t n, std::size_t bound) {
  if (n < 6 || n % 2 != 0) throw ParseError("dihedral order must be even and >= 6");
  std::size_t m = n / 2;
  std::vector<Permutation::Point> flip(m);
  for (std::size_t i = 0; i < m; ++i) flip[i] = static_cast<Permutation::Point>((m - i) % m);
  return GroupTable::from_generators(m, {cycle_on(m, 0, m), Permutation(std::move(flip))}, bound);
}

// Elements (i, e) of Z_2m x Z_2 with (i,e)(i',e') =
// ((i + (-1)^e i' + e e' m) mod 2m, e + e'), realized by right translation on
// the 4m element labels i + 2m*e.
GroupTable dicyclic_group(std::size_t n, std::size_t bound) {
  if (n < 8 || n % 4 != 0) throw ParseError("dicyclic order must be divisible by 4 and >= 8");
  std::size_t m = n / 4;
  std::size_t two_m = 2 * m;
  auto mul = [m, two_m](std::size_t a, std::size_t b) {
    std::size_t i = a % two_m, e = a / two_m;
    std::size_t j = b % two_m, f = b / two_m;
    std::size_t shifted = e == 0 ? (i + j) % two_m : (i + two_m - j + e * f * m) % two_m;
    return shifted % two_m + two_m * ((e + f) % 2);
  };
  std::vector<Permutation::Point> by_a(n), by_b(n);
  for (std::size_t x = 0; x < n; ++x) {
    by_a[x] = static_cast<Permutation::Point>(mul(x, 1));        // right-multiply by (1,0)
    by_b[x] = static_cast<Permutation::Point>(mul(x, two_m));    // right-multiply by (0,1)
  }
  GroupTable g = GroupTable::from_generators(n, {Permutation(by_a), Permutation(by_b)}, bound);
  if (g.order() != n) throw Error("dicyclic construction has wrong order (internal defect)");
  return g;
}

GroupTable symmetric_group(std::size_t n, std::size_t bound) {
  if (n == 0) throw ParseError("symmetric degree must be >= 1");
  if (n == 1) return GroupTable::from_generators(1, {}, bound);
  std::vector<Permutation::Point> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Permutation::Point>(i);
  std::swap(t[0], t[1]);
  if (n == 2) return GroupTable::from_generators(2, {Permutation(std::move(t))}, bound);
  return GroupTable::from_generators(n, {Permutation(std::move(t)), cycle_on(n, 0, n)}, bound);
}

GroupTable alternating_group(std::size_t n, std::size_t bound) {
  if (n < 3) throw ParseError("alternating degree must be >= 3");
  Permutation three = cycle_on(n, 0, 3);
  if (n == 3) return GroupTable::from_generators(3, {three}, bound);
  Permutation big = n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1);
  return GroupTable::from_generators(n, {three, big}, bound);
}

GroupTable elementary_group(long p, long k, std::size_t bound) {
  if (p < 2 || !prime_power_decomposition(p) || prime_power_decomposition(p)->k != 1) {
    throw ParseError("elementary base must be prime");
  }
  if (k < 1) throw ParseError("elementary exponent must be >= 1");
  std::size_t degree = static_cast<std::size_t>(p) * static_cast<std::size_t>(k);
  std::vector<Permutation> gens;
  for (long i = 0; i < k; ++i) {
    gens.push_back(cycle_on(degree, static_cast<std::size_t>(i * p), static_cast<std::size_t>(p)));
  }
  return GroupTable::from_generators(degree, gens, bound);
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty()) throw ParseError(what + ": missing number");
  // stoull accepts signs and wraps negatives, so require plain digits.
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(what + ": bad number '" + text + "'");
    }
  }
  unsigned long long v = 0;
  try {
    v = std::stoull(text);
  } catch (const std::logic_error&) {
    throw ParseError(what + ": bad number '" + text + "'");
  }
  // Far beyond any enumerable group; rejecting here keeps absurd inputs from
  // turning into allocation failures instead of a parse error.
  if (v > 10'000'000ULL) throw ParseError(what + ": count out of range '" + text + "'");
  return static_cast<std::size_t>(v);
}

GroupTable build_term(const std::string& term, std::size_t bound) {
  if (!term.empty() && term[0] == '@') {
    GroupFile file = read_group_file(term.substr(1));
    return GroupTable::from_generators(file.degree, file.generators, bound);
  }
  std::size_t colon = term.find(':');
  if (colon == std::string::npos) throw ParseError("construction needs ':': '" + term + "'");
  std::string kind = term.substr(0, colon);
  std::string arg = term.substr(colon + 1);
  if (kind == "cyclic") return cyclic_group(parse_count(arg, kind), bound);
  if (kind == "dihedral") return dihedral_group(parse_count(arg, kind), bound);
  if (kind == "dicyclic") return dicyclic_group(parse_count(arg, kind), bound);
  if (kind == "symmetric") return symmetric_group(parse_count(arg, kind), bound);
  if (kind == "alternating") return alternating_group(parse_count(arg, kind), bound);
  if (kind == "gamma") return gamma_q(static_cast<long>(parse_count(arg, kind)), bound);
  if (kind == "elementary") {
    std::size_t caret = arg.find('^');
    if (caret == std::string::npos) throw ParseError("elementary needs P^K, got '" + arg + "'");
    long p = static_cast<long>(parse_count(arg.substr(0, caret), kind));
    long k = static_cast<long>(parse_count(arg.substr(caret + 1), kind));
    return elementary_group(p, k, bound);
  }
  throw ParseError("unknown construction '" + kind + "'");
}

}  // namespace

GroupTable build_group(const std::string& spec, std::size_t bound) {
  std::vector<std::string> terms;
  std::string cur;
  for (char c : spec) {
    if (c == '*') {
      terms.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  terms.push_back(cur);
  for (const std::string& t : terms) {
    if (t.empty()) throw ParseError("empty construction in '" + spec + "'");
  }
  GroupTable acc = build_term(terms[0], bound);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    acc = direct_product(acc, build_term(terms[i], bound), bound);
  }
  return acc;
}

std::vector<CatalogEntry> build_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& spec, std::size_t order) {
    if (order > max_order || order == 0) return;
    if (seen.insert(spec).second) out.push_back({spec, order});
  };

  for (std::size_t n = 1; n <= max_order; ++n) add("cyclic:" + std::to_string(n), n);
  for (std::size_t m = 3; 2 * m <= max_order; ++m) add("dihedral:" + std::to_string(2 * m), 2 * m);
  for (std::size_t m = 2; 4 * m <= max_order; ++m) add("dicyclic:" + std::to_string(4 * m), 4 * m);

  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 10; ++n) {
    fact *= n;
    if (n >= 3 && fact <= max_order) add("symmetric:" + std::to_string(n), fact);
    if (n >= 3 && fact / 2 <= max_order) add("alternating:" + std::to_string(n), fact / 2);
    if (fact / 2 > max_order) break;
  }

  std::vector<long> gamma_qs;
  for (long q = 3; q <= 32; ++q) {
    if (!prime_power_decomposition(q)) continue;
    std::size_t order = static_cast<std::size_t>(q) * static_cast<std::size_t>(q - 1);
    if (order <= max_order) {
      gamma_qs.push_back(q);
      add("gamma:" + std::to_string(q), order);
    }
  }

  for (long p : {2L, 3L, 5L, 7L}) {
    std::size_t order = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
    for (long k = 2; order <= max_order; ++k) {
      add("elementary:" + std::to_string(p) + "^" + std::to_string(k), order);
      if (order > max_order / static_cast<std::size_t>(p)) break;
      order *= static_cast<std::size_t>(p);
    }
  }

  for (std::size_t i = 0; i < gamma_qs.size(); ++i) {
    for (std::size_t j = i; j < gamma_qs.size(); ++j) {
      long qa = gamma_qs[i], qb = gamma_qs[j];
      std::size_t order = static_cast<std::size_t>(qa) * static_cast<std::size_t>(qa - 1) *
                          static_cast<std::size_t>(qb) * static_cast<std::size_t>(qb - 1);
      add("gamma:" + std::to_string(qa) + "*gamma:" + std::to_string(qb), order);
    }
  }

  for (long q : gamma_qs) {
    std::size_t base = static_cast<std::size_t>(q) * static_cast<std::size_t>(q - 1);
    for (std::size_t n = 2; base * n <= max_order; ++n) {
      add("gamma:" + std::to_string(q) + "*cyclic:" + std::to_string(n), base * n);
    }
  }

  add("cyclic:2*cyclic:4", 8);
  add("cyclic:2*cyclic:8", 16);
  add("cyclic:4*cyclic:4", 16);
  add("cyclic:3*cyclic:9", 27);
  add("cyclic:2*cyclic:12", 24);
  return out;
}

}  // namespace rue
