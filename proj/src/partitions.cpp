#include "rue/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "rue/errors.hpp"

namespace rue {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidPartition("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidPartition("parts must be weakly decreasing");
    }
    n_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<long> parts;
  std::string cur;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') {
      cur.push_back(text[i]);
      continue;
    }
    if (cur.empty()) {
      if (text.empty()) break;  // empty partition
      throw InvalidPartition("empty part in '" + text + "'");
    }
    try {
      std::size_t used = 0;
      long v = std::stol(cur, &used);
      if (used != cur.size()) throw InvalidPartition("bad part '" + cur + "'");
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidPartition("bad part '" + cur + "'");
    }
    cur.clear();
  }
  return Partition(std::move(parts));
}

HookGrid hook_lengths(const Partition& p) {
  Partition conj = conjugate_partition(p);
  HookGrid grid(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    grid[i].resize(static_cast<std::size_t>(p.part(i)));
    for (long j = 0; j < p.part(i); ++j) {
      grid[i][static_cast<std::size_t>(j)] =
          (p.part(i) - 1 - j) + (conj.part(static_cast<std::size_t>(j)) - 1 - static_cast<long>(i)) + 1;
    }
  }
  return grid;
}

Partition conjugate_partition(const Partition& p) {
  std::vector<long> conj;
  if (p.rows() > 0) {
    conj.resize(static_cast<std::size_t>(p.part(0)), 0);
    for (std::size_t i = 0; i < p.rows(); ++i) {
      for (long j = 0; j < p.part(i); ++j) ++conj[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(conj));
}

bool is_self_conjugate(const Partition& p) { return conjugate_partition(p) == p; }

long long hook_degree(const Partition& p) {
  if (p.n() > 20) throw Error("factorial overflow beyond n = 20");
  long long num = 1;
  for (long f = 2; f <= p.n(); ++f) num *= f;
  long long den = 1;
  for (const auto& row : hook_lengths(p)) {
    for (long h : row) den *= h;
  }
  return num / den;
}

namespace {

// Beta-set of a partition padded to r rows: strictly decreasing
// beta[i] = part_i + (r - 1 - i).
std::vector<long> beta_set(const Partition& p) {
  std::size_t r = p.rows();
  std::vector<long> beta(r);
  for (std::size_t i = 0; i < r; ++i) beta[i] = p.part(i) + static_cast<long>(r - 1 - i);
  return beta;
}

Partition from_beta(std::vector<long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<long>());
  std::vector<long> parts;
  std::size_t r = beta.size();
  for (std::size_t i = 0; i < r; ++i) {
    long part = beta[i] - static_cast<long>(r - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

long long mn_recursive(const Partition& lambda, const std::vector<long>& mu, std::size_t mi,
                       std::map<std::pair<std::vector<long>, std::vector<long>>, long long>& memo);

long long mn_lookup(const Partition& lambda, const std::vector<long>& mu, std::size_t mi,
                    std::map<std::pair<std::vector<long>, std::vector<long>>, long long>& memo) {
  if (mi == mu.size()) return 1;  // empty shape, empty type
  std::pair<std::vector<long>, std::vector<long>> key(
      lambda.parts(), std::vector<long>(mu.begin() + static_cast<long>(mi), mu.end()));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long v = mn_recursive(lambda, mu, mi, memo);
  memo.emplace(std::move(key), v);
  return v;
}

long long mn_recursive(const Partition& lambda, const std::vector<long>& mu, std::size_t mi,
                       std::map<std::pair<std::vector<long>, std::vector<long>>, long long>& memo) {
  long l = mu[mi];  // rim-hook length to remove
  std::vector<long> beta = beta_set(lambda);
  std::vector<bool> present;
  long maxb = beta.empty() ? -1 : beta[0];
  present.assign(static_cast<std::size_t>(maxb + 1), false);
  for (long b : beta) present[static_cast<std::size_t>(b)] = true;

  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long target = beta[i] - l;
    if (target < 0 || present[static_cast<std::size_t>(target)]) continue;
    long crossings = 0;
    for (long b : beta) {
      if (b > target && b < beta[i]) ++crossings;
    }
    std::vector<long> next = beta;
    next[i] = target;
    long long sub = mn_lookup(from_beta(std::move(next)), mu, mi + 1, memo);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

std::map<std::pair<std::vector<long>, std::vector<long>>, long long> g_mn_memo;
std::mutex g_mn_mutex;

}  // namespace

long long mn_value(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) {
    throw SizeMismatch("partition sizes differ: " + std::to_string(lambda.n()) + " vs " +
                       std::to_string(mu.n()));
  }
  std::lock_guard<std::mutex> lock(g_mn_mutex);
  return mn_lookup(lambda, mu.parts(), 0, g_mn_memo);
}

bool strip_identity_check(const Partition& gamma, const Partition& beta) {
  if (beta.rows() == 0) return mn_value(gamma, beta) == 1;
  long b1 = beta.part(0);
  long h21 = 0;
  if (gamma.rows() >= 2) {
    HookGrid grid = hook_lengths(gamma);
    h21 = grid[1][0];
  }
  if (!(h21 < b1)) throw HypothesisNotMet("second-row hook is not shorter than the removed part");
  long g2 = gamma.rows() >= 2 ? gamma.part(1) : 0;
  if (!(gamma.part(0) - g2 >= b1)) {
    throw HypothesisNotMet("first-row overhang is shorter than the removed part");
  }

  std::vector<long> truncated = gamma.parts();
  truncated[0] -= b1;
  if (truncated[0] == 0) truncated.erase(truncated.begin());
  std::vector<long> rest(beta.parts().begin() + 1, beta.parts().end());
  return mn_value(gamma, beta) == mn_value(Partition(std::move(truncated)), Partition(std::move(rest)));
}

bool is_p_defect_zero(const Partition& p, long prime) {
  for (const auto& row : hook_lengths(p)) {
    for (long h : row) {
      if (h % prime == 0) return false;
    }
  }
  return true;
}

bool is_even_cycle_type(const Partition& alpha) {
  return (alpha.n() - static_cast<long>(alpha.rows())) % 2 == 0;
}

Partition lemma33_witness(const Partition& alpha) {
  long n = alpha.n();
  if (n < 6) throw NTooSmall("need n >= 6, got " + std::to_string(n));
  if (!is_even_cycle_type(alpha)) {
    throw NotEvenCycleType("cycle type " + alpha.to_string() + " is odd");
  }

  std::vector<Partition> candidates;
  candidates.push_back(Partition({n - 2, 1, 1}));
  candidates.push_back(Partition({n - 2, 2}));
  long smallest = alpha.part(alpha.rows() - 1);
  if (n - smallest >= 1) {
    std::vector<long> hook = {n - smallest};
    hook.insert(hook.end(), static_cast<std::size_t>(smallest), 1);
    if (hook[0] >= 1 && (hook.size() < 2 || hook[0] >= hook[1])) {
      candidates.push_back(Partition(std::move(hook)));
    }
  }
  for (Partition& p : partitions_of(n)) candidates.push_back(std::move(p));

  for (const Partition& lambda : candidates) {
    if (is_self_conjugate(lambda)) continue;
    long long v = mn_value(lambda, alpha);
    if (v != 1 && v != -1) return lambda;
  }
  throw NoWitness("no qualifying shape for cycle type " + alpha.to_string());
}

namespace {

void emit_partitions(long remaining, long cap, std::vector<long>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (long next = 1; next <= std::min(remaining, cap); ++next) {
    prefix.push_back(next);
    emit_partitions(remaining - next, next, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<long> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

}  // namespace rue
