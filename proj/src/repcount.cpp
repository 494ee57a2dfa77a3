#include "frobenius/repcount.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "frobenius/errors.hpp"

namespace frob {

namespace {

void require_positive(const std::vector<std::uint64_t>& elements) {
  if (elements.empty()) throw precondition_error("tuple must not be empty");
  for (auto a : elements)
    if (a == 0) throw precondition_error("tuple elements must be positive");
}

void check_cap(std::uint64_t n, std::uint64_t cap) {
  if (n > cap)
    throw cap_exceeded("counting argument " + std::to_string(n) + " exceeds oracle cap " +
                       std::to_string(cap));
}

}  // namespace

Tuple::Tuple(std::vector<std::uint64_t> elements, no_check) : elements_(std::move(elements)) {
  require_positive(elements_);
}

Tuple::Tuple(std::vector<std::uint64_t> elements) : Tuple(std::move(elements), no_check{}) {
  if (elements_.size() < 2)
    throw precondition_error("tuple needs at least two elements (got " + to_string() + ")");
  std::uint64_t g = 0;
  for (auto a : elements_) g = std::gcd(g, a);
  if (g != 1)
    throw precondition_error("tuple (" + to_string() + ") has gcd " + std::to_string(g) +
                             ", expected 1");
}

Tuple Tuple::unchecked(std::vector<std::uint64_t> elements) {
  return Tuple(std::move(elements), no_check{});
}

std::uint64_t Tuple::min_element() const { return *std::ranges::min_element(elements_); }
std::uint64_t Tuple::max_element() const { return *std::ranges::max_element(elements_); }

std::string Tuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

Tuple parse_tuple(const std::string& text) {
  std::vector<std::uint64_t> elements;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc{} || ptr != last)
      throw precondition_error("invalid tuple '" + text +
                               "': expected comma-separated positive integers");
    elements.push_back(v);
    pos = end + 1;
  }
  return Tuple(std::move(elements));
}

BigInt CountTable::count(std::uint64_t n) const {
  if (n > limit_) throw precondition_error("index beyond count table limit");
  return is_wide() ? wide_[n] : to_big(narrow_[n]);
}

bool CountTable::at_least(std::uint64_t n, std::uint64_t threshold) const {
  if (n > limit_) throw precondition_error("index beyond count table limit");
  return is_wide() ? wide_[n] >= to_big(threshold) : narrow_[n] >= threshold;
}

std::vector<BigInt> CountTable::to_vector() const {
  if (is_wide()) return wide_;
  std::vector<BigInt> out;
  out.reserve(narrow_.size());
  for (auto c : narrow_) out.push_back(to_big(c));
  return out;
}

CountTable count_prefix(std::uint64_t limit, const Tuple& tuple, std::uint64_t cap) {
  check_cap(limit, cap);
  CountTable table(tuple, limit);
  const std::size_t len = static_cast<std::size_t>(limit) + 1;

  std::vector<std::uint64_t> counts(len, 0);
  counts[0] = 1;
  bool overflow = false;
  for (auto a : tuple.elements()) {
    for (std::size_t n = a; n < len && !overflow; ++n)
      overflow = __builtin_add_overflow(counts[n], counts[n - a], &counts[n]);
    if (overflow) break;
  }
  if (!overflow) {
    table.narrow_ = std::move(counts);
    return table;
  }

  counts = {};
  std::vector<BigInt> wide(len);
  wide[0] = 1;
  for (auto a : tuple.elements())
    for (std::size_t n = a; n < len; ++n) wide[n] += wide[n - a];
  table.wide_ = std::move(wide);
  return table;
}

BigInt count_representations(std::uint64_t n, const Tuple& tuple, std::uint64_t cap) {
  return count_prefix(n, tuple, cap).count(n);
}

BigInt count_by_decomposition(std::uint64_t m, std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw precondition_error("count_by_decomposition needs n >= 1");
  check_cap(m, cap);
  const std::uint64_t t0 = n * (n + 1) / 2;
  const std::uint64_t t1 = (n + 1) * (n + 2) / 2;
  const std::uint64_t t2 = (n + 2) * (n + 3) / 2;
  const std::uint64_t d1 = std::gcd(t1, t2);
  const std::uint64_t b = t1 / d1;
  const std::uint64_t c = t2 / d1;

  // d(r; b, c) by walking the multiples of c.
  auto two_var = [b, c](std::uint64_t r) {
    std::uint64_t hits = 0;
    for (std::uint64_t used = 0; used <= r; used += c) {
      if ((r - used) % b == 0) ++hits;
      if (r - used < c) break;
    }
    return hits;
  };

  BigInt total = 0;
  for (std::uint64_t j = 0; j <= m / t0; ++j) total += to_big(two_var(m - j * t0));
  return total;
}

}  // namespace frob
