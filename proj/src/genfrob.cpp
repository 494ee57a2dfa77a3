#include "frobenius/genfrob.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "frobenius/errors.hpp"

namespace frob {

std::string_view to_string(GFrobMethod m) {
  switch (m) {
    case GFrobMethod::closed_two_var: return "closed_two_var";
    case GFrobMethod::oracle_search: return "oracle_search";
    case GFrobMethod::beck_kifer: return "beck_kifer";
  }
  return "unknown";
}

BigInt g_two_var(std::uint64_t a, std::uint64_t b, std::uint64_t s) {
  if (a == 0 || b == 0) throw precondition_error("g_two_var needs positive arguments");
  if (std::gcd(a, b) != 1)
    throw precondition_error("g_two_var needs coprime arguments, got (" + std::to_string(a) +
                             "," + std::to_string(b) + ")");
  return (to_big(s) + 1) * to_big(a) * to_big(b) - to_big(a) - to_big(b);
}

namespace {

// Smallest g(a_i, a_j; s) over coprime pairs: every n above it already has
// s+1 representations using that pair alone.
std::optional<BigInt> pair_bound(const Tuple& tuple, std::uint64_t s) {
  std::optional<BigInt> best;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (std::gcd(tuple[i], tuple[j]) != 1) continue;
      BigInt g = g_two_var(tuple[i], tuple[j], s);
      if (!best || g < *best) best = g;
    }
  return best;
}

std::uint64_t initial_limit(const Tuple& tuple, std::uint64_t s, std::uint64_t cap) {
  const BigInt window = to_big(tuple.min_element());
  BigInt limit;
  if (auto bound = pair_bound(tuple, s))
    limit = std::max(*bound, BigInt(-1)) + window;
  else
    limit = std::max(BigInt(1024), BigInt(4 * to_big(tuple.max_element()) * window));
  if (limit > to_big(cap)) return cap;
  return to_uint64(limit);
}

}  // namespace

GFrobResult g_search(const Tuple& tuple, std::uint64_t s, std::uint64_t cap) {
  if (s == std::numeric_limits<std::uint64_t>::max())
    throw precondition_error("s too large for the oracle");
  const std::uint64_t threshold = s + 1;
  const std::uint64_t window = tuple.min_element();

  std::uint64_t limit = initial_limit(tuple, s, cap);
  for (;;) {
    const CountTable table = count_prefix(limit, tuple, cap);
    std::int64_t last_low = -1;
    std::uint64_t run = 0;
    for (std::uint64_t n = 0; n <= limit; ++n) {
      if (!table.at_least(n, threshold)) {
        last_low = static_cast<std::int64_t>(n);
        run = 0;
        continue;
      }
      if (++run < window) continue;

      GFrobResult result;
      result.value = to_big(last_low);
      result.s = s;
      result.method = GFrobMethod::oracle_search;
      std::vector<WindowEntry> witness;
      witness.reserve(window);
      for (std::uint64_t m = n + 1 - window; m <= n; ++m) witness.push_back({m, table.count(m)});
      result.witness_window = std::move(witness);
      return result;
    }
    if (limit >= cap)
      throw cap_exhausted("no window of " + std::to_string(window) +
                          " consecutive integers with >= " + std::to_string(threshold) +
                          " representations of (" + tuple.to_string() + ") below cap " +
                          std::to_string(cap));
    limit = limit > cap / 2 ? cap : 2 * limit;
  }
}

ReductionStep ReductionStep::of(const Tuple& tuple) {
  if (tuple.size() < 2) throw precondition_error("gcd reduction needs at least two elements");
  std::uint64_t ell = 0;
  for (std::size_t i = 1; i < tuple.size(); ++i) ell = std::gcd(ell, tuple[i]);
  std::vector<std::uint64_t> reduced{tuple[0]};
  for (std::size_t i = 1; i < tuple.size(); ++i) reduced.push_back(tuple[i] / ell);
  return ReductionStep{ell, Tuple(std::move(reduced)), tuple[0]};
}

BigInt ReductionStep::lift(const BigInt& reduced_value) const {
  return to_big(ell) * reduced_value + to_big(first) * (to_big(ell) - 1);
}

InnerSolver oracle_solver(std::uint64_t cap) {
  return [cap](const Tuple& tuple, std::uint64_t s) { return g_search(tuple, s, cap).value; };
}

BigInt beck_kifer_g(const Tuple& tuple, std::uint64_t s, const InnerSolver& inner) {
  const auto step = ReductionStep::of(tuple);
  return step.lift(inner(step.reduced, s));
}

BigInt classify_shifted(std::uint64_t a, std::uint64_t b, std::uint64_t s, std::uint64_t c,
                        std::int64_t j) {
  if (c == 0) throw precondition_error("classify_shifted needs c > 0");
  if (c % a != 0 && c % b != 0)
    throw precondition_error("classify_shifted needs c to be a multiple of a or b");
  const BigInt shifted = g_two_var(a, b, s) + to_big(c) * to_big(j);
  if (sgn(shifted) < 0)
    throw precondition_error("classify_shifted needs g(a,b;s) + j*c >= 0, got " +
                             to_string(shifted));
  // Smallest i >= 0 with (i+1)ab - a - b >= shifted.
  const BigInt ab = to_big(a) * to_big(b);
  BigInt levels;
  mpz_cdiv_q(levels.get_mpz_t(), BigInt(shifted + to_big(a) + to_big(b)).get_mpz_t(),
             ab.get_mpz_t());
  return levels - 1;
}

}  // namespace frob
