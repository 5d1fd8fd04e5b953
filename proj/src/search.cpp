#include "convcodes/search.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "convcodes/combinatorics.hpp"
#include "convcodes/error.hpp"
#include "convcodes/matrix.hpp"
#include "convcodes/numtheory.hpp"

namespace convcodes {
namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::vector<Elem> to_elems(const std::vector<std::size_t>& values) {
  std::vector<Elem> out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(Elem{static_cast<std::uint32_t>(v)});
  return out;
}

}  // namespace

SearchReport exhaustive_search(const FieldPtr& field, std::size_t k, std::size_t r, std::uint64_t budget) {
  SearchReport report;
  report.field = field->spec();
  report.k = k;
  report.r = r;
  const std::uint64_t nonzero = field->q() - 1;
  if (r == 0 || r > nonzero) return report;

  auto subset = first_combination(r);
  do {
    const auto xi = to_elems(subset);
    SuperRegularOptions opts;
    opts.max_determinants = budget - report.determinants;
    auto check = check_super_regular(vandermonde(field, k, xi), opts);
    report.determinants += check.determinants;
    ++report.sets_examined;
    if (check.super_regular) {
      report.exists = true;
      report.witness = xi;
      return report;
    }
  } while (next_combination(subset, nonzero));
  return report;
}

SearchReport random_search(const FieldPtr& field, std::size_t k, std::size_t r, std::uint64_t trials,
                           std::uint64_t seed) {
  SearchReport report;
  report.field = field->spec();
  report.k = k;
  report.r = r;
  report.seed = seed;
  const std::uint64_t nonzero = field->q() - 1;
  if (r == 0 || r > nonzero) return report;

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<std::size_t> chosen;
    while (chosen.size() < r) {
      const std::size_t v = 1 + uniform_below(rng, nonzero);
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    const auto xi = to_elems(chosen);
    auto check = check_super_regular(vandermonde(field, k, xi));
    report.determinants += check.determinants;
    ++report.sets_examined;
    if (check.super_regular) {
      report.exists = true;
      report.witness = xi;
      break;
    }
  }
  return report;
}

Frontier empirical_min_q(std::size_t k, std::size_t r, std::span<const FieldSpec> family, std::uint64_t budget) {
  Frontier frontier;
  frontier.k = k;
  frontier.r = r;
  frontier.threshold = existence_threshold(k, r);
  for (const auto& spec : family) {
    auto field = Field::make(spec);
    FrontierRow row;
    row.q = field->q();
    row.lower_bounds = lower_bound_check(row.q, k, r);
    try {
      auto report = exhaustive_search(field, k, r, budget);
      row.status = report.exists ? Existence::Exists : Existence::Absent;
      row.witness = report.witness;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      row.status = Existence::Unknown;
    }
    const std::string where = "q=" + std::to_string(row.q) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
    if (row.status == Existence::Exists && !row.lower_bounds.feasible) {
      frontier.inconsistencies.push_back(where + ": super-regular set found but a lower bound forbids it");
    }
    if (row.status == Existence::Absent && BigInt(row.q) > frontier.threshold) {
      frontier.inconsistencies.push_back(where + ": no super-regular set above the existence threshold");
    }
    if (row.status == Existence::Exists && !frontier.first_exists) frontier.first_exists = row.q;
    frontier.rows.push_back(std::move(row));
  }
  return frontier;
}

std::vector<FieldSpec> prime_power_family(std::uint64_t lo, std::uint64_t hi) {
  std::vector<FieldSpec> out;
  for (auto q : prime_powers_between(lo, hi)) {
    const auto pp = *as_prime_power(q);
    out.push_back(default_field_spec(pp.p, pp.w));
  }
  return out;
}

}  // namespace convcodes
