#pragma once

// Seeded random generators and the invariant suites run by `selftest`, the
// acceptance binary and the unit tests.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "milnor/forms.hpp"
#include "milnor/graded.hpp"

namespace milnor::props {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

namespace gen {

ResidueFieldPtr context(Rng& rng, int max_r = 3);
Exponent exponent(Rng& rng, int r, std::int64_t lo = -6, std::int64_t hi = 6);
Fq scalar(Rng& rng, const FiniteField& F, bool nonzero = false);
LaurentPoly poly(Rng& rng, const ResidueFieldPtr& ctx, int max_terms = 4, std::int64_t lo = -6, std::int64_t hi = 6);
DiffForm form(Rng& rng, const ResidueFieldPtr& ctx, int degree, int max_terms = 4, std::int64_t lo = -6,
              std::int64_t hi = 6);
/// A sum of pieces from the B/Z towers at assorted levels, so that membership
/// predicates take both values.
DiffForm tower_mix(Rng& rng, const ResidueFieldPtr& ctx, int degree);
/// An element of B_s (s >= 0).
DiffForm b_member(Rng& rng, const ResidueFieldPtr& ctx, int degree, int s);
/// An element of Z_s (s >= 0).
DiffForm z_member(Rng& rng, const ResidueFieldPtr& ctx, int degree, int s);

/// Random parameters on a small grid satisfying the CDVFParams invariants.
CDVFParams params(Rng& rng, int max_r = 2, int max_q = 3);
/// A level m in [1, c_n] whose descriptor has the requested shape, if one is
/// found within a bounded number of draws.
std::optional<std::pair<CDVFParams, std::int64_t>> level_with_shape(Rng& rng, GrDescriptor::Shape shape,
                                                                    int min_q = 1);

}  // namespace gen

/// Returns a failure description, or nothing on success.
using Check = std::function<std::optional<std::string>(Rng&)>;

struct Property {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  Check check;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const noexcept { return failures == 0; }
};

std::vector<Property> forms_properties(std::size_t cases = 500);
std::vector<Property> graded_properties(std::size_t cases = 200);

/// Each property draws from its own generator seeded by (seed, name).
std::vector<PropertyResult> run(const std::vector<Property>& props, std::uint64_t seed);

}  // namespace milnor::props
