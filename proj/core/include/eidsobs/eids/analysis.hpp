#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eidsobs/eids/descriptor.hpp"

namespace eidsobs {

struct TypeCheckReport {
  bool is_determinantal = false;
  std::size_t codim_expected = 0;
  std::size_t codim_actual = 0;
  int dimension = 0;
  bool is_ids = false;
  bool is_smoothable = false;
  std::size_t corank = 0;
  bool three_strata_ok = false;
  std::optional<bool> sigma_is_icis;
};

/// Codimension verdict from the germ dimension at the origin plus the
/// range predicates. sigma_is_icis is filled only when t >= 2 and X has
/// at most three strata.
TypeCheckReport check_determinantal(const EidsDescriptor& x, const Limits& limits = {});

struct Stratum {
  std::size_t index;            // F^{-1}(M^index), rank < index
  Ideal ideal;                  // index-minors
  std::size_t expected_codim;
  int dimension;                // germ dimension at 0, -1 when empty there
  bool empty;                   // does not pass through the origin
};

struct StratificationReport {
  std::vector<Stratum> strata;  // index 1..t
};

StratificationReport stratification(const EidsDescriptor& x, const Limits& limits = {});

/// m*n minus the rank of the matrix of linear parts of the entries.
std::size_t corank_at_origin(const EidsDescriptor& x);

/// Sigma X = F^{-1}(M^{t-1}); the unit ideal when t = 1.
Ideal singular_set(const EidsDescriptor& x);

/// A minimal generating set of the ideal in the local ring at the origin
/// (its size is the minimal number of generators, by Nakayama).
std::vector<Polynomial> minimal_local_generators(const Ideal& ideal, const Limits& limits = {});

/// Sigma X is a complete intersection (generator count equals codimension)
/// with an isolated singularity (Jacobian criterion, finite local colength).
bool verify_sigma_icis(const EidsDescriptor& x, const Limits& limits = {});

/// Essential isolation: for every i <= t, the points of F^{-1}(M^i) off
/// F^{-1}(M^{i-1}) where F fails to be transversal to the rank stratum
/// accumulate only at the origin.
bool verify_essential_isolation(const EidsDescriptor& x, const Limits& limits = {});

/// Restriction to the hyperplane l = 0, solved for the variable with the
/// largest |coefficient| (first such on ties). Throws ZeroForm.
EidsDescriptor slice(const EidsDescriptor& x, const LinearForm& l);

/// F + s*C with C a seeded constant matrix, in the context (x..., s).
struct EssentialSmoothing {
  PolyMatrix family;
  std::size_t s_index;
  std::vector<Rational> constants;  // row-major C
  std::uint64_t seed;
};

EssentialSmoothing essential_smoothing(const EidsDescriptor& x, std::uint64_t seed);

}  // namespace eidsobs
