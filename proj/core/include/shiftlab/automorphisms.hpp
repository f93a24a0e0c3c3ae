#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shiftlab/block_code.hpp"

namespace shiftlab {

/// Default verification depth for image-containment checks. Exact for full
/// shifts, finite-type and periodic specs; a finite-evidence horizon for
/// substitution and mechanical specs.
int default_verification_depth(const SubshiftSpec& spec, int range);

/// True when a depth check at default_verification_depth decides endomorphy
/// exactly for this spec family.
bool endomorphy_depth_exact(const SubshiftSpec& spec);

/// Image containment on every admissible word of length 2N+1 .. depth.
/// Throws DepthTooSmall when depth < 2N+1.
bool is_endomorphism(Language& lang, const SlidingBlockCode& code, int depth);

struct AutomorphismCertificate {
  SlidingBlockCode code;
  SlidingBlockCode inverse;
  int verification_depth = 0;
  bool endomorphy_exact = false;
  bool operator==(const AutomorphismCertificate&) const = default;
};

struct NonInvertibility {
  enum class Kind {
    /// Two distinct admissible words with equal images survived refinement at
    /// every tested depth; `collision` holds the deepest pair.
    NonInjectiveEvidence,
    /// No inverse within the range bound and no persistent collision either.
    BoundExhausted,
  };
  Kind kind = Kind::BoundExhausted;
  std::optional<std::pair<Word, Word>> collision;
  int checked_depth = 0;
  int max_range_tried = 0;
};

struct InverseSearchResult {
  std::optional<AutomorphismCertificate> certificate;
  std::optional<NonInvertibility> failure;
};

/// Searches radii 0..max_inverse_range for a two-sided inverse. Preimage
/// symbols are forced by consistency across all admissible source words; a
/// candidate is accepted only after both compositions verify as the identity
/// on all admissible windows. Requires code to pass is_endomorphism at depth.
InverseSearchResult find_inverse(Language& lang, const SlidingBlockCode& code,
                                 int max_inverse_range, int depth);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t completed = 0;
  std::uint64_t endomorphisms = 0;
  bool operator==(const SearchStats&) const = default;
};

struct AutomorphismSearch {
  std::vector<AutomorphismCertificate> certificates;  // canonical order
  SearchStats stats;
};

/// Depth-first search over all rule assignments at the given radius, pruning
/// a branch as soon as some fully assigned word maps outside the language.
/// Throws ResourceLimit (with the tree statistics) past limits.max_search_nodes.
AutomorphismSearch enumerate_automorphisms(Language& lang, int range,
                                           int max_inverse_range, int depth);

struct OrderModShiftResult {
  enum class Outcome { Found, BoundExhausted };
  Outcome outcome = Outcome::BoundExhausted;
  int power = 0;        // least b >= 1 with shift^a o code^b = identity
  long long shift = 0;  // the matching a; least |a|, ties to a > 0
  int max_power = 0;
  long long max_shift = 0;
  bool operator==(const OrderModShiftResult&) const = default;
};

/// Least b in 1..max_power such that code^b equals a shift power within
/// |a| <= max_shift. Throws ResourceLimit when the composed radius outgrows
/// the enumerable word length.
OrderModShiftResult order_mod_shift(Language& lang, const AutomorphismCertificate& cert,
                                    int max_power, long long max_shift);

}  // namespace shiftlab
