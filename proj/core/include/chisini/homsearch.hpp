#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chisini/perm.hpp"
#include "chisini/presentation.hpp"

namespace chisini {

/// Left-to-right product of the images of a word's letters; raises
/// index_out_of_range when a letter has no image.
permutation evaluate_word(std::span<const permutation> images, const word& w);

/// Lexicographically minimal simultaneous relabeling of an image tuple; two
/// tuples are the same monodromy class iff their canonical forms agree.
std::vector<permutation> canonical_images(std::span<const permutation> images);

struct hom_class {
  std::vector<permutation> images;  ///< canonical representative
  int n_points = 0;

  friend bool operator==(const hom_class&, const hom_class&) = default;
};

struct admissible_options {
  /// Cap on the raw assignment count (product of per-generator candidate
  /// pools); exceeded -> budget_exceeded.
  std::uint64_t budget = 100'000'000;
  /// The full admissibility notion requires a transitive image (which, with
  /// transposition generators, forces the whole symmetric group). Switch off
  /// to explore local / reducible monodromies such as the node model.
  bool require_transitive = true;
  /// 0 = one worker per candidate of the first generator (capped by
  /// hardware_concurrency).
  unsigned workers = 0;
};

/// All monodromy classes of the marked presentation into the symmetric group
/// on n_points, up to simultaneous conjugation:
///   - relators map to the identity,
///   - geometric words map to transpositions,
///   - cusp pairs map to non-commuting transpositions whose closure has
///     order 6,
///   - node pairs map to distinct commuting transpositions,
///   - the image is transitive and all of the symmetric group (unless
///     require_transitive is off).
/// Generators that appear verbatim in `geometric` draw candidates from the
/// transpositions only (lossless); everything else from the full group.
/// The search is partitioned across workers by the first generator's image
/// and deduplicated after canonicalization; the result is sorted.
std::vector<hom_class> enumerate_admissible(const marked_presentation& pres, int n_points,
                                            const admissible_options& opts = {});

/// Orbit sizes (ascending) of the componentwise action of the group generated
/// by the pairs (f1[i], f2[i]) on {1..N1} x {1..N2}.
std::vector<std::size_t> pair_action_orbits(std::span<const permutation> f1,
                                            std::span<const permutation> f2);

struct local_model_report {
  struct item {
    std::string name;
    bool passed = false;
    std::string detail;
  };
  std::vector<item> items;

  bool all_passed() const;
};

/// Built-in checks of the cusp local model (braid group on three strands,
/// standard images (1 2), (2 3)):
///   braid_relation, unique_admissible_class, cusp_pair_orbits {3, 6},
///   six_point_action (the big orbit carries a transitive 6-element action).
local_model_report local_model_suite();

}  // namespace chisini
