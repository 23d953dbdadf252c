#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chisini {

/// Permutation of {1..n}, stored as a 0-based image table. Composition reads
/// left to right: (p * q) applies p first, then q.
class permutation {
 public:
  permutation() = default;
  explicit permutation(int n);  ///< identity on n points

  static permutation transposition(int n, int i, int j);       ///< 1-based points
  static permutation from_one_line(const std::vector<int>& one_based);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const;  ///< 1-based
  bool is_identity() const;
  bool is_transposition() const;

  permutation operator*(const permutation& then) const;
  permutation inverse() const;
  /// Relabeling by g: the unique q with q(g(x)) = g(p(x)).
  permutation conjugated_by(const permutation& g) const;

  std::vector<int> one_line() const;  ///< 1-based images
  std::string cycle_string() const;   ///< "(1 2)(3 4)", identity prints "e"

  auto operator<=>(const permutation&) const = default;

  const std::vector<std::uint8_t>& raw() const { return img_; }

 private:
  std::vector<std::uint8_t> img_;
};

bool commute(const permutation& p, const permutation& q);

std::vector<permutation> all_transpositions(int n);

/// All n! elements; guarded to n <= 8.
std::vector<permutation> symmetric_group(int n);

/// Subgroup generated by gens (BFS closure; empty gens give the trivial
/// group).
std::vector<permutation> subgroup_closure(std::span<const permutation> gens, int degree);

bool is_transitive(std::span<const permutation> gens, int degree);

/// Quotient of the degree-4 symmetric group by the normal Klein four-group,
/// realized on 3 points by the conjugation action on the three products of
/// disjoint transpositions (1 2)(3 4), (1 3)(2 4), (1 4)(2 3). Transpositions
/// map to transpositions; the Klein four-group maps to the identity.
permutation klein_quotient(const permutation& p);

}  // namespace chisini
