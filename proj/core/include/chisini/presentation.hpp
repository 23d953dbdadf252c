#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace chisini {

/// Group word: signed 1-based generator indices; -i is the inverse of
/// generator i.
struct word {
  std::vector<int> letters;

  friend bool operator==(const word&, const word&) = default;
};

/// Finite presentation with the markings a covering monodromy must respect:
/// `geometric` words must map to transpositions, `cusps` pairs to
/// non-commuting transposition pairs generating a 6-element closure, `nodes`
/// pairs to distinct commuting transpositions.
struct marked_presentation {
  std::vector<std::string> generators;
  std::vector<word> relators;
  std::vector<word> geometric;
  std::vector<std::pair<word, word>> cusps;
  std::vector<std::pair<word, word>> nodes;

  /// <a, b | aba = bab>, both generators geometric, (a, b) marked as a cusp:
  /// the local monodromy model around a cusp of the branch curve.
  static marked_presentation braid3();
};

/// Line-oriented text format:
///   # comment
///   generators a b
///   relator a b a b' a' b'
///   geometric a
///   cusp a , b
///   node a , b
/// Words are space-separated generator names; a trailing ' inverts a letter.
/// `generators` must appear before any word. Raises parse_error on malformed
/// input.
marked_presentation parse_presentation(std::istream& in);

marked_presentation load_presentation(const std::string& path);

std::string word_string(const marked_presentation& pres, const word& w);

}  // namespace chisini
