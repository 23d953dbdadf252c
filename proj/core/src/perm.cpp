#include "chisini/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "chisini/error.hpp"

namespace chisini {

namespace {

constexpr int max_degree = 64;

void check_degree(int n) {
  if (n < 0 || n > max_degree) {
    raise(fault::invalid_argument, "degree " + std::to_string(n) + " outside 0.." +
                                       std::to_string(max_degree));
  }
}

}  // namespace

permutation::permutation(int n) {
  check_degree(n);
  img_.resize(static_cast<std::size_t>(n));
  std::iota(img_.begin(), img_.end(), std::uint8_t{0});
}

permutation permutation::transposition(int n, int i, int j) {
  check_degree(n);
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    raise(fault::invalid_argument, "transposition points must be distinct and within 1..n");
  }
  permutation p(n);
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(j - 1)]);
  return p;
}

permutation permutation::from_one_line(const std::vector<int>& one_based) {
  check_degree(static_cast<int>(one_based.size()));
  int n = static_cast<int>(one_based.size());
  permutation p;
  p.img_.resize(one_based.size());
  std::vector<bool> seen(one_based.size(), false);
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    int v = one_based[i];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      raise(fault::invalid_argument, "not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

int permutation::apply(int point) const {
  if (point < 1 || point > degree()) {
    raise(fault::index_out_of_range, "point " + std::to_string(point) + " outside 1.." +
                                         std::to_string(degree()));
  }
  return img_[static_cast<std::size_t>(point - 1)] + 1;
}

bool permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

bool permutation::is_transposition() const {
  int moved = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) ++moved;
  }
  return moved == 2;  // two moved points necessarily swap
}

permutation permutation::operator*(const permutation& then) const {
  if (degree() != then.degree()) {
    raise(fault::invalid_argument, "composing permutations of different degrees");
  }
  permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    r.img_[i] = then.img_[img_[i]];
  }
  return r;
}

permutation permutation::inverse() const {
  permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  }
  return r;
}

permutation permutation::conjugated_by(const permutation& g) const {
  if (degree() != g.degree()) {
    raise(fault::invalid_argument, "relabeling by a permutation of different degree");
  }
  permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    r.img_[g.img_[i]] = g.img_[img_[i]];
  }
  return r;
}

std::vector<int> permutation::one_line() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == start) continue;
    out += '(';
    std::size_t at = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(at + 1);
      seen[at] = true;
      at = img_[at];
    } while (at != start);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

bool commute(const permutation& p, const permutation& q) { return p * q == q * p; }

std::vector<permutation> all_transpositions(int n) {
  check_degree(n);
  std::vector<permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(permutation::transposition(n, i, j));
  }
  return out;
}

std::vector<permutation> symmetric_group(int n) {
  check_degree(n);
  if (n > 8) {
    raise(fault::budget_exceeded, "full symmetric group limited to degree 8");
  }
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<permutation> out;
  do {
    out.push_back(permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<permutation> subgroup_closure(std::span<const permutation> gens, int degree) {
  check_degree(degree);
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      raise(fault::invalid_argument, "generator degree differs from the requested degree");
    }
  }
  std::set<permutation> found;
  std::queue<permutation> frontier;
  permutation id(degree);
  found.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    permutation at = std::move(frontier.front());
    frontier.pop();
    for (const auto& g : gens) {
      permutation next = at * g;
      if (found.insert(next).second) frontier.push(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

bool is_transitive(std::span<const permutation> gens, int degree) {
  check_degree(degree);
  if (degree <= 1) return true;
  std::vector<bool> reached(static_cast<std::size_t>(degree), false);
  std::queue<int> frontier;
  reached[0] = true;
  frontier.push(1);
  int count = 1;
  while (!frontier.empty()) {
    int at = frontier.front();
    frontier.pop();
    // forward images suffice: each generator has finite order, so its inverse
    // is one of its powers
    for (const auto& g : gens) {
      int next = g.apply(at);
      if (!reached[static_cast<std::size_t>(next - 1)]) {
        reached[static_cast<std::size_t>(next - 1)] = true;
        ++count;
        frontier.push(next);
      }
    }
  }
  return count == degree;
}

permutation klein_quotient(const permutation& p) {
  if (p.degree() != 4) {
    raise(fault::invalid_argument, "quotient map is defined on degree-4 permutations");
  }
  static const std::vector<permutation> pairs = {
      permutation::from_one_line({2, 1, 4, 3}),   // (1 2)(3 4)
      permutation::from_one_line({3, 4, 1, 2}),   // (1 3)(2 4)
      permutation::from_one_line({4, 3, 2, 1})};  // (1 4)(2 3)
  std::vector<int> line(3, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    permutation moved = pairs[i].conjugated_by(p);
    for (std::size_t j = 0; j < 3; ++j) {
      if (moved == pairs[j]) {
        line[i] = static_cast<int>(j) + 1;
        break;
      }
    }
  }
  return permutation::from_one_line(line);
}

}  // namespace chisini
