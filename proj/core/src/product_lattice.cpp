#include "chisini/product_lattice.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "chisini/error.hpp"
#include "chisini/perm.hpp"

namespace chisini {

namespace {

using subgroup = std::vector<permutation>;  // sorted element list

// block embedding of (p, q) into the symmetric group on n1 + n2 points
permutation embed(const permutation& p, const permutation& q) {
  std::vector<int> line;
  line.reserve(static_cast<std::size_t>(p.degree() + q.degree()));
  for (int x = 1; x <= p.degree(); ++x) line.push_back(p.apply(x));
  for (int y = 1; y <= q.degree(); ++y) line.push_back(p.degree() + q.apply(y));
  return permutation::from_one_line(line);
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

product_orbit_report verify_product_orbit_dichotomy(int n1, int n2) {
  if (n1 < 2 || n2 < 2 || n1 > 4 || n2 > 4) {
    raise(fault::budget_exceeded, "factors limited to 2..4 points each");
  }
  const int degree = n1 + n2;

  std::vector<permutation> ambient;
  for (const permutation& p : symmetric_group(n1)) {
    for (const permutation& q : symmetric_group(n2)) ambient.push_back(embed(p, q));
  }
  std::sort(ambient.begin(), ambient.end());

  const permutation marker =
      embed(permutation::transposition(n1, 1, 2), permutation::transposition(n2, 1, 2));

  // every overgroup of <marker> arises from a smaller one by adjoining a
  // single element, so iterated one-element extensions reach all of them;
  // extending by any element of the same coset gives the same closure, which
  // prunes the scan
  std::set<subgroup> seen;
  std::queue<subgroup> work;
  {
    const permutation seed[] = {marker};
    subgroup h0 = subgroup_closure(seed, degree);
    seen.insert(h0);
    work.push(std::move(h0));
  }
  while (!work.empty()) {
    subgroup h = std::move(work.front());
    work.pop();
    std::set<permutation> covered(h.begin(), h.end());
    for (const permutation& g : ambient) {
      if (covered.count(g) > 0) continue;
      subgroup gens = h;
      gens.push_back(g);
      subgroup k = subgroup_closure(gens, degree);
      if (seen.insert(k).second) work.push(k);
      for (const permutation& e : h) covered.insert(e * g);
    }
  }

  // relabeled diagonals {(s, t s t^-1)}; only these may act intransitively
  std::set<subgroup> diagonals;
  if (n1 == n2) {
    for (const permutation& tau : symmetric_group(n1)) {
      subgroup d;
      for (const permutation& s : symmetric_group(n1)) {
        d.push_back(embed(s, s.conjugated_by(tau)));
      }
      std::sort(d.begin(), d.end());
      diagonals.insert(std::move(d));
    }
  }

  product_orbit_report report;
  report.n1 = n1;
  report.n2 = n2;
  report.subgroups_containing_marker = seen.size();

  const std::size_t cells = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
  for (const subgroup& h : seen) {
    std::set<std::vector<int>> proj1, proj2;
    for (const permutation& e : h) {
      std::vector<int> line = e.one_line();
      proj1.insert({line.begin(), line.begin() + n1});
      proj2.insert({line.begin() + n1, line.end()});
    }
    if (proj1.size() != factorial(n1) || proj2.size() != factorial(n2)) continue;

    product_subgroup_info info;
    info.order = h.size();
    info.diagonal_conjugate = diagonals.count(h) > 0;

    std::vector<std::size_t> orbit_id(cells, cells);
    std::size_t next_orbit = 0;
    std::vector<std::size_t> orbit_sizes;
    auto cell = [n2](int x, int y) {
      return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n2) +
             static_cast<std::size_t>(y - 1);
    };
    for (int x0 = 1; x0 <= n1; ++x0) {
      for (int y0 = 1; y0 <= n2; ++y0) {
        if (orbit_id[cell(x0, y0)] != cells) continue;
        std::queue<std::pair<int, int>> frontier;
        frontier.emplace(x0, y0);
        orbit_id[cell(x0, y0)] = next_orbit;
        std::size_t size = 1;
        while (!frontier.empty()) {
          auto [x, y] = frontier.front();
          frontier.pop();
          for (const permutation& e : h) {
            int nx = e.apply(x);
            int ny = e.apply(n1 + y) - n1;
            if (orbit_id[cell(nx, ny)] == cells) {
              orbit_id[cell(nx, ny)] = next_orbit;
              ++size;
              frontier.emplace(nx, ny);
            }
          }
        }
        orbit_sizes.push_back(size);
        ++next_orbit;
      }
    }
    info.orbit_of_origin = orbit_sizes[orbit_id[cell(1, 1)]];
    std::sort(orbit_sizes.begin(), orbit_sizes.end());
    info.orbit_sizes = std::move(orbit_sizes);

    if (info.orbit_sizes.size() > 1 && !info.diagonal_conjugate) ++report.violations;
    report.entries.push_back(std::move(info));
  }
  report.qualifying = report.entries.size();
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const product_subgroup_info& a, const product_subgroup_info& b) {
                     return a.order < b.order;
                   });
  return report;
}

}  // namespace chisini
