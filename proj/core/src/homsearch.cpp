#include "chisini/homsearch.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>
#include <utility>

#include "chisini/arith.hpp"
#include "chisini/error.hpp"

namespace chisini {

permutation evaluate_word(std::span<const permutation> images, const word& w) {
  permutation acc(images.empty() ? 0 : images.front().degree());
  for (int letter : w.letters) {
    std::size_t idx = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    if (letter == 0 || idx > images.size()) {
      raise(fault::index_out_of_range, "word letter " + std::to_string(letter) +
                                           " has no image among " +
                                           std::to_string(images.size()) + " generators");
    }
    const permutation& g = images[idx - 1];
    acc = (letter > 0) ? acc * g : acc * g.inverse();
  }
  return acc;
}

std::vector<permutation> canonical_images(std::span<const permutation> images) {
  if (images.empty()) return {};
  int n = images.front().degree();
  for (const auto& p : images) {
    if (p.degree() != n) raise(fault::invalid_argument, "mixed degrees in an image tuple");
  }
  std::vector<permutation> best(images.begin(), images.end());
  std::vector<permutation> cand(images.size());
  for (const permutation& g : symmetric_group(n)) {
    for (std::size_t i = 0; i < images.size(); ++i) cand[i] = images[i].conjugated_by(g);
    if (cand < best) best = cand;
  }
  return best;
}

namespace {

bool images_admissible(const marked_presentation& pres, std::span<const permutation> images,
                       int n_points, const admissible_options& opts, std::size_t full_order) {
  for (const word& r : pres.relators) {
    if (!evaluate_word(images, r).is_identity()) return false;
  }
  for (const word& gw : pres.geometric) {
    if (!evaluate_word(images, gw).is_transposition()) return false;
  }
  for (const auto& [w1, w2] : pres.cusps) {
    permutation p = evaluate_word(images, w1);
    permutation q = evaluate_word(images, w2);
    if (!p.is_transposition() || !q.is_transposition()) return false;
    if (commute(p, q)) return false;
    const permutation pair[] = {p, q};
    if (subgroup_closure(pair, n_points).size() != 6) return false;
  }
  for (const auto& [w1, w2] : pres.nodes) {
    permutation p = evaluate_word(images, w1);
    permutation q = evaluate_word(images, w2);
    if (!p.is_transposition() || !q.is_transposition()) return false;
    if (p == q || !commute(p, q)) return false;
  }
  if (opts.require_transitive) {
    if (!is_transitive(images, n_points)) return false;
    if (subgroup_closure(images, n_points).size() != full_order) return false;
  }
  return true;
}

void extend_assignment(const marked_presentation& pres,
                       const std::vector<std::vector<permutation>>& pools, std::size_t at,
                       std::vector<permutation>& images, int n_points,
                       const admissible_options& opts, std::size_t full_order,
                       std::set<std::vector<permutation>>& found) {
  if (at == pools.size()) {
    if (images_admissible(pres, images, n_points, opts, full_order)) {
      found.insert(canonical_images(images));
    }
    return;
  }
  for (const permutation& cand : pools[at]) {
    images.push_back(cand);
    extend_assignment(pres, pools, at + 1, images, n_points, opts, full_order, found);
    images.pop_back();
  }
}

}  // namespace

std::vector<hom_class> enumerate_admissible(const marked_presentation& pres, int n_points,
                                            const admissible_options& opts) {
  if (n_points < 1) raise(fault::invalid_argument, "need at least one point");
  std::vector<permutation> full = symmetric_group(n_points);
  std::vector<permutation> transpositions = all_transpositions(n_points);
  std::size_t full_order = full.size();

  auto verbatim_geometric = [&pres](int gen) {
    return std::any_of(pres.geometric.begin(), pres.geometric.end(), [gen](const word& w) {
      return w.letters.size() == 1 && w.letters.front() == gen;
    });
  };
  std::vector<std::vector<permutation>> pools(pres.generators.size());
  for (std::size_t i = 0; i < pools.size(); ++i) {
    pools[i] = verbatim_geometric(static_cast<int>(i) + 1) ? transpositions : full;
  }

  Int total = 1;
  for (const auto& pool : pools) total *= pool.size();
  if (total > Int(opts.budget)) {
    raise(fault::budget_exceeded,
          "raw assignment count " + total.str() + " exceeds budget " +
              std::to_string(opts.budget));
  }

  std::set<std::vector<permutation>> found;
  if (pools.empty()) {
    std::vector<permutation> none;
    if (images_admissible(pres, none, n_points, opts, full_order)) found.insert(none);
  } else {
    unsigned workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(pools.front().size()));
    std::vector<std::future<std::set<std::vector<permutation>>>> parts;
    parts.reserve(workers);
    for (unsigned part = 0; part < workers; ++part) {
      parts.push_back(std::async(std::launch::async, [&, part] {
        std::set<std::vector<permutation>> local;
        std::vector<permutation> images;
        for (std::size_t i = part; i < pools.front().size(); i += workers) {
          images.assign(1, pools.front()[i]);
          extend_assignment(pres, pools, 1, images, n_points, opts, full_order, local);
        }
        return local;
      }));
    }
    for (auto& part : parts) found.merge(part.get());
  }

  std::vector<hom_class> out;
  out.reserve(found.size());
  for (const auto& images : found) out.push_back({images, n_points});
  return out;  // set order = sorted canonical representatives
}

std::vector<std::size_t> pair_action_orbits(std::span<const permutation> f1,
                                            std::span<const permutation> f2) {
  if (f1.empty() || f1.size() != f2.size()) {
    raise(fault::invalid_argument, "need equally many nonzero images on both factors");
  }
  int n1 = f1.front().degree();
  int n2 = f2.front().degree();
  for (const auto& p : f1) {
    if (p.degree() != n1) raise(fault::invalid_argument, "mixed degrees on the first factor");
  }
  for (const auto& q : f2) {
    if (q.degree() != n2) raise(fault::invalid_argument, "mixed degrees on the second factor");
  }

  std::vector<std::size_t> parent(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&parent](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto cell = [n2](int x, int y) {
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n2) +
           static_cast<std::size_t>(y - 1);
  };
  for (std::size_t k = 0; k < f1.size(); ++k) {
    for (int x = 1; x <= n1; ++x) {
      for (int y = 1; y <= n2; ++y) {
        unite(cell(x, y), cell(f1[k].apply(x), f2[k].apply(y)));
      }
    }
  }
  std::vector<std::size_t> count(parent.size(), 0);
  for (std::size_t i = 0; i < parent.size(); ++i) ++count[find(i)];
  std::vector<std::size_t> sizes;
  for (std::size_t c : count) {
    if (c > 0) sizes.push_back(c);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool local_model_report::all_passed() const {
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return true;
}

local_model_report local_model_suite() {
  local_model_report rep;
  marked_presentation pres = marked_presentation::braid3();
  permutation a = permutation::transposition(3, 1, 2);
  permutation b = permutation::transposition(3, 2, 3);
  std::vector<permutation> images = {a, b};

  {
    permutation r = evaluate_word(images, pres.relators.front());
    rep.items.push_back({"braid_relation", r.is_identity(),
                         "a b a b' a' b' evaluates to " + r.cycle_string() +
                             " under a=(1 2), b=(2 3)"});
  }
  {
    std::vector<hom_class> classes = enumerate_admissible(pres, 3);
    bool ok = classes.size() == 1;
    std::string detail = std::to_string(classes.size()) + " admissible class(es) on 3 points";
    if (ok) {
      std::vector<permutation> expect = {permutation::transposition(3, 2, 3),
                                         permutation::transposition(3, 1, 2)};
      ok = classes.front().images == expect;
      if (!ok) detail += "; unexpected canonical representative";
    }
    rep.items.push_back({"unique_admissible_class", ok, std::move(detail)});
  }
  {
    std::vector<std::size_t> orbits = pair_action_orbits(images, images);
    std::string detail = "orbit sizes";
    for (std::size_t s : orbits) detail += " " + std::to_string(s);
    rep.items.push_back(
        {"cusp_pair_orbits", orbits == std::vector<std::size_t>{3, 6}, std::move(detail)});
  }
  {
    // the six off-diagonal points of the 3 x 3 grid carry a simply transitive
    // action of the diagonal subgroup
    auto embed = [](const permutation& p, const permutation& q) {
      std::vector<int> line;
      for (int x = 1; x <= p.degree(); ++x) line.push_back(p.apply(x));
      for (int y = 1; y <= q.degree(); ++y) line.push_back(p.degree() + q.apply(y));
      return permutation::from_one_line(line);
    };
    const permutation diag_gens[] = {embed(a, a), embed(b, b)};
    std::vector<permutation> diag = subgroup_closure(diag_gens, 6);

    std::vector<std::pair<int, int>> orbit;
    for (int x = 1; x <= 3; ++x) {
      for (int y = 1; y <= 3; ++y) {
        if (x != y) orbit.emplace_back(x, y);
      }
    }
    auto slot = [&orbit](int x, int y) {
      return static_cast<int>(std::find(orbit.begin(), orbit.end(), std::make_pair(x, y)) -
                              orbit.begin());
    };
    std::set<permutation> induced;
    for (const permutation& e : diag) {
      std::vector<int> line(orbit.size());
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        int x = e.apply(orbit[i].first);
        int y = e.apply(3 + orbit[i].second) - 3;
        line[i] = slot(x, y) + 1;
      }
      induced.insert(permutation::from_one_line(line));
    }
    std::vector<permutation> group(induced.begin(), induced.end());
    bool ok = induced.size() == 6 && is_transitive(group, 6);
    rep.items.push_back({"six_point_action", ok,
                         "induced group of order " + std::to_string(induced.size()) +
                             " on the six-point orbit"});
  }
  return rep;
}

}  // namespace chisini
