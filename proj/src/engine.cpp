#include "pretrop/engine.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace pretrop {

namespace {

unsigned effective_jobs(unsigned requested, std::size_t tasks) {
  unsigned jobs = requested ? requested : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (tasks < jobs) jobs = static_cast<unsigned>(tasks ? tasks : 1);
  return jobs;
}

// Runs fn(task_index, worker_index) for every task, pulling from a shared
// counter.  Deterministic outputs are the caller's business: results must
// be stored per task slot and merged in task order.
void run_tasks(std::size_t n, unsigned jobs,
               const std::function<void(std::size_t, unsigned)>& fn) {
  jobs = effective_jobs(jobs, n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i, w);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void validate_inputs(const std::vector<Polytope>& polytopes) {
  if (polytopes.size() < 2)
    throw std::invalid_argument("find_pretropisms: need at least 2 polytopes");
  const int d = polytopes[0].ambient_dim();
  for (const Polytope& p : polytopes)
    if (p.ambient_dim() != d)
      throw std::invalid_argument(
          "find_pretropisms: ambient dimension mismatch");
}

bool may_contain_first_positive(const Cone& c) {
  for (const IntVec& r : c.rays())
    if (sign_of(r[0]) > 0) return true;
  for (const IntVec& l : c.lineality())
    if (sign_of(l[0]) != 0) return true;
  return false;
}

}  // namespace

std::vector<Cone> explore_edge_skeleton(const Polytope& p, const Cone& c,
                                        std::uint64_t seed,
                                        LevelStats* stats) {
  if (c.trivial())
    throw std::invalid_argument("explore_edge_skeleton: trivial cone");
  if (c.ambient_dim() != p.ambient_dim())
    throw std::invalid_argument(
        "explore_edge_skeleton: ambient dimension mismatch");

  std::map<ConeKey, Cone> found;
  const auto& edges = p.edges();
  if (edges.empty()) return {};

  const IntVec r = interior_ray(c, seed);
  std::deque<int> queue;
  std::vector<char> scheduled(edges.size(), 0);
  for (int e : edges_touching(p, initial_face(p, r))) {
    queue.push_back(e);
    scheduled[e] = 1;
  }

  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    if (stats) ++stats->edges_visited;
    const Cone& edge_cone = edges[e].normal_cone;

    bool added = false;
    if (contains(edge_cone, c, stats)) {
      found.emplace(c.key(), c);
      added = true;
    } else {
      Cone meet = intersect(c, edge_cone, stats);
      if (!meet.trivial()) {
        found.emplace(meet.key(), std::move(meet));
        added = true;
      } else if (stats) {
        ++stats->cones_discarded_trivial;
      }
    }
    if (!added) continue;
    for (int nb : edges[e].neighbor_edges) {
      if (!scheduled[nb]) {
        scheduled[nb] = 1;
        queue.push_back(nb);
      }
    }
  }

  std::vector<Cone> out;
  out.reserve(found.size());
  for (auto& [key, cone] : found) out.push_back(std::move(cone));
  return out;
}

std::vector<Cone> horizontal_prune(std::vector<Cone> cones,
                                   LevelStats* stats) {
  std::map<ConeKey, Cone> dedup;
  for (auto& c : cones) dedup.emplace(c.key(), std::move(c));
  std::vector<Cone> list;
  list.reserve(dedup.size());
  for (auto& [key, cone] : dedup) list.push_back(std::move(cone));

  std::vector<char> dropped(list.size(), 0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const int dim_i = list[i].dim();
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (j == i || list[j].dim() < dim_i) continue;
      if (contains(list[j], list[i], stats)) {
        dropped[i] = 1;
        if (stats) ++stats->cones_pruned_horizontal;
        break;
      }
    }
  }
  std::vector<Cone> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!dropped[i]) out.push_back(std::move(list[i]));
  return out;
}

std::vector<int> sort_polytopes(const std::vector<Polytope>& polytopes) {
  std::vector<int> perm(polytopes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return polytopes[a].lineality_basis().size() <
           polytopes[b].lineality_basis().size();
  });
  return perm;
}

std::vector<IntVec> extract_rays(const std::vector<Cone>& cones,
                                 bool first_positive) {
  std::set<IntVec, bool (*)(const IntVec&, const IntVec&)> rays(lex_less);
  for (const Cone& c : cones) {
    for (const IntVec& r : c.canonical_rays()) rays.insert(r);
    for (const IntVec& l : c.canonical_lineality()) {
      rays.insert(l);
      IntVec neg(l.size());
      for (std::size_t j = 0; j < l.size(); ++j) neg[j] = -l[j];
      rays.insert(std::move(neg));
    }
  }
  std::vector<IntVec> out;
  for (const IntVec& r : rays) {
    if (first_positive && !(r.size() && sign_of(r[0]) > 0)) continue;
    out.push_back(r);
  }
  return out;
}

PretropismResult find_pretropisms(const std::vector<Polytope>& polytopes,
                                  const Options& options) {
  validate_inputs(polytopes);

  PretropismResult result;
  result.order.resize(polytopes.size());
  std::iota(result.order.begin(), result.order.end(), 0);
  if (options.sort) result.order = sort_polytopes(polytopes);

  std::vector<const Polytope*> ordered;
  ordered.reserve(polytopes.size());
  for (int idx : result.order) ordered.push_back(&polytopes[idx]);

  // Level 1: normal cones to the edges of the first polytope.
  std::map<ConeKey, Cone> level_map;
  for (const EdgeRecord& e : ordered[0]->edges())
    level_map.emplace(e.normal_cone.key(), e.normal_cone);
  std::vector<Cone> level;
  for (auto& [key, cone] : level_map) level.push_back(std::move(cone));
  result.stats.level(1);
  result.levels.push_back({1, level.size()});

  if (level.empty()) {
    // First polytope contributes no edges (a single point): empty result.
    result.degenerate_warning = true;
    return result;
  }

  for (std::size_t i = 2; i <= ordered.size(); ++i) {
    const Polytope& poly = *ordered[i - 1];
    std::vector<std::vector<Cone>> per_task(level.size());
    std::vector<LevelStats> per_worker(effective_jobs(options.jobs,
                                                      level.size()));
    run_tasks(level.size(), options.jobs, [&](std::size_t t, unsigned w) {
      per_task[t] =
          explore_edge_skeleton(poly, level[t], options.seed, &per_worker[w]);
    });
    LevelStats& lstats = result.stats.level(i);
    for (const LevelStats& s : per_worker) lstats.add(s);

    std::map<ConeKey, Cone> merged;
    for (auto& task_cones : per_task)
      for (auto& c : task_cones) merged.emplace(c.key(), std::move(c));
    std::vector<Cone> gathered;
    gathered.reserve(merged.size());
    for (auto& [key, cone] : merged) gathered.push_back(std::move(cone));

    level = horizontal_prune(std::move(gathered), &lstats);

    if (options.first_positive && options.first_positive_exploration) {
      std::vector<Cone> kept;
      for (auto& c : level)
        if (may_contain_first_positive(c)) kept.push_back(std::move(c));
      level = std::move(kept);
    }

    result.levels.push_back({static_cast<int>(i), level.size()});
    if (level.empty()) break;  // no pretropisms; later levels stay empty
  }

  result.cones = std::move(level);
  result.rays = extract_rays(result.cones, options.first_positive);
  return result;
}

PretropismGraphSizes probe_pretropism_graph_sizes(
    const std::vector<Polytope>& ordered) {
  PretropismGraphSizes data;
  if (ordered.empty()) return data;
  const auto& first_edges = ordered[0].edges();
  data.sizes.resize(first_edges.size());
  for (std::size_t i = 0; i < first_edges.size(); ++i) {
    const Cone& ce = first_edges[i].normal_cone;
    for (std::size_t j = 1; j < ordered.size(); ++j) {
      std::int64_t count = 0;
      for (const EdgeRecord& e : ordered[j].edges())
        if (!intersect(ce, e.normal_cone, nullptr).trivial()) ++count;
      data.sizes[i].push_back(count);
    }
  }
  return data;
}

Int cost_bound(const PretropismGraphSizes& recorded) {
  Int bound = 0;
  for (const auto& per_edge : recorded.sizes) {
    Int product = 1;
    for (std::int64_t s : per_edge) product *= Int(static_cast<long>(s));
    bound += product;
  }
  return bound;
}

Int degree_sum(const std::vector<IntVec>& rays) {
  Int total = 0;
  for (const IntVec& v : rays) {
    if (v.empty() || is_zero_vec(v))
      throw std::invalid_argument("degree_sum: zero ray");
    Int mx = v[0], mn = v[0];
    for (const Int& x : v) {
      if (x > mx) mx = x;
      if (x < mn) mn = x;
    }
    if (mn > 0) mn = 0;
    total += mx - mn;
  }
  return total;
}

}  // namespace pretrop
