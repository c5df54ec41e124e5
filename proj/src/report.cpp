#include "pretrop/report.hpp"

#include <sstream>

#include <json.hpp>

namespace pretrop {

std::string rays_to_text(const std::vector<IntVec>& rays) {
  std::ostringstream os;
  for (const IntVec& r : rays) os << vec_to_string(r) << '\n';
  return os.str();
}

RunReport make_report(std::string algorithm, const Provenance& input,
                      const Options& options, PretropismResult result) {
  RunReport rep;
  rep.algorithm = std::move(algorithm);
  rep.input = input;
  rep.options = options;
  rep.result = std::move(result);
  rep.degree_sum_value =
      rep.result.rays.empty() ? Int(0) : degree_sum(rep.result.rays);
  return rep;
}

std::string stats_to_text(const RunReport& report) {
  std::ostringstream os;
  const Stats& stats = report.result.stats;
  os << "algorithm: " << report.algorithm << '\n';
  os << "input: " << report.input.kind << " " << report.input.detail << '\n';
  os << "pretropisms: " << report.result.rays.size() << '\n';
  os << "level  cones  intersections  contain.checks  contain.hits  "
        "edges.visited  pruned  trivial\n";
  for (std::size_t i = 0; i < report.result.levels.size(); ++i) {
    const auto& lv = report.result.levels[i];
    LevelStats ls;
    if (i < stats.per_level.size()) ls = stats.per_level[i];
    os << lv.level_index << "  " << lv.cone_count << "  " << ls.intersections
       << "  " << ls.containment_checks << "  " << ls.containment_hits << "  "
       << ls.edges_visited << "  " << ls.cones_pruned_horizontal << "  "
       << ls.cones_discarded_trivial << '\n';
  }
  const LevelStats t = stats.totals();
  os << "totals:  intersections=" << t.intersections
     << " containment_checks=" << t.containment_checks
     << " containment_hits=" << t.containment_hits
     << " edges_visited=" << t.edges_visited
     << " pruned=" << t.cones_pruned_horizontal
     << " trivial=" << t.cones_discarded_trivial << '\n';
  if (report.has_cost_bound)
    os << "cost_bound: " << report.cost_bound_value.get_str() << '\n';
  os << "degree_sum: " << report.degree_sum_value.get_str() << '\n';
  os << "wall_ms: " << report.wall_ms << '\n';
  return os.str();
}

std::string report_to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["algorithm"] = report.algorithm;
  j["input"] = {{"kind", report.input.kind},
                {"detail", report.input.detail}};
  j["options"] = {{"seed", report.options.seed},
                  {"jobs", report.options.jobs},
                  {"sort", report.options.sort},
                  {"first_positive", report.options.first_positive}};
  j["order"] = report.result.order;
  j["ray_count"] = report.result.rays.size();
  nlohmann::ordered_json rays = nlohmann::ordered_json::array();
  for (const IntVec& r : report.result.rays) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const Int& x : r) row.push_back(static_cast<long long>(x.get_si()));
    rays.push_back(std::move(row));
  }
  j["rays"] = std::move(rays);

  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  const Stats& stats = report.result.stats;
  for (std::size_t i = 0; i < report.result.levels.size(); ++i) {
    const auto& lv = report.result.levels[i];
    LevelStats ls;
    if (i < stats.per_level.size()) ls = stats.per_level[i];
    levels.push_back({{"level", lv.level_index},
                      {"cones", lv.cone_count},
                      {"intersections", ls.intersections},
                      {"containment_checks", ls.containment_checks},
                      {"containment_hits", ls.containment_hits},
                      {"edges_visited", ls.edges_visited},
                      {"cones_pruned_horizontal", ls.cones_pruned_horizontal},
                      {"cones_discarded_trivial",
                       ls.cones_discarded_trivial}});
  }
  j["levels"] = std::move(levels);

  const LevelStats t = stats.totals();
  j["totals"] = {{"intersections", t.intersections},
                 {"containment_checks", t.containment_checks},
                 {"containment_hits", t.containment_hits},
                 {"edges_visited", t.edges_visited},
                 {"cones_pruned_horizontal", t.cones_pruned_horizontal},
                 {"cones_discarded_trivial", t.cones_discarded_trivial}};
  if (!report.result.nodes_per_level.empty())
    j["nodes_per_level"] = report.result.nodes_per_level;
  if (report.has_cost_bound)
    j["cost_bound"] = report.cost_bound_value.get_str();
  j["degree_sum"] = report.degree_sum_value.get_str();
  if (report.result.degenerate_warning)
    j["warning"] = "first polytope has no edges; empty result";
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

}  // namespace pretrop
