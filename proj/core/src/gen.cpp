#include "recore/gen.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include <json.hpp>

#include "recore/dsp_opt.hpp"
#include "recore/io.hpp"
#include "recore/oracle.hpp"

namespace recore {

namespace {

// Unbiased bounded sampling; mt19937_64 output is pinned by the standard,
// so results are reproducible across platforms.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, size_t count,
                                          std::mt19937_64& rng) {
  count = std::min(count, pool.size());
  for (size_t i = 0; i < count; ++i) {
    size_t j = i + static_cast<size_t>(uniform_below(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << bytes;
}

struct ReachCandidate {
  int32_t a, b;
  int length;
};

}  // namespace

GenResult generate_benchmarks(const Graph& g, const std::string& stem,
                              const std::filesystem::path& out_dir,
                              const GenOptions& options) {
  GenResult result;
  std::vector<StateSet> states;

  if (options.rule == Rule::TokenJumping) {
    MinimizeResult opt = minimize_dominating_set(g, options.variant,
                                                 OptStrategy::FromAbove,
                                                 options.minimize_timeout);
    if (!opt.proven)
      throw LimitError("minimum dominating set not proven within the budget");
    int k = options.k_override.value_or(opt.k);
    if (k < opt.k)
      throw InputError("requested size " + std::to_string(k) +
                       " is below the minimum " + std::to_string(opt.k));
    if (k > g.node_count()) throw InputError("requested size exceeds node count");
    EnumerateResult enumerated =
        enumerate_optimal(g, k, options.enumeration_cap, options.variant);
    if (!enumerated.complete)
      throw LimitError("solution enumeration hit the cap of " +
                       std::to_string(options.enumeration_cap));
    states = std::move(enumerated.sets);
    result.k_or_th = k;
  } else {
    if (!options.threshold.has_value())
      throw InputError("token addition-removal generation requires a threshold");
    EnumerateResult enumerated = enumerate_dominating_up_to(
        g, *options.threshold, options.enumeration_cap, options.variant);
    if (!enumerated.complete)
      throw LimitError("solution enumeration hit the cap of " +
                       std::to_string(options.enumeration_cap));
    states = std::move(enumerated.sets);
    result.k_or_th = *options.threshold;
  }

  SpaceGraph space = build_solution_space(std::move(states), options.rule, result.k_or_th);
  result.state_count = static_cast<int>(space.states.size());
  result.component_count = space.component_count;
  if (space.states.size() <= 1)
    result.notes.push_back("solution space has at most one state: no pairs");

  // Reachable candidates: pairs realizing their component's diameter.
  std::vector<std::vector<int32_t>> members(
      static_cast<size_t>(space.component_count));
  for (size_t i = 0; i < space.states.size(); ++i)
    members[static_cast<size_t>(space.component[i])].push_back(static_cast<int32_t>(i));

  std::vector<ReachCandidate> reach_pool;
  for (const auto& comp : members) {
    if (comp.size() < 2) continue;
    int diameter = 0;
    std::vector<ReachCandidate> at_diameter;
    for (int32_t src : comp) {
      std::vector<int32_t> dist = space.bfs(src);
      for (int32_t dst : comp) {
        if (dst <= src) continue;
        int d = dist[static_cast<size_t>(dst)];
        if (d > diameter) {
          diameter = d;
          at_diameter.clear();
        }
        if (d == diameter && d >= 1) at_diameter.push_back({src, dst, d});
      }
    }
    reach_pool.insert(reach_pool.end(), at_diameter.begin(), at_diameter.end());
  }
  if (reach_pool.empty())
    result.notes.push_back("no reachable pairs at positive distance");

  std::mt19937_64 rng(options.seed);
  std::vector<ReachCandidate> chosen_reach = sample_without_replacement(
      std::move(reach_pool), static_cast<size_t>(std::max(options.max_reach, 0)), rng);

  // Unreachable candidates: pairs with endpoints in distinct components.
  // Small cross-pair spaces are enumerated and sampled without replacement;
  // large ones are rejection-sampled for distinct pairs.
  std::vector<std::pair<int32_t, int32_t>> chosen_unreach;
  size_t want_unreach = static_cast<size_t>(std::max(options.max_unreach, 0));
  if (space.component_count >= 2 && want_unreach > 0) {
    double same = 0.0;
    for (const auto& comp : members)
      same += static_cast<double>(comp.size()) * (static_cast<double>(comp.size()) - 1) / 2;
    double total = static_cast<double>(space.states.size()) *
                   (static_cast<double>(space.states.size()) - 1) / 2;
    double cross = total - same;
    if (cross <= 200000.0) {
      std::vector<std::pair<int32_t, int32_t>> pool;
      for (size_t i = 0; i < space.states.size(); ++i)
        for (size_t j = i + 1; j < space.states.size(); ++j)
          if (space.component[i] != space.component[j])
            pool.emplace_back(static_cast<int32_t>(i), static_cast<int32_t>(j));
      chosen_unreach = sample_without_replacement(std::move(pool), want_unreach, rng);
    } else {
      size_t attempts = 0;
      while (chosen_unreach.size() < want_unreach && attempts < 1000 * want_unreach) {
        ++attempts;
        auto i = static_cast<int32_t>(uniform_below(rng, space.states.size()));
        auto j = static_cast<int32_t>(uniform_below(rng, space.states.size()));
        if (space.component[static_cast<size_t>(i)] ==
            space.component[static_cast<size_t>(j)])
          continue;
        auto pair = std::minmax(i, j);
        std::pair<int32_t, int32_t> candidate{pair.first, pair.second};
        if (std::find(chosen_unreach.begin(), chosen_unreach.end(), candidate) ==
            chosen_unreach.end())
          chosen_unreach.push_back(candidate);
      }
    }
  } else if (space.component_count < 2) {
    result.notes.push_back("single connected component: no unreachable pairs");
  }

  std::filesystem::create_directories(out_dir);
  std::string graph_file = stem + ".col";
  write_file(out_dir / graph_file, serialize_dimacs(g));

  auto emit = [&](const StateSet& start, const StateSet& goal, const std::string& name,
                  Verdict verdict, std::optional<int> length) {
    write_file(out_dir / name, serialize_dat(start, goal));
    result.instances.push_back(
        {graph_file, name, options.rule, result.k_or_th, verdict, length});
  };
  for (size_t i = 0; i < chosen_reach.size(); ++i)
    emit(space.states[static_cast<size_t>(chosen_reach[i].a)],
         space.states[static_cast<size_t>(chosen_reach[i].b)],
         stem + "_reach_" + std::to_string(i) + ".dat", Verdict::Reachable,
         chosen_reach[i].length);
  for (size_t i = 0; i < chosen_unreach.size(); ++i)
    emit(space.states[static_cast<size_t>(chosen_unreach[i].first)],
         space.states[static_cast<size_t>(chosen_unreach[i].second)],
         stem + "_unreach_" + std::to_string(i) + ".dat", Verdict::Unreachable,
         std::nullopt);

  nlohmann::ordered_json manifest;
  manifest["generator_version"] = kGeneratorVersion;
  manifest["seed"] = options.seed;
  manifest["graph"] = graph_file;
  manifest["rule"] = to_string(options.rule);
  manifest[options.rule == Rule::TokenJumping ? "k" : "th"] = result.k_or_th;
  manifest["states"] = result.state_count;
  manifest["components"] = result.component_count;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const GeneratedInstance& inst : result.instances) {
    nlohmann::ordered_json row;
    row["graph"] = inst.graph_file;
    row["dat"] = inst.dat_file;
    row["rule"] = to_string(inst.rule);
    row[inst.rule == Rule::TokenJumping ? "k" : "th"] = inst.k_or_th;
    row["expected_verdict"] = to_string(inst.expected_verdict);
    if (inst.expected_length.has_value())
      row["expected_length"] = *inst.expected_length;
    else
      row["expected_length"] = nullptr;
    row["seed"] = options.seed;
    row["generator_version"] = kGeneratorVersion;
    list.push_back(std::move(row));
  }
  manifest["instances"] = std::move(list);
  result.manifest_json = manifest.dump(2) + "\n";
  write_file(out_dir / "manifest.json", result.manifest_json);
  return result;
}

}  // namespace recore
