#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "recore/encode/encoder.hpp"
#include "recore/graph.hpp"
#include "recore/instance.hpp"
#include "recore/reach.hpp"

namespace recore {

inline constexpr const char* kGeneratorVersion = "1.0.0";

struct GenOptions {
  Rule rule = Rule::TokenJumping;
  int max_reach = 10;
  int max_unreach = 10;
  uint64_t seed = 0;
  // TJ: enumerate at this size instead of the proven optimum; must be >= k*.
  std::optional<int> k_override;
  // TAR (experimental): state space is every dominating set of size <= threshold.
  std::optional<int> threshold;
  int enumeration_cap = 200000;
  double minimize_timeout = 600.0;
  encode::EncodingVariant variant = encode::EncodingVariant::Base1;
};

struct GeneratedInstance {
  std::string graph_file;
  std::string dat_file;
  Rule rule = Rule::TokenJumping;
  int k_or_th = 0;
  Verdict expected_verdict = Verdict::Unknown;
  std::optional<int> expected_length;  // reachable instances only
};

struct GenResult {
  std::vector<GeneratedInstance> instances;
  int k_or_th = 0;  // k (TJ) or threshold (TAR)
  int state_count = 0;
  int component_count = 0;
  std::vector<std::string> notes;
  std::string manifest_json;  // exact bytes of <out_dir>/manifest.json
};

// The three-step generation procedure: enumerate the size-k* dominating
// sets, build the solution space, then derive up to max_reach reachable
// pairs realizing their component's diameter and up to max_unreach pairs
// from distinct components (seeded uniform choices). Writes <stem>.col,
// one .dat per instance and manifest.json into out_dir; byte-stable for a
// fixed seed.
GenResult generate_benchmarks(const Graph& g, const std::string& stem,
                              const std::filesystem::path& out_dir,
                              const GenOptions& options = {});

}  // namespace recore
