#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/graph.hpp"
#include "minorkit/minor.hpp"

namespace minorkit {

// Default search budgets; generous enough that the bundled runs never hit
// them on the sizes they target. Hitting one reports an incomplete run,
// never a wrong verdict.
inline constexpr uint64_t kDefaultMinorNodeBudget = 2'000'000'000;
inline constexpr uint64_t kDefaultColoringNodeBudget = 200'000'000;

struct RunOptions {
  int workers = 1;
  std::string report_path;  // empty: no file written
  bool resume = false;
  uint64_t minor_node_budget = kDefaultMinorNodeBudget;
  uint64_t coloring_node_budget = kDefaultColoringNodeBudget;
  int shards = 1;      // sliced runs: process items with index % shards == shard_index
  int shard_index = 0;
  double time_budget_sec = 0;  // 0: unlimited
  std::function<bool(uint64_t records_flushed)> stop_after;  // test hook for interruption
};

struct LemmaReport {
  enum class Status { kVerified, kFailed, kIncomplete };

  std::string lemma;
  std::string filter;
  uint64_t graphs_examined = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // (graph6, diagnostic), capped
  std::map<std::string, uint64_t> derived_counts;
  uint64_t wall_ms = 0;
  std::string cursor;
  Status status = Status::kVerified;

  bool verified() const { return status == Status::kVerified; }
};

/// Every cockade class over the two-independent-edge K8 with gluing-clique
/// size 4 and at most max_blocks blocks: edge count exactly 5n-14, no
/// (9,5)-family minor, and a (9,6)-family minor whenever the class has at
/// least nine vertices.
LemmaReport verify_cockade_tightness(int max_blocks, const RunOptions& options = {});

/// Every graph on n in {9,10} vertices with at least 5n-14 edges has a
/// (9,6)-family minor. Runs on the complement side.
LemmaReport verify_exfun_base(int n, const RunOptions& options = {});

/// Every 9-vertex graph with independence number 2 contains a 5-clique or
/// one of the derived minimal family members as a spanning subgraph.
LemmaReport verify_lemma_h9(const RunOptions& options = {});

/// Every graph on n in {8,9} vertices with minimum degree at least 5 has a
/// vertex whose deletion leaves a (7,6)-family minor.
LemmaReport verify_lemma_delta5(int n, const RunOptions& options = {});

/// Random graphs on 19 vertices with three planted 6-cliques, each owning a
/// private vertex; every 7-connected sample must contain a (9,6)-family
/// minor. Samples failing the connectivity filter are counted, not failed.
LemmaReport verify_three_cliques(int samples, uint64_t seed, const RunOptions& options = {});

struct WitnessResult {
  enum class Kind { kMinorModel, kColoring, kCounterexample, kBudgetExceeded };
  Kind kind = Kind::kCounterexample;
  std::optional<MinorModel> model;        // a (9,6)-family model
  std::optional<std::vector<int>> coloring;
  uint64_t minor_nodes = 0;
  uint64_t coloring_nodes = 0;
};

/// Dichotomy harness: a (9,6)-family minor model if one exists, otherwise a
/// proper coloring with at most max_colors colors, otherwise a
/// counterexample verdict. Accepts graphs on at most 20 vertices.
WitnessResult witness(const Graph& g, int max_colors = 8,
                      uint64_t minor_budget = kDefaultMinorNodeBudget,
                      uint64_t coloring_budget = kDefaultColoringNodeBudget);

struct RecheckResult {
  bool ok = false;
  uint64_t records = 0;
  std::string problem;  // first defect found, empty when ok
};

/// Offline re-verification of a report file: every persisted minor model is
/// checked with verify_model, every coloring with is_proper_coloring.
RecheckResult recheck_report(const std::string& path);

}  // namespace minorkit
