#include "minorkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <iomanip>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "minorkit/canonical.hpp"
#include "minorkit/constructions.hpp"
#include "minorkit/embed.hpp"
#include "minorkit/enumerate.hpp"
#include "minorkit/graph6.hpp"
#include "minorkit/random.hpp"
#include "minorkit/report.hpp"
#include "minorkit/stats.hpp"
#include "minorkit/version.hpp"

namespace minorkit {

namespace {

using nlohmann::json;

json model_json(const MinorModel& model) {
  json sets = json::array();
  for (const VertexSet& bs : model.branch_sets) sets.push_back(bs.to_vector());
  json missing = json::array();
  for (auto [a, b] : model.missing_pairs) missing.push_back(json::array({a, b}));
  return json{{"sets", sets}, {"missing", missing}};
}

std::optional<MinorModel> model_from_json(const json& j) {
  if (!j.contains("sets") || !j.contains("missing")) return std::nullopt;
  MinorModel m;
  for (const auto& set : j["sets"]) {
    VertexSet bs;
    for (int v : set) bs = bs.with(v);
    m.branch_sets.push_back(bs);
  }
  for (const auto& pair : j["missing"]) m.missing_pairs.emplace_back(pair[0], pair[1]);
  return m;
}

struct Item {
  std::string key;
  Graph graph;
};

struct ItemOutcome {
  enum class Verdict { kOk, kFail, kUndecided };
  Verdict verdict = Verdict::kOk;
  std::string diagnostic;
  json witness = json::object();
  std::map<std::string, uint64_t> counts;
};

// Shared driver: items are checked by a stateless worker pool and records
// are flushed strictly in item order, so the report bytes do not depend on
// the worker count. An undecided item (search budget) stops the run without
// a trailer; so do the time budget and the interruption hook. Resumed runs
// refuse mismatched headers, fold the already-persisted records, and
// continue after the cursor.
class Driver {
public:
  Driver(std::string lemma, std::string filter, std::vector<Item> items, const RunOptions& options,
         std::function<ItemOutcome(const Item&)> checker)
      : lemma_(std::move(lemma)), filter_(std::move(filter)), items_(std::move(items)),
        options_(options), checker_(std::move(checker)) {}

  LemmaReport run() {
    const auto started = std::chrono::steady_clock::now();
    LemmaReport report;
    report.lemma = lemma_;
    report.filter = filter_;

    json header{{"record", "header"}, {"tool", kToolName},   {"version", kVersion},
                {"lemma", lemma_},    {"filter", filter_},   {"shards", options_.shards},
                {"shard_index", options_.shard_index}};
    const std::string header_line = header.dump();

    size_t start_index = 0;
    std::unique_ptr<ReportWriter> writer;
    if (!options_.report_path.empty()) {
      if (options_.resume) {
        // Fold whatever a previous run persisted.
        try {
          ReportFile existing = read_report_file(options_.report_path);
          if (existing.header == header_line) {
            for (const std::string& line : existing.records) fold_record(report, line);
          }
        } catch (const std::runtime_error&) {
          // no usable file yet
        }
      }
      writer = std::make_unique<ReportWriter>(options_.report_path, header_line, options_.resume);
      if (writer->completed()) {
        report.graphs_examined = writer->records_written();
        report.cursor = writer->cursor();
        report.status = report.failures.empty() ? LemmaReport::Status::kVerified
                                                : LemmaReport::Status::kFailed;
        return report;
      }
      if (!writer->cursor().empty()) {
        auto it = std::find_if(items_.begin(), items_.end(),
                               [&](const Item& item) { return item.key == writer->cursor(); });
        if (it == items_.end())
          throw std::runtime_error("resume cursor not found in the enumeration stream");
        start_index = static_cast<size_t>(it - items_.begin()) + 1;
      }
    }

    const size_t total = items_.size();
    std::vector<std::unique_ptr<ItemOutcome>> slots(total);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{start_index};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
      while (!stop.load(std::memory_order_relaxed)) {
        const size_t idx = next.fetch_add(1);
        if (idx >= total) break;
        auto outcome = std::make_unique<ItemOutcome>(checker_(items_[idx]));
        {
          std::lock_guard<std::mutex> lock(mu);
          slots[idx] = std::move(outcome);
        }
        cv.notify_all();
      }
    };

    int workers = std::max(1, options_.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);

    bool interrupted = false;
    bool undecided = false;
    {
      std::unique_lock<std::mutex> lock(mu);
      for (size_t idx = start_index; idx < total; ++idx) {
        cv.wait(lock, [&] { return slots[idx] != nullptr; });
        ItemOutcome outcome = std::move(*slots[idx]);
        slots[idx].reset();
        if (outcome.verdict == ItemOutcome::Verdict::kUndecided) {
          undecided = true;
          break;
        }
        const std::string line = record_line(items_[idx], outcome);
        fold_record(report, line);
        if (writer) writer->append_record(items_[idx].key, line);
        if (options_.stop_after && options_.stop_after(report.graphs_examined)) {
          interrupted = true;
          break;
        }
        if (options_.time_budget_sec > 0) {
          const double elapsed =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
          if (elapsed > options_.time_budget_sec) {
            interrupted = true;
            break;
          }
        }
      }
    }
    stop.store(true);
    cv.notify_all();
    for (auto& t : pool) t.join();

    if (undecided || interrupted) {
      report.status = LemmaReport::Status::kIncomplete;
    } else {
      report.status = report.failures.empty() ? LemmaReport::Status::kVerified
                                              : LemmaReport::Status::kFailed;
      if (writer) {
        json counts = json::object();
        for (const auto& [k, v] : report.derived_counts) counts[k] = v;
        json trailer{{"record", "trailer"},
                     {"examined", report.graphs_examined},
                     {"failures", static_cast<uint64_t>(failure_total_)},
                     {"cursor", report.cursor},
                     {"counts", counts}};
        writer->finish(trailer.dump());
      }
    }
    report.wall_ms = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              started)
            .count());
    return report;
  }

private:
  static constexpr size_t kMaxStoredFailures = 100;

  std::string record_line(const Item& item, const ItemOutcome& outcome) const {
    json record{{"record", "graph"},
                {"key", item.key},
                {"g6", to_graph6(item.graph)},
                {"verdict", outcome.verdict == ItemOutcome::Verdict::kOk ? "ok" : "fail"},
                {"witness", outcome.witness}};
    if (outcome.verdict == ItemOutcome::Verdict::kFail) record["diagnostic"] = outcome.diagnostic;
    if (!outcome.counts.empty()) {
      json counts = json::object();
      for (const auto& [k, v] : outcome.counts) counts[k] = v;
      record["counts"] = counts;
    }
    return record.dump();
  }

  void fold_record(LemmaReport& report, const std::string& line) {
    json record = json::parse(line);
    ++report.graphs_examined;
    report.cursor = record.value("key", "");
    if (record.value("verdict", "") == "fail") {
      ++failure_total_;
      if (report.failures.size() < kMaxStoredFailures)
        report.failures.emplace_back(record.value("g6", ""), record.value("diagnostic", ""));
    }
    if (record.contains("counts"))
      for (auto& [k, v] : record["counts"].items())
        report.derived_counts[k] += v.get<uint64_t>();
  }

  std::string lemma_;
  std::string filter_;
  std::vector<Item> items_;
  RunOptions options_;
  std::function<ItemOutcome(const Item&)> checker_;
  size_t failure_total_ = 0;
};

std::vector<Item> shard_items(std::vector<Item> items, const RunOptions& options) {
  if (options.shards <= 1) return items;
  std::vector<Item> out;
  for (size_t i = 0; i < items.size(); ++i)
    if (static_cast<int>(i % static_cast<size_t>(options.shards)) == options.shard_index)
      out.push_back(std::move(items[i]));
  return out;
}

// Items from a complement-side enumeration: the key is the enumerated
// graph's own bytes (it is canonically labeled), the examined graph is its
// complement.
std::vector<Item> complement_side_items(const GraphFilter& filter, const RunOptions& options) {
  std::vector<Item> items;
  enumerate_graphs(filter, [&](const Graph& c) {
    items.push_back(Item{to_graph6(c), complement(c)});
  });
  return shard_items(std::move(items), options);
}

}  // namespace

LemmaReport verify_cockade_tightness(int max_blocks, const RunOptions& options) {
  if (max_blocks < 1 || max_blocks > 4)
    throw std::invalid_argument("cockade verification supports 1..4 blocks");

  const Graph base = complete_minus(8, MissingEdgePattern::kTwoIndependent);
  std::vector<Item> items;
  for (const Graph& c : all_cockades(base, 4, max_blocks)) {
    Graph g = canonical_graph(c);
    items.push_back(Item{to_graph6(g), g});
  }
  items = shard_items(std::move(items), options);

  auto checker = [options](const Item& item) {
    ItemOutcome out;
    const Graph& g = item.graph;
    const int n = g.order();
    if (g.edge_count() != 5 * n - 14) {
      out.verdict = ItemOutcome::Verdict::kFail;
      out.diagnostic = "edge count differs from 5n-14";
      return out;
    }
    if (n < 9) {
      out.counts["k96_skipped_below_9"] = 1;
      out.witness["skipped"] = "order below 9";
      return out;
    }
    MinorSearchResult none_check = find_minor(g, MinorTarget::family(9, 5), options.minor_node_budget);
    if (!none_check.decided) {
      out.verdict = ItemOutcome::Verdict::kUndecided;
      return out;
    }
    if (none_check.model) {
      out.verdict = ItemOutcome::Verdict::kFail;
      out.diagnostic = "unexpected (9,5)-family model";
      out.witness["k95"] = json{{"target", "family t=9 s=5"}, {"model", model_json(*none_check.model)}};
      return out;
    }
    out.witness["k95"] = json{{"search", "exhausted"}, {"nodes", none_check.nodes}};
    out.counts["k95_search_nodes"] = none_check.nodes;

    MinorSearchResult some_check = find_minor(g, MinorTarget::family(9, 6), options.minor_node_budget);
    if (!some_check.decided) {
      out.verdict = ItemOutcome::Verdict::kUndecided;
      return out;
    }
    if (!some_check.model) {
      out.verdict = ItemOutcome::Verdict::kFail;
      out.diagnostic = "no (9,6)-family model";
      return out;
    }
    out.witness["k96"] = json{{"target", "family t=9 s=6"}, {"model", model_json(*some_check.model)}};
    return out;
  };

  std::ostringstream filter;
  filter << "cockade base=" << to_graph6(canonical_graph(base)) << " k=4 max_blocks=" << max_blocks;
  Driver driver("cockade", filter.str(), std::move(items), options, checker);
  return driver.run();
}

LemmaReport verify_exfun_base(int n, const RunOptions& options) {
  if (n != 9 && n != 10) throw std::invalid_argument("extremal base cases are n=9 and n=10");
  const int max_missing = n * (n - 1) / 2 - (5 * n - 14);

  GraphFilter filter;
  filter.n = n;
  filter.max_edges = max_missing;
  std::vector<Item> items = complement_side_items(filter, options);

  auto checker = [options](const Item& item) {
    ItemOutcome out;
    MinorSearchResult r = find_minor(item.graph, MinorTarget::family(9, 6), options.minor_node_budget);
    if (!r.decided) {
      out.verdict = ItemOutcome::Verdict::kUndecided;
      return out;
    }
    if (!r.model) {
      out.verdict = ItemOutcome::Verdict::kFail;
      out.diagnostic = "no (9,6)-family model despite 5n-14 edges";
      return out;
    }
    out.witness["k96"] = json{{"target", "family t=9 s=6"}, {"model", model_json(*r.model)}};
    return out;
  };

  std::ostringstream desc;
  desc << "exfun n=" << n << " complement-side " << filter.describe();
  Driver driver(n == 9 ? "exfun9" : "exfun10", desc.str(), std::move(items), options, checker);
  return driver.run();
}

LemmaReport verify_lemma_h9(const RunOptions& options) {
  GraphFilter filter;
  filter.n = 9;
  filter.triangle_free = true;

  std::vector<Item> raw = complement_side_items(filter, options);
  std::vector<Item> items;
  for (Item& item : raw) {
    // independence number 2 exactly: the complement must have an edge
    if (item.graph.edge_count() < 36) items.push_back(std::move(item));
  }

  const std::vector<Graph> family = derive_minimal_alpha2_family();

  auto checker = [options, &family](const Item& item) {
    ItemOutcome out;
    const Graph& h = item.graph;
    if (clique_number(h) >= 5) {
      out.counts["omega_ge5"] = 1;
      out.witness["branch"] = "clique";
      return out;
    }
    for (size_t i = 0; i < family.size(); ++i) {
      if (auto embedding = find_subgraph_embedding(h, family[i], /*spanning=*/true)) {
        out.counts["embedded"] = 1;
        out.witness["branch"] = "spanning member";
        out.witness["member"] = static_cast<int>(i);
        out.witness["embedding"] = *embedding;
        return out;
      }
    }
    out.verdict = ItemOutcome::Verdict::kFail;
    out.diagnostic = "neither a 5-clique nor a spanning family member";
    (void)options;
    return out;
  };

  std::ostringstream desc;
  desc << "h9 alpha=2 complement-side " << filter.describe();
  Driver driver("h9", desc.str(), std::move(items), options, checker);
  LemmaReport report = driver.run();
  report.derived_counts["family_size"] = family.size();
  return report;
}

LemmaReport verify_lemma_delta5(int n, const RunOptions& options) {
  if (n != 8 && n != 9) throw std::invalid_argument("minimum-degree lemma cases are n=8 and n=9");

  GraphFilter filter;
  filter.n = n;
  filter.max_degree = n - 6;
  std::vector<Item> items = complement_side_items(filter, options);

  auto checker = [options](const Item& item) {
    ItemOutcome out;
    const Graph& h = item.graph;
    uint64_t nodes = 0;
    for (int v = 0; v < h.order(); ++v) {
      MinorSearchResult r =
          find_minor(delete_vertex(h, v), MinorTarget::family(7, 6), options.minor_node_budget);
      nodes += r.nodes;
      if (!r.decided) {
        out.verdict = ItemOutcome::Verdict::kUndecided;
        return out;
      }
      if (r.model) {
        out.witness["deleted_vertex"] = v;
        out.witness["k76"] = json{{"target", "family t=7 s=6"}, {"model", model_json(*r.model)}};
        return out;
      }
    }
    out.verdict = ItemOutcome::Verdict::kFail;
    out.diagnostic = "no vertex deletion leaves a (7,6)-family minor";
    out.witness["search_nodes"] = nodes;
    return out;
  };

  std::ostringstream desc;
  desc << "delta5 n=" << n << " complement-side " << filter.describe();
  Driver driver(n == 8 ? "delta5-8" : "delta5-9", desc.str(), std::move(items), options, checker);
  return driver.run();
}

namespace {

Graph three_clique_sample(std::mt19937_64& rng, std::array<VertexSet, 3>& cliques_out) {
  const int n = 19;
  const int o12 = static_cast<int>(rng() % 3);
  const int o13 = static_cast<int>(rng() % 3);
  const int o23 = static_cast<int>(rng() % 3);

  std::vector<int> l1, l2, l3;
  for (int v = 0; v < 6; ++v) l1.push_back(v);
  int next = 6;
  for (int i = 0; i < o12; ++i) l2.push_back(l1[i]);
  while (static_cast<int>(l2.size()) < 6) l2.push_back(next++);
  // L3 borrows from L1 beyond L2's share and from L2's fresh block, so the
  // triple intersection stays empty and every clique keeps private vertices.
  for (int i = 0; i < o13; ++i) l3.push_back(l1[o12 + i]);
  for (int i = 0; i < o23; ++i) l3.push_back(l2[o12 + i]);
  while (static_cast<int>(l3.size()) < 6) l3.push_back(next++);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < 0.6) edges.emplace_back(i, j);
  Graph g = Graph::from_edges(n, edges);
  for (const auto& clique : {l1, l2, l3})
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j) g = g.with_edge(clique[i], clique[j]);

  auto to_set = [](const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  };
  cliques_out = {to_set(l1), to_set(l2), to_set(l3)};
  return g;
}

}  // namespace

LemmaReport verify_three_cliques(int samples, uint64_t seed, const RunOptions& options) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  std::mt19937_64 rng(seed);
  std::vector<Item> items;
  for (int i = 0; i < samples; ++i) {
    std::array<VertexSet, 3> cliques;
    Graph g = three_clique_sample(rng, cliques);
    // condition: each clique owns a vertex outside the other two
    for (int a = 0; a < 3; ++a) {
      VertexSet priv = cliques[a] - (cliques[(a + 1) % 3] | cliques[(a + 2) % 3]);
      if (priv.empty()) throw std::logic_error("planted cliques lost a private vertex");
    }
    std::ostringstream key;
    key << "s" << std::setw(6) << std::setfill('0') << i;
    items.push_back(Item{key.str(), g});
  }
  items = shard_items(std::move(items), options);

  auto checker = [options](const Item& item) {
    ItemOutcome out;
    const Graph& g = item.graph;
    if (vertex_connectivity(g) < 7) {
      out.counts["connectivity_filtered"] = 1;
      out.witness["skipped"] = "connectivity below 7";
      return out;
    }
    out.counts["checked"] = 1;
    MinorSearchResult r = find_minor(g, MinorTarget::family(9, 6), options.minor_node_budget);
    if (!r.decided) {
      out.verdict = ItemOutcome::Verdict::kUndecided;
      return out;
    }
    if (!r.model) {
      out.verdict = ItemOutcome::Verdict::kFail;
      out.diagnostic = "7-connected sample without a (9,6)-family model";
      return out;
    }
    out.witness["k96"] = json{{"target", "family t=9 s=6"}, {"model", model_json(*r.model)}};
    return out;
  };

  std::ostringstream desc;
  desc << "three-cliques samples=" << samples << " seed=" << seed << " n=19 p=0.6";
  Driver driver("three-cliques", desc.str(), std::move(items), options, checker);
  LemmaReport report = driver.run();
  report.derived_counts["samples"] = static_cast<uint64_t>(samples);
  return report;
}

WitnessResult witness(const Graph& g, int max_colors, uint64_t minor_budget,
                      uint64_t coloring_budget) {
  if (g.order() > 20) throw std::invalid_argument("witness accepts at most 20 vertices");
  WitnessResult out;
  MinorSearchResult minor = find_minor(g, MinorTarget::family(9, 6), minor_budget);
  out.minor_nodes = minor.nodes;
  if (!minor.decided) {
    out.kind = WitnessResult::Kind::kBudgetExceeded;
    return out;
  }
  if (minor.model) {
    out.kind = WitnessResult::Kind::kMinorModel;
    out.model = std::move(minor.model);
    return out;
  }
  BoundedColoring coloring = chromatic_at_most_bounded(g, max_colors, coloring_budget);
  out.coloring_nodes = coloring.nodes;
  if (!coloring.decided) {
    out.kind = WitnessResult::Kind::kBudgetExceeded;
    return out;
  }
  if (coloring.coloring) {
    out.kind = WitnessResult::Kind::kColoring;
    out.coloring = std::move(coloring.coloring);
    return out;
  }
  out.kind = WitnessResult::Kind::kCounterexample;
  return out;
}

RecheckResult recheck_report(const std::string& path) {
  RecheckResult out;
  ReportFile file = read_report_file(path);
  for (const std::string& line : file.records) {
    ++out.records;
    json record = json::parse(line);
    const std::string g6 = record.value("g6", "");
    Graph g;
    try {
      g = from_graph6(g6);
    } catch (const Graph6Error&) {
      out.problem = "record with unreadable graph: " + g6;
      return out;
    }
    if (!record.contains("witness")) continue;
    const json& witness = record["witness"];
    for (const auto& key : {"k95", "k96", "k76"}) {
      if (!witness.contains(key)) continue;
      const json& entry = witness[key];
      if (!entry.contains("model")) continue;
      auto model = model_from_json(entry["model"]);
      int t = 9, s = 6;
      std::istringstream target(entry.value("target", ""));
      std::string word;
      while (target >> word) {
        if (word.rfind("t=", 0) == 0) t = std::stoi(word.substr(2));
        if (word.rfind("s=", 0) == 0) s = std::stoi(word.substr(2));
      }
      Graph host = g;
      if (witness.contains("deleted_vertex"))
        host = delete_vertex(g, witness["deleted_vertex"].get<int>());
      if (!model || !verify_model(host, *model, MinorTarget::family(t, s)).ok) {
        out.problem = "invalid minor model on " + g6;
        return out;
      }
    }
    if (witness.contains("coloring")) {
      std::vector<int> colors = witness["coloring"].get<std::vector<int>>();
      const int k = witness.value("max_colors", 8);
      if (!is_proper_coloring(g, colors, k)) {
        out.problem = "improper coloring on " + g6;
        return out;
      }
    }
    if (witness.contains("embedding") && record.contains("witness")) {
      // spanning-member embeddings are re-checked against the derived family
      // lazily by index
      static const std::vector<Graph> family = derive_minimal_alpha2_family();
      const size_t member = witness.value("member", 0);
      if (member >= family.size()) {
        out.problem = "embedding names an unknown family member on " + g6;
        return out;
      }
      std::vector<int> embedding = witness["embedding"].get<std::vector<int>>();
      const Graph& pattern = family[member];
      if (static_cast<int>(embedding.size()) != pattern.order()) {
        out.problem = "embedding size mismatch on " + g6;
        return out;
      }
      for (auto [a, b] : pattern.edge_list())
        if (!g.has_edge(embedding[a], embedding[b])) {
          out.problem = "embedding misses an edge on " + g6;
          return out;
        }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace minorkit
