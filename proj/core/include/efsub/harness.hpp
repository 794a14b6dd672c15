#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "efsub/graph.hpp"

namespace efsub {

// One verification scenario: a named claim checked at a fixed parameter
// point. Deterministic given (id, parameters, seed); sampled scenarios derive
// their RNG stream from the seed and the scenario label.
struct Scenario {
  std::string id;
  std::map<std::string, long long> parameters;
  std::uint64_t seed = 0;

  std::string label() const;  // id plus parameters, e.g. "star-theorem(s=3,t=4)"
};

struct Verdict {
  std::string id;
  std::string label;
  std::string claim;     // the property that was checked, in words
  std::string expected;  // the relation the observables must satisfy
  std::map<std::string, std::string> observed;
  bool pass = false;
  bool skipped = false;  // vacuous pass: the hypothesis never applied
  double runtime_seconds = 0.0;
  // Minimal reproducing witness on failure: graph6 strings and the violated
  // values, empty otherwise.
  std::map<std::string, std::string> witness;
};

// All known scenario ids, in canonical order.
std::vector<std::string> scenario_ids();

// Default parameters for a scenario id; throws std::invalid_argument on an
// unknown id.
Scenario default_scenario(const std::string& id, std::uint64_t seed);

// The full default manifest, one entry per scenario id plus the extra
// parameter points exercised by the standard verification run.
std::vector<Scenario> default_manifest(std::uint64_t seed);

// Manifest file: a JSON array of {"id": ..., "parameters": {...}} objects;
// entries missing "seed" inherit the given one.
std::vector<Scenario> load_manifest(const std::string& path, std::uint64_t seed);

// Runs one scenario; throws std::invalid_argument on an unknown id or bad
// parameters.
Verdict run_scenario(const Scenario& s);

// Runs scenarios across `jobs` worker threads; the result order matches the
// input order regardless of completion order.
std::vector<Verdict> run_all(const std::vector<Scenario>& scenarios, int jobs = 1);

std::string verdicts_to_json(const std::vector<Verdict>& verdicts);
std::string verdicts_to_csv(const std::vector<Verdict>& verdicts);

// Seeded Erdős–Rényi graph conditioned on connectivity by rejection, with the
// edge probability swept over {0.1, ..., 0.5} across attempts.
Graph random_connected_graph(std::uint64_t& state, int n);

// splitmix64 step; the harness's primitive RNG.
std::uint64_t next_random(std::uint64_t& state);

// Stream seed for (seed, label).
std::uint64_t derive_stream(std::uint64_t seed, const std::string& label);

}  // namespace efsub
