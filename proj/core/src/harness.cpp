#include "efsub/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "efsub/families.hpp"
#include "efsub/formula.hpp"
#include "efsub/game.hpp"
#include "efsub/graph_io.hpp"
#include "efsub/pattern.hpp"
#include "json.hpp"

namespace efsub {

std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t derive_stream(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::uint64_t state = seed ^ h;
  next_random(state);
  return state;
}

namespace {

std::uint64_t rand_below(std::uint64_t& state, std::uint64_t m) { return next_random(state) % m; }

bool rand_bool(std::uint64_t& state, double prob) {
  return (next_random(state) >> 11) * 0x1.0p-53 < prob;
}

Graph random_graph(std::uint64_t& state, int n, double edge_prob) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rand_bool(state, edge_prob)) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph random_connected_graph(std::uint64_t& state, int n) {
  if (n <= 1) return Graph(n);
  for (int attempt = 0;; ++attempt) {
    double p = 0.1 * (1 + attempt % 5);
    Graph g = random_graph(state, n, p);
    if (g.is_connected()) return g;
  }
}

std::string Scenario::label() const {
  std::string out = id;
  if (!parameters.empty()) {
    out += "(";
    bool first = true;
    for (const auto& [k, v] : parameters) {
      if (!first) out += ",";
      first = false;
      out += k + "=" + std::to_string(v);
    }
    out += ")";
  }
  return out;
}

namespace {

long long param(const Scenario& s, const std::string& name, long long fallback) {
  auto it = s.parameters.find(name);
  return it == s.parameters.end() ? fallback : it->second;
}

std::string bstr(bool b) { return b ? "true" : "false"; }

// Calls fn on every graph over n labeled vertices whose edge set matches the
// mask enumeration; used by the exhaustive small-graph tiers.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  int m = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    fn(g);
  }
}

// Smallest pebble number with a Spoiler win in the unbounded game, capped;
// nullopt when the cap is reached first.
std::optional<int> width_capped(const Graph& g, const Graph& h, int cap) {
  for (int k = 1; k <= cap; ++k)
    if (solve_unbounded(g, h, k).spoiler_wins) return k;
  return std::nullopt;
}

Verdict run_twin_lemma(const Scenario& s) {
  Verdict v;
  v.claim =
      "deleting one member of a twin class of size t leaves a pair that needs "
      "at least t pebbles to separate in the unbounded game";
  v.expected = "width_W(G, G - twin) >= class size, for every class of size >= 2";
  int max_n = static_cast<int>(param(s, "max_n", 5));
  long long checked = 0;
  v.pass = true;
  for (int n = 2; n <= max_n && v.pass; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!v.pass || !g.is_connected()) return;
      TwinDecomposition td = twin_decomposition(g);
      if (td.sigma < 2) return;
      for (const auto& cls : td.classes) {
        int t = static_cast<int>(cls.size());
        if (t < 2) continue;
        ++checked;
        Graph rest = g.remove_vertex(cls[0]);
        auto w = width_capped(g, rest, t - 1);
        if (w) {  // a win below t pebbles violates the bound
          v.pass = false;
          v.witness["graph"] = to_graph6(g);
          v.witness["graph_minus_twin"] = to_graph6(rest);
          v.witness["class_size"] = std::to_string(t);
          v.witness["width_observed"] = std::to_string(*w);
          return;
        }
      }
    });
  v.observed["classes_checked"] = std::to_string(checked);
  v.skipped = checked == 0;
  return v;
}

Verdict run_sparkler_pair(const Scenario& s) {
  Verdict v;
  v.claim =
      "the glued bipartite/sparkler pair (G,H) differs exactly on containing "
      "the sparkler S_{q,p}, both sides exceed n vertices, and separating the "
      "pair needs at least a+s pebbles";
  v.expected =
      "S_{q,p} subgraph of G, not of H; v(G),v(H) > n; no Spoiler win below "
      "a+s pebbles";
  int q = static_cast<int>(param(s, "q", 3));
  int p = static_cast<int>(param(s, "p", 4));
  int n = static_cast<int>(param(s, "n", 3));
  bool check_width = param(s, "check_width", 0) != 0;

  GraphPair pair = generate_pair(FamilySpec::sparkler_lower_pair(q, p, n));
  Graph spark = generate(FamilySpec::sparkler(q, p));
  SparklerPairParams pr = sparkler_pair_params(q, p);

  bool in_g = find_subgraph(pair.g, spark).has_value();
  bool in_h = find_subgraph(pair.h, spark).has_value();
  bool big = pair.g.vertex_count() > n && pair.h.vertex_count() > n;
  v.observed["sparkler_in_g"] = bstr(in_g);
  v.observed["sparkler_in_h"] = bstr(in_h);
  v.observed["v_g"] = std::to_string(pair.g.vertex_count());
  v.observed["v_h"] = std::to_string(pair.h.vertex_count());
  v.observed["a"] = std::to_string(pr.a);
  v.observed["b"] = std::to_string(pr.b);
  v.pass = in_g && !in_h && big;

  if (check_width) {
    int bound = pr.a + pr.s;
    auto w = width_capped(pair.g, pair.h, bound - 1);
    bool survives = !w.has_value();
    v.observed["width_bound"] = std::to_string(bound);
    v.observed["duplicator_survives_below_bound"] = bstr(survives);
    v.observed["spoiler_wins_at_bound"] =
        bstr(solve_unbounded(pair.g, pair.h, bound).spoiler_wins);
    v.pass = v.pass && survives;
  }
  if (!v.pass) {
    v.witness["g"] = to_graph6(pair.g);
    v.witness["h"] = to_graph6(pair.h);
    v.witness["sparkler"] = to_graph6(spark);
  }
  return v;
}

Verdict run_star_theorem(const Scenario& s) {
  Verdict v;
  v.claim =
      "the subdivided stars M_{s,t} and M_{s-1,t} need depth s+1 and width s "
      "to separate, and the width-s star sentence decides K_{1,s} containment "
      "on connected graphs with more than 2s vertices";
  v.expected =
      "Duplicator survives the s-round s-pebble game; depth_D = s+1; "
      "width_W = s; zero sentence/subgraph mismatches";
  int ss = static_cast<int>(param(s, "s", 3));
  int t = static_cast<int>(param(s, "t", 4));
  int samples = static_cast<int>(param(s, "samples", 50));
  if (ss < 3 || t < 4) throw std::invalid_argument("star-theorem: requires s >= 3, t >= 4");

  Graph m1 = generate(FamilySpec::subdivided_star(ss, t));
  Graph m0 = generate(FamilySpec::subdivided_star(ss - 1, t));

  bool survives = !solve_bounded(m1, m0, ss, ss).spoiler_wins;
  int d = depth_D(m1, m0);
  int w = width_W(m1, m0);
  v.observed["duplicator_survives_s_rounds"] = bstr(survives);
  v.observed["depth"] = std::to_string(d);
  v.observed["width"] = std::to_string(w);

  FormulaPtr phi = phi_s_sentence(ss);
  std::uint64_t state = derive_stream(s.seed, s.label());
  int mismatches = 0;
  for (int i = 0; i < samples; ++i) {
    int n = 2 * ss + 1 + static_cast<int>(rand_below(state, 6));
    Graph g = random_connected_graph(state, n);
    bool lhs = evaluate(phi, g);
    bool rhs = g.max_degree() >= ss;
    if (lhs != rhs) {
      ++mismatches;
      if (v.witness.empty()) v.witness["dichotomy_graph"] = to_graph6(g);
    }
  }
  v.observed["dichotomy_mismatches"] = std::to_string(mismatches);

  v.pass = survives && d == ss + 1 && w == ss && mismatches == 0;
  if (!v.pass && v.witness.empty()) {
    v.witness["g"] = to_graph6(m1);
    v.witness["h"] = to_graph6(m0);
  }
  return v;
}

Verdict run_path_theorem(const Scenario& s) {
  Verdict v;
  v.claim =
      "cliques K_{l-1} and K_{l-2}, each with the same pendant star, differ "
      "on containing P_l yet resist separation below depth l-1 and width l-2";
  v.expected =
      "P_l subgraph of G only; no Spoiler win in the (l-2)-round (l-2)-pebble "
      "game nor in the unbounded (l-3)-pebble game";
  int l = static_cast<int>(param(s, "ell", 5));
  int n = static_cast<int>(param(s, "n", 5));
  if (l < 5) throw std::invalid_argument("path-theorem: requires ell >= 5");

  Graph g = generate(FamilySpec::clique_pendant_star(l - 1, n));
  Graph h = generate(FamilySpec::clique_pendant_star(l - 2, n));
  Graph pl = generate(FamilySpec::path(l));

  bool in_g = find_subgraph(g, pl).has_value();
  bool in_h = find_subgraph(h, pl).has_value();
  bool d_ok = !solve_bounded(g, h, l - 2, l - 2).spoiler_wins;
  bool w_ok = !solve_unbounded(g, h, l - 3).spoiler_wins;
  v.observed["path_in_g"] = bstr(in_g);
  v.observed["path_in_h"] = bstr(in_h);
  v.observed["depth"] = std::to_string(depth_D(g, h));
  v.observed["width"] = std::to_string(width_W(g, h));
  v.observed["duplicator_survives_depth_game"] = bstr(d_ok);
  v.observed["duplicator_survives_width_game"] = bstr(w_ok);
  v.pass = in_g && !in_h && d_ok && w_ok;
  if (!v.pass) {
    v.witness["g"] = to_graph6(g);
    v.witness["h"] = to_graph6(h);
  }
  return v;
}

Verdict run_structure_properties(const Scenario& s) {
  Verdict v;
  v.claim =
      "on random connected graphs: a K_{1,q} plus a P_{2qp} forces an S_{q,p} "
      "subgraph; max degree >= q+p plus a C_{p+1} or broken fan B_{p+2} "
      "forces an S_{q,p}; every S_{q,p}-free graph has max degree < q or at "
      "most 3*maxdeg^{2qp} vertices";
  v.expected = "zero counterexamples to any of the three implications";
  int q = static_cast<int>(param(s, "q", 3));
  int p = static_cast<int>(param(s, "p", 2));
  int samples = static_cast<int>(param(s, "samples", 200));
  if (q < 3 || p < 2) throw std::invalid_argument("structure-properties: requires q >= 3, p >= 2");

  Graph spark = generate(FamilySpec::sparkler(q, p));
  Graph cyc = generate(FamilySpec::cycle(p + 1));
  Graph fan = generate(FamilySpec::broken_fan(p + 2));
  Graph longpath = generate(FamilySpec::path(2 * q * p));

  int nmin = q + p;
  int nmax = std::min(2 * q * p + 2, 18);
  std::uint64_t state = derive_stream(s.seed, s.label());
  long long checked[3] = {0, 0, 0};
  long long violations[3] = {0, 0, 0};
  for (int i = 0; i < samples; ++i) {
    int n = nmin + static_cast<int>(rand_below(state, nmax - nmin + 1));
    Graph g = random_connected_graph(state, n);
    int dmax = g.max_degree();
    bool has_spark = find_subgraph(g, spark).has_value();

    if (dmax >= q && g.vertex_count() >= longpath.vertex_count() &&
        find_subgraph(g, longpath)) {
      ++checked[0];
      if (!has_spark) {
        ++violations[0];
        if (v.witness.empty()) v.witness["star_plus_path_graph"] = to_graph6(g);
      }
    }
    if (dmax >= q + p && (find_subgraph(g, cyc) || find_subgraph(g, fan))) {
      ++checked[1];
      if (!has_spark) {
        ++violations[1];
        if (v.witness.empty()) v.witness["cycle_or_fan_graph"] = to_graph6(g);
      }
    }
    if (!has_spark) {
      ++checked[2];
      bool size_ok = g.vertex_count() <=
                     3.0 * std::pow(static_cast<double>(std::max(dmax, 1)), 2.0 * q * p);
      if (dmax >= q && !size_ok) {
        ++violations[2];
        if (v.witness.empty()) v.witness["sparkler_free_graph"] = to_graph6(g);
      }
    }
  }
  v.observed["checked_star_path"] = std::to_string(checked[0]);
  v.observed["checked_cycle_fan"] = std::to_string(checked[1]);
  v.observed["checked_size_bound"] = std::to_string(checked[2]);
  v.observed["violations"] =
      std::to_string(violations[0] + violations[1] + violations[2]);
  v.pass = violations[0] + violations[1] + violations[2] == 0;
  return v;
}

Verdict run_theorem2_catalog(const Scenario& s) {
  Verdict v;
  v.claim =
      "every connected pattern F admits a certified width lower bound above "
      "2*v(F)/3 - 2";
  v.expected = "combined_lower_bound(F) > 2*v(F)/3 - 2 for every F in the tier";
  int max_l = static_cast<int>(param(s, "max_ell", 6));
  int samples = static_cast<int>(param(s, "samples", 500));
  if (max_l > 6) throw std::invalid_argument("theorem2-catalog: exhaustive tier capped at 6");

  long long checked = 0, violations = 0;
  auto check = [&](const Graph& g) {
    ++checked;
    Rational bound = combined_lower_bound(g);
    if (!(bound > Rational(2 * g.vertex_count() - 6, 3))) {
      ++violations;
      if (v.witness.empty()) {
        v.witness["pattern"] = to_graph6(g);
        v.witness["bound"] = bound.str();
      }
    }
  };
  for (int n = 2; n <= max_l; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (g.is_connected()) check(g);
    });
  std::uint64_t state = derive_stream(s.seed, s.label());
  for (int i = 0; i < samples; ++i) {
    int n = 7 + static_cast<int>(rand_below(state, 3));
    check(random_connected_graph(state, n));
  }
  v.observed["patterns_checked"] = std::to_string(checked);
  v.observed["violations"] = std::to_string(violations);
  v.pass = violations == 0;
  return v;
}

// The two-regime depth bound for a pair of same-order graphs, driven by the
// largest twin class of one side.
Rational pvv_bound(const Graph& g) {
  int n = g.vertex_count();
  TwinDecomposition td = twin_decomposition(g);
  if (Rational(td.sigma) <= Rational(n + 1, 2)) return Rational(n + 5, 2);
  if (td.largest_class_is_maximal_homogeneous) return Rational(td.sigma + 1);
  return Rational(td.sigma + 2);
}

Verdict run_pvv_property(const Scenario& s) {
  Verdict v;
  v.claim =
      "for non-isomorphic graphs A, B of the same order, depth_D(A,B) stays "
      "within the twin-class regime bound of each side: (v+5)/2 when the "
      "largest class has at most (v+1)/2 vertices, otherwise sigma+2, "
      "tightened to sigma+1 when every largest class is an inclusion-maximal "
      "homogeneous set";
  v.expected = "depth_D(A,B) <= min regime bound of A and of B, zero violations";
  int pairs = static_cast<int>(param(s, "pairs", 100));
  int max_n = static_cast<int>(param(s, "max_n", 6));
  std::uint64_t state = derive_stream(s.seed, s.label());

  long long checked = 0, violations = 0;
  for (int i = 0; i < pairs; ++i) {
    int n = 2 + static_cast<int>(rand_below(state, max_n - 1));
    Graph a = random_graph(state, n, 0.1 * (1 + rand_below(state, 5)));
    Graph b = random_graph(state, n, 0.1 * (1 + rand_below(state, 5)));
    if (isomorphic_brute(a, b)) {
      --i;
      continue;
    }
    ++checked;
    Rational d(depth_D(a, b));
    if (d > pvv_bound(a) || d > pvv_bound(b)) {
      ++violations;
      if (v.witness.empty()) {
        v.witness["a"] = to_graph6(a);
        v.witness["b"] = to_graph6(b);
        v.witness["depth"] = d.str();
      }
    }
  }
  v.observed["pairs_checked"] = std::to_string(checked);
  v.observed["violations"] = std::to_string(violations);
  v.pass = violations == 0;
  return v;
}

Verdict run_phi_ell(const Scenario& s) {
  Verdict v;
  v.claim =
      "every connected graph with more than 3*(l-2)^(l-2) vertices contains "
      "P_l or K_{1,l-1}, the disjunction the width-l statement asserts";
  v.expected = "zero sampled connected graphs above the threshold fail the disjunction";
  int l = static_cast<int>(param(s, "ell", 4));
  int samples = static_cast<int>(param(s, "samples", 100));
  if (l < 3) throw std::invalid_argument("phi-ell: requires ell >= 3");
  long long threshold = 3;
  for (int i = 0; i < l - 2; ++i) threshold *= l - 2;
  if (threshold > 120)
    throw std::invalid_argument("phi-ell: threshold exceeds the sampling scale");

  std::uint64_t state = derive_stream(s.seed, s.label());
  long long violations = 0;
  for (int i = 0; i < samples; ++i) {
    int n = static_cast<int>(threshold) + 1 + static_cast<int>(rand_below(state, 5));
    Graph g = random_connected_graph(state, n);
    if (!phi_ell_holds(g, l)) {
      ++violations;
      if (v.witness.empty()) v.witness["graph"] = to_graph6(g);
    }
  }
  v.observed["threshold"] = std::to_string(threshold);
  v.observed["samples"] = std::to_string(samples);
  v.observed["violations"] = std::to_string(violations);
  v.pass = violations == 0;
  return v;
}

}  // namespace

std::vector<std::string> scenario_ids() {
  return {"twin-lemma",           "sparkler-pair", "star-theorem", "path-theorem",
          "structure-properties", "theorem2-catalog", "pvv-property", "phi-ell"};
}

Scenario default_scenario(const std::string& id, std::uint64_t seed) {
  Scenario s;
  s.id = id;
  s.seed = seed;
  if (id == "twin-lemma")
    s.parameters = {{"max_n", 5}};
  else if (id == "sparkler-pair")
    s.parameters = {{"q", 3}, {"p", 4}, {"n", 3}, {"check_width", 1}};
  else if (id == "star-theorem")
    s.parameters = {{"s", 3}, {"t", 4}, {"samples", 50}};
  else if (id == "path-theorem")
    s.parameters = {{"ell", 5}, {"n", 5}};
  else if (id == "structure-properties")
    s.parameters = {{"q", 3}, {"p", 2}, {"samples", 200}};
  else if (id == "theorem2-catalog")
    s.parameters = {{"max_ell", 6}, {"samples", 500}};
  else if (id == "pvv-property")
    s.parameters = {{"pairs", 100}, {"max_n", 6}};
  else if (id == "phi-ell")
    s.parameters = {{"ell", 4}, {"samples", 100}};
  else
    throw std::invalid_argument("unknown scenario id '" + id + "'");
  return s;
}

std::vector<Scenario> default_manifest(std::uint64_t seed) {
  std::vector<Scenario> out;
  out.push_back(default_scenario("twin-lemma", seed));
  out.push_back(default_scenario("sparkler-pair", seed));
  for (auto [q, p, n] : {std::tuple{3, 4, 4}, {4, 5, 3}, {3, 5, 3}}) {
    Scenario s = default_scenario("sparkler-pair", seed);
    s.parameters = {{"q", q}, {"p", p}, {"n", n}, {"check_width", 0}};
    out.push_back(s);
  }
  out.push_back(default_scenario("star-theorem", seed));
  out.push_back(default_scenario("path-theorem", seed));
  out.push_back(default_scenario("structure-properties", seed));
  {
    Scenario s = default_scenario("structure-properties", seed);
    s.parameters["p"] = 3;
    out.push_back(s);
  }
  out.push_back(default_scenario("theorem2-catalog", seed));
  out.push_back(default_scenario("pvv-property", seed));
  out.push_back(default_scenario("phi-ell", seed));
  return out;
}

std::vector<Scenario> load_manifest(const std::string& path, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed manifest file: " + std::string(e.what()));
  }
  if (!j.is_array()) throw std::runtime_error("malformed manifest file: expected a JSON array");
  std::vector<Scenario> out;
  for (const auto& entry : j) {
    Scenario s = default_scenario(entry.at("id").get<std::string>(),
                                  entry.value("seed", seed));
    if (entry.contains("parameters"))
      for (const auto& [k, val] : entry.at("parameters").items())
        s.parameters[k] = val.get<long long>();
    out.push_back(std::move(s));
  }
  return out;
}

Verdict run_scenario(const Scenario& s) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  if (s.id == "twin-lemma")
    v = run_twin_lemma(s);
  else if (s.id == "sparkler-pair")
    v = run_sparkler_pair(s);
  else if (s.id == "star-theorem")
    v = run_star_theorem(s);
  else if (s.id == "path-theorem")
    v = run_path_theorem(s);
  else if (s.id == "structure-properties")
    v = run_structure_properties(s);
  else if (s.id == "theorem2-catalog")
    v = run_theorem2_catalog(s);
  else if (s.id == "pvv-property")
    v = run_pvv_property(s);
  else if (s.id == "phi-ell")
    v = run_phi_ell(s);
  else
    throw std::invalid_argument("unknown scenario id '" + s.id + "'");
  v.id = s.id;
  v.label = s.label();
  v.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<Verdict> run_all(const std::vector<Scenario>& scenarios, int jobs) {
  std::vector<Verdict> out(scenarios.size());
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < scenarios.size(); i = next.fetch_add(1))
      out[i] = run_scenario(scenarios[i]);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::string verdicts_to_json(const std::vector<Verdict>& verdicts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json j;
    j["id"] = v.id;
    j["scenario"] = v.label;
    j["claim"] = v.claim;
    j["expected"] = v.expected;
    j["observed"] = v.observed;
    j["pass"] = v.pass;
    j["skipped"] = v.skipped;
    j["runtime_seconds"] = v.runtime_seconds;
    if (!v.witness.empty()) j["witness"] = v.witness;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string verdicts_to_csv(const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  out << "scenario,pass,observed,runtime_seconds\n";
  for (const auto& v : verdicts) {
    out << v.label << "," << (v.pass ? "pass" : "fail") << ",";
    bool first = true;
    for (const auto& [k, val] : v.observed) {
      if (!first) out << ";";
      first = false;
      out << k << "=" << val;
    }
    out << "," << v.runtime_seconds << "\n";
  }
  return out.str();
}

}  // namespace efsub
