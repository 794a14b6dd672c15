#pragma once

#include <string>
#include <utility>

#include "efsub/graph.hpp"

namespace efsub {

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Star,
  Sparkler,
  BrokenFan,
  SubdividedStar,
  SparklerLowerPair,
  CliquePendantPath,
  CliquePendantStar,
  GluedCliqueSparkler,
};

// Declarative description of a graph family instance. Parameters are stored
// positionally; use the named factories.
//
// Vertex layouts are fixed so tests can address specific vertices:
//   path P_l:            0-1-...-(l-1)
//   cycle C_n:           ring 0..n-1
//   complete bipartite:  parts {0..t-1} and {t..t+s-1}
//   star K_{1,l-1}:      center 0, leaves 1..l-1
//   sparkler S_{q,p}:    center 0, star leaves 1..q-1, tail q..q+p-1
//                        (tail vertex q adjacent to the center)
//   broken fan B_n:      path part 0..n-3, hub n-2 adjacent to 0..n-4,
//                        pendant n-1 adjacent to the hub
//   subdivided star M_{s,t}: center 0; branch i occupies 1+i*t .. (i+1)*t,
//                        chained away from the center
struct FamilySpec {
  Family kind;
  int p1 = 0;
  int p2 = 0;
  int p3 = 0;

  static FamilySpec path(int l) { return {Family::Path, l}; }
  static FamilySpec cycle(int n) { return {Family::Cycle, n}; }
  static FamilySpec complete(int n) { return {Family::Complete, n}; }
  static FamilySpec complete_bipartite(int t, int s) { return {Family::CompleteBipartite, t, s}; }
  static FamilySpec star(int l) { return {Family::Star, l}; }
  static FamilySpec sparkler(int q, int p) { return {Family::Sparkler, q, p}; }
  static FamilySpec broken_fan(int n) { return {Family::BrokenFan, n}; }
  static FamilySpec subdivided_star(int s, int t) { return {Family::SubdividedStar, s, t}; }
  static FamilySpec sparkler_lower_pair(int q, int p, int n) {
    return {Family::SparklerLowerPair, q, p, n};
  }
  static FamilySpec clique_pendant_path(int k, int n) { return {Family::CliquePendantPath, k, n}; }
  static FamilySpec clique_pendant_star(int k, int n) { return {Family::CliquePendantStar, k, n}; }
  static FamilySpec glued_clique_sparkler(int l, int p, int n) {
    return {Family::GluedCliqueSparkler, l, p, n};
  }
};

std::string family_name(Family f);

// Builds the family instance. Throws std::invalid_argument naming the violated
// parameter bound. SparklerLowerPair instances must go through generate_pair.
Graph generate(const FamilySpec& spec);

// Derived parameters of the sparkler lower-bound pair: s = q-1,
// b = 2 + (p mod 2), a = (p - b) / 2.
struct SparklerPairParams {
  int a;
  int b;
  int s;
};
SparklerPairParams sparkler_pair_params(int q, int p);

// The pair (G_{a,b,n}, H_{a,b,n}): G glues K_{a+1,a+s} and S_{n+1,b} at the
// central vertex w of the latter (w sits in the smaller bipartite part); H is
// G minus one vertex of the larger part. Layout of G: smaller part 0..a with
// w = 0, larger part a+1..2a+s, star leaves of w next, tail last.
struct GraphPair {
  Graph g;
  Graph h;
  int removed_vertex;  // the twin of G deleted to obtain H
};
GraphPair generate_pair(const FamilySpec& spec);

// Which vertex of an attached part gets identified with the attachment point.
enum class GlueRole { PathEnd, StarCenter, SparklerTailEnd };

// Disjoint union of g and the part, with the part's glue vertex identified
// with `at`. New vertices are appended after g's in the part's layout order.
Graph attach(const Graph& g, int at, const FamilySpec& part, GlueRole glue_point);

}  // namespace efsub
