#ifndef RAINBOWDOM_CONSTRUCTIONS_HPP
#define RAINBOWDOM_CONSTRUCTIONS_HPP

#include "rainbowdom/graph.hpp"
#include "rainbowdom/rdf.hpp"

namespace rainbowdom {

/// Three disjoint nonempty color sets covering {1..t}. This is the shape the
/// neighbor sets of every uncolored vertex take in an extremal assignment.
struct TriPartition {
    ColorSet a, b, c;

    /// Validates disjointness, nonemptiness and coverage of {1..t}.
    TriPartition(ColorSet a, ColorSet b, ColorSet c, int t);
};

/// The balanced partitions used by the periodic patterns:
/// t=3 -> {1}/{2}/{3}, t=4 -> {1,2}/{3}/{4}, t=5 -> {1,2}/{3,4}/{5}.
TriPartition default_tripartition(int t);

/// The weight-tn/3 witness on P(n,k) for n = 0 (mod 6), k = 1 or 5 (mod 6),
/// k < n/2, t in {3,4,5}: outer cycle A-0-B-0-C-0 with period 6, inner cycle
/// 0-C-0-A-0-B. The inner sequence is forced by the requirement that every
/// uncolored vertex's neighbors partition the color set (at u_5 the partition
/// already holds C and A, so v_5 must carry B).
RainbowAssignment extremal_pattern(int n, int k, int t, const TriPartition& p);
RainbowAssignment extremal_pattern(int n, int k, int t);

/// Turns a valid t-RDF into a (t+1)-RDF: picks the color i* with the smallest
/// class (ties to the smallest index) and adds color t+1 at, for every
/// uncolored vertex, its lowest-id neighbor carrying i*. Weight grows by at
/// most |U_{i*}| <= floor(weight/t); removing color t+1 recovers the input.
RainbowAssignment lift(const Graph& g, const RainbowAssignment& a);

/// The weight-24 4-RDF on build_example_graph(): branch vertices of each copy
/// carry {1},{2},{3},{4}, subdivision vertices are empty, hub for subset S
/// carries S.
RainbowAssignment example_4rdf();

} // namespace rainbowdom

#endif
