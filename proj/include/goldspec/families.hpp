#pragma once

#include <map>
#include <string>
#include <vector>

#include "goldspec/graph.hpp"

namespace goldspec {

enum class Family {
    cycle,
    path,
    complete,
    complete_bipartite,
    complete_multipartite,
    cocktail_party,
    star,
    comet,
    circulant,
    moebius_ladder,
    prism,
    generalized_petersen,
    platonic,
    named,
    c5_expansion,
    k_cover_c3,
    k_cover_c5,
    line_complete_bipartite,
};

std::string family_to_string(Family f);
Family family_from_string(const std::string& s);

/// Tagged description of one parametric family instance.
struct FamilySpec {
    Family family = Family::cycle;
    std::map<std::string, long> params;  // n, a, b, c, q, r, k
    std::vector<int> connections;        // circulant connection list
    std::string name;                    // platonic / named graph name

    /// Stable text form, e.g. "comet(q=17,r=1)"; used as scan label and sort key.
    std::string to_string() const;
};

/// Builds the canonical instance of the family described by `spec`.
///
/// Node orderings are deterministic and documented per constructor below.
Graph build_family(const FamilySpec& spec);

// --- family constructors (node orderings documented per function) ---

/// Nodes 0..n-1 in cyclic order.
Graph cycle_graph(int n);  // n >= 3
/// Nodes 0..n-1 along the path.
Graph path_graph(int n);  // n >= 1
Graph complete_graph(int n);  // n >= 1
/// Part A = [0,a), part B = [a,a+b).
Graph complete_bipartite_graph(int a, int b);
/// c parts of n/c nodes each, parts contiguous; requires c | n and 2 <= c <= n.
Graph complete_multipartite_graph(int n, int c);
/// 2p nodes; node i is paired (non-adjacent) with i+p.
Graph cocktail_party_graph(int pairs);  // pairs >= 1
/// Center 0, leaves 1..q.
Graph star_graph(int q);  // q >= 1
/// Star K_{1,q} with a pendant path of r nodes attached to leaf 1.
/// Order: center 0, leaves 1..q, path nodes q+1..q+r.
Graph comet_graph(int q, int r);  // q >= 1, r >= 0
/// Node i adjacent to i +- j (mod n) for each j in the connection list.
Graph circulant_graph(int n, const std::vector<int>& connections);
/// Cycle 0..n-1 plus the n/2 diameters i -- i+n/2; n even, n >= 4.
Graph moebius_ladder(int n);
/// Two n-cycles 0..n-1 and n..2n-1 joined by rungs i -- n+i; n >= 3.
Graph prism_graph(int n);
/// Outer cycle 0..n-1, spokes i -- n+i, inner star polygon n+i -- n+((i+k) mod n);
/// requires 1 <= k < n/2.
Graph generalized_petersen(int n, int k);
/// name in {tetrahedron, cube, octahedron, dodecahedron, icosahedron};
/// hard-coded edge lists.
Graph platonic_graph(const std::string& name);
/// name in {petersen, heawood, mcgee}; hard-coded edge lists.
Graph named_graph(const std::string& name);

// --- graph operators ---

/// Kronecker (tensor) product: (u,x) ~ (v,y) iff u~v and x~y; index of (u,x)
/// is u*n_h + x.
Graph tensor_product(const Graph& g, const Graph& h);

/// k-fold node expansion: node u becomes k copies (u,0..k-1), with copies of
/// adjacent originals fully joined and copies of one node kept non-adjacent
/// (adjacency A ox J_k). Index of (u,i) is u*k + i. Every degree scales by k.
Graph clique_expansion(const Graph& g, int k);  // k >= 1

/// Covering construction over a 3- or 5-cycle of fibres: each fibre holds
/// k*k nodes indexed (block B, sheet s) -> B*k + s; within a fibre the k
/// blocks are matched sheet-to-sheet, and consecutive fibres are coupled by
/// cyclic-shift blocks (block row B shifts sheets by B). Result has
/// base*k*k nodes and is (3k-1)-regular.
Graph k_cover(int base, int k);  // base in {3,5}, k >= 1

/// One node per edge of g (lexicographic edge order); adjacency iff the
/// edges share an endpoint.
Graph line_graph(const Graph& g);  // g must have at least one edge

}  // namespace goldspec
