#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "f2rp/localfields.hpp"
#include "f2rp/rational.hpp"

namespace f2rp {

// Rooted laminar tree of clusters over root indices 0..n-1.  Depths are
// exact rationals; singletons carry no depth.  Node 0 is the top cluster.
struct ClusterPicture {
    struct Node {
        std::vector<int> members;  // sorted root indices
        std::optional<Rat> depth;  // defined iff |members| > 1
        int parent{-1};
        std::vector<int> children;
    };
    int n{0};
    std::vector<Node> nodes;

    int root() const { return 0; }
    const Node& at(int id) const { return nodes[static_cast<size_t>(id)]; }
    bool is_proper(int id) const { return at(id).members.size() > 1; }
    bool is_odd(int id) const { return at(id).members.size() % 2 == 1; }
    bool is_uebereven(int id) const;
    // smallest cluster containing the root index gamma and the cluster id
    int join_with_root(int gamma, int id) const;
    int leaf_of(int gamma) const;

    bool operator==(const ClusterPicture& o) const;
};

// Threshold clustering of a symmetric pairwise valuation matrix; the input
// must be ultrametric for the result to be laminar (checked).
ClusterPicture build_cluster_picture(const std::function<Rat(int, int)>& pairwise, int n);

// Orbits of the root indices under inertia, with stabilizer indices
// derived from them.  "unused" marks the q != r regime where the orbit
// data never enters (U = V are empty regardless).
struct InertiaOrbits {
    std::vector<std::vector<int>> blocks;
    bool unused{false};

    long block_of(int gamma) const;
    long orbit_count() const { return static_cast<long>(blocks.size()); }
};

InertiaOrbits inertia_orbits(const Int& z, const Int& s, long q, long r, BaseField base);

// lambda~_s = (|s~| d_s + sum_{gamma not in s} d_{gamma ^ s}) / 2,
// where s~ is the set of odd children.
Rat lambda_tilde(const ClusterPicture& pic, int cluster);

// xi_s(a) = max(-v_2([I_K : I_s] a), 0)
long xi(const ClusterPicture& pic, int cluster, const Rat& a, const InertiaOrbits& orbits);

struct TameData {
    std::vector<std::pair<int, Rat>> lambda;  // per proper cluster
    std::set<int> U;
    std::set<int> V;
    long u_orbits{0};
    long v_orbits{0};
    long exponent{0};  // 2g - |U/I| + |V/I|
};

TameData tame_conductor(const ClusterPicture& pic, const InertiaOrbits& orbits);

// "( ... )_{d}" with bullets for roots; deterministic, children ordered by
// smallest member.
std::string render_ascii(const ClusterPicture& pic);
ClusterPicture parse_ascii(const std::string& text);

}  // namespace f2rp
