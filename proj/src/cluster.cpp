#include "f2rp/cluster.hpp"

#include <algorithm>
#include <sstream>

namespace f2rp {

bool ClusterPicture::is_uebereven(int id) const {
    const Node& nd = at(id);
    if (nd.members.size() % 2) return false;
    for (int ch : nd.children)
        if (at(ch).members.size() % 2) return false;
    return true;
}

int ClusterPicture::leaf_of(int gamma) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].members.size() == 1 && nodes[i].members[0] == gamma) return static_cast<int>(i);
    throw std::logic_error("ClusterPicture::leaf_of: missing singleton");
}

int ClusterPicture::join_with_root(int gamma, int id) const {
    int cur = id;
    while (cur != -1) {
        const auto& m = at(cur).members;
        if (std::binary_search(m.begin(), m.end(), gamma)) return cur;
        cur = at(cur).parent;
    }
    throw std::logic_error("ClusterPicture::join_with_root: no containing cluster");
}

bool ClusterPicture::operator==(const ClusterPicture& o) const {
    if (n != o.n || nodes.size() != o.nodes.size()) return false;
    // Compare as sets of (member set, depth); tree structure follows.
    auto key = [](const ClusterPicture& p) {
        std::vector<std::pair<std::vector<int>, std::string>> k;
        for (const auto& nd : p.nodes)
            k.emplace_back(nd.members, nd.depth ? nd.depth->get_str() : std::string("-"));
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(*this) == key(o);
}

namespace {

void build_rec(ClusterPicture& pic, const std::function<Rat(int, int)>& pairwise,
               std::vector<int> members, int parent) {
    int id = static_cast<int>(pic.nodes.size());
    pic.nodes.push_back({});
    pic.nodes[static_cast<size_t>(id)].members = members;
    pic.nodes[static_cast<size_t>(id)].parent = parent;
    if (parent >= 0) pic.nodes[static_cast<size_t>(parent)].children.push_back(id);
    if (members.size() == 1) return;

    Rat depth = pairwise(members[0], members[1]);
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            depth = std::min(depth, pairwise(members[i], members[j]));
    pic.nodes[static_cast<size_t>(id)].depth = depth;

    // children: connected components of v(x,y) > depth
    std::vector<int> comp(members.size());
    for (size_t i = 0; i < members.size(); ++i) comp[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return comp[static_cast<size_t>(x)] == x ? x : comp[static_cast<size_t>(x)] = find(comp[static_cast<size_t>(x)]); };
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (pairwise(members[i], members[j]) > depth) comp[static_cast<size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
    std::vector<std::vector<int>> groups(members.size());
    for (size_t i = 0; i < members.size(); ++i) groups[static_cast<size_t>(find(static_cast<int>(i)))].push_back(members[i]);
    std::vector<std::vector<int>> children;
    for (auto& gp : groups)
        if (!gp.empty()) children.push_back(std::move(gp));
    std::sort(children.begin(), children.end());
    for (auto& ch : children) build_rec(pic, pairwise, std::move(ch), id);
}

}  // namespace

ClusterPicture build_cluster_picture(const std::function<Rat(int, int)>& pairwise, int n) {
    if (n < 2) throw std::domain_error("build_cluster_picture: need at least two roots");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(pairwise(i, j) == pairwise(j, i)))
                throw std::domain_error("build_cluster_picture: pairwise data not symmetric");
    // ultrametric check: v(i,k) >= min(v(i,j), v(j,k))
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (pairwise(i, k) < std::min(pairwise(i, j), pairwise(j, k)))
                    throw std::domain_error("build_cluster_picture: input violates the ultrametric inequality");
            }
    ClusterPicture pic;
    pic.n = n;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    build_rec(pic, pairwise, std::move(all), -1);
    return pic;
}

long InertiaOrbits::block_of(int gamma) const {
    if (unused) throw std::domain_error("InertiaOrbits: orbit data marked unused for this regime");
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int g : blocks[b])
            if (g == gamma) return static_cast<long>(b);
    throw std::domain_error("InertiaOrbits: index outside partition");
}

InertiaOrbits inertia_orbits(const Int& z, const Int& s, long q, long r, BaseField base) {
    require_local_hypotheses(z, s, q, r, "inertia_orbits");
    InertiaOrbits orb;
    if (q != r) {
        orb.unused = true;  // U = V = empty in this regime, orbits never consulted
        return orb;
    }
    const bool irreducible = is_F_irreducible_case(z, s, q, r);
    if (irreducible) {
        // single orbit of all r roots over either base
        std::vector<int> all;
        for (int i = 0; i < r; ++i) all.push_back(i);
        orb.blocks.push_back(std::move(all));
        return orb;
    }
    if (base == BaseField::Q) {
        // the rational root gamma_0, then two blocks of size (r-1)/2
        orb.blocks.push_back({0});
        std::vector<int> b1, b2;
        for (int i = 1; i <= (r - 1) / 2; ++i) b1.push_back(i);
        for (int i = static_cast<int>((r + 1) / 2); i < r; ++i) b2.push_back(i);
        orb.blocks.push_back(std::move(b1));
        orb.blocks.push_back(std::move(b2));
    } else {
        for (int i = 0; i < r; ++i) orb.blocks.push_back({i});
    }
    return orb;
}

Rat lambda_tilde(const ClusterPicture& pic, int cluster) {
    const auto& nd = pic.at(cluster);
    if (nd.members.size() < 2)
        throw std::domain_error("lambda_tilde: cluster must be proper or the top cluster");
    long odd_children = 0;
    for (int ch : nd.children)
        if (pic.is_odd(ch)) ++odd_children;
    Rat acc = Rat(odd_children) * (*nd.depth);
    for (int gamma = 0; gamma < pic.n; ++gamma) {
        if (std::binary_search(nd.members.begin(), nd.members.end(), gamma)) continue;
        int join = pic.join_with_root(gamma, cluster);
        acc += *pic.at(join).depth;
    }
    return acc / 2;
}

namespace {
// [I_K : I_s]: 1 for the top cluster, the root-orbit size for singletons.
long stabilizer_index(const ClusterPicture& pic, int cluster, const InertiaOrbits& orbits) {
    if (cluster == pic.root()) return 1;
    const auto& nd = pic.at(cluster);
    if (nd.members.size() == 1)
        return static_cast<long>(orbits.blocks[static_cast<size_t>(orbits.block_of(nd.members[0]))].size());
    throw std::domain_error("stabilizer_index: inertia action on intermediate clusters not supplied");
}
}  // namespace

long xi(const ClusterPicture& pic, int cluster, const Rat& a, const InertiaOrbits& orbits) {
    if (a == 0) throw std::domain_error("xi: argument must be nonzero");
    Rat scaled = Rat(stabilizer_index(pic, cluster, orbits)) * a;
    Val v2 = val_q(scaled, 2);
    long v = static_cast<long>(v2.value().get_num().get_si());
    return v < 0 ? -v : 0;
}

TameData tame_conductor(const ClusterPicture& pic, const InertiaOrbits& orbits) {
    TameData td;
    const int root = pic.root();
    for (size_t id = 0; id < pic.nodes.size(); ++id)
        if (pic.is_proper(static_cast<int>(id)))
            td.lambda.emplace_back(static_cast<int>(id), lambda_tilde(pic, static_cast<int>(id)));

    auto lambda_of = [&](int id) {
        for (auto& [cid, lam] : td.lambda)
            if (cid == id) return lam;
        throw std::logic_error("tame_conductor: missing lambda");
    };

    // xi extended by xi(0) = 0 (v_2(0) = +inf)
    auto xi_of = [&](int cid, const Rat& a) { return a == 0 ? 0L : xi(pic, cid, a, orbits); };

    for (size_t id = 0; id < pic.nodes.size(); ++id) {
        int cid = static_cast<int>(id);
        const auto& nd = pic.at(cid);
        if (cid != root && pic.is_odd(cid)) {
            int p = nd.parent;
            const Rat& dp = *pic.at(p).depth;
            if (xi_of(p, lambda_of(p)) <= xi_of(p, dp)) td.U.insert(cid);
        }
        if (pic.is_proper(cid) && !pic.is_uebereven(cid)) {
            if (xi_of(cid, lambda_of(cid)) == 0) td.V.insert(cid);
        }
    }

    // count orbits of U and V under the induced action on clusters
    auto count_orbits = [&](const std::set<int>& S) {
        std::set<std::pair<int, long>> seen;  // (is_root marker / block id)
        for (int cid : S) {
            if (cid == root) {
                seen.insert({0, -1});
            } else if (pic.at(cid).members.size() == 1) {
                seen.insert({1, orbits.block_of(pic.at(cid).members[0])});
            } else {
                throw std::domain_error("tame_conductor: orbit of an intermediate cluster not supplied");
            }
        }
        return static_cast<long>(seen.size());
    };
    td.u_orbits = count_orbits(td.U);
    td.v_orbits = count_orbits(td.V);
    td.exponent = (pic.n - 1) - td.u_orbits + td.v_orbits;
    return td;
}

namespace {
void render_rec(const ClusterPicture& pic, int id, std::ostringstream& os) {
    const auto& nd = pic.at(id);
    if (nd.members.size() == 1) {
        os << "•";
        return;
    }
    os << "( ";
    bool first = true;
    for (int ch : nd.children) {
        if (!first) os << " ";
        first = false;
        render_rec(pic, ch, os);
    }
    os << " )_{" << nd.depth->get_str() << "}";
}

struct Parser {
    const std::string& s;
    size_t pos{0};
    int next_leaf{0};

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool peek_bullet() { return s.compare(pos, 3, "•") == 0; }

    int parse_node(ClusterPicture& pic, int parent) {
        skip_ws();
        if (peek_bullet()) {
            pos += 3;
            int id = static_cast<int>(pic.nodes.size());
            pic.nodes.push_back({});
            pic.nodes.back().members = {next_leaf++};
            pic.nodes.back().parent = parent;
            if (parent >= 0) pic.nodes[static_cast<size_t>(parent)].children.push_back(id);
            return id;
        }
        if (pos >= s.size() || s[pos] != '(') throw std::domain_error("parse_ascii: expected '(' or bullet");
        ++pos;
        int id = static_cast<int>(pic.nodes.size());
        pic.nodes.push_back({});
        pic.nodes.back().parent = parent;
        if (parent >= 0) pic.nodes[static_cast<size_t>(parent)].children.push_back(id);
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            parse_node(pic, id);
        }
        if (s.compare(pos, 2, "_{") != 0) throw std::domain_error("parse_ascii: expected depth");
        pos += 2;
        size_t end = s.find('}', pos);
        if (end == std::string::npos) throw std::domain_error("parse_ascii: unterminated depth");
        Rat d(s.substr(pos, end - pos));
        d.canonicalize();
        pic.nodes[static_cast<size_t>(id)].depth = d;
        pos = end + 1;
        // collect members from children
        auto& me = pic.nodes[static_cast<size_t>(id)];
        std::vector<int> mem;
        for (int ch : me.children) {
            const auto& cm = pic.nodes[static_cast<size_t>(ch)].members;
            mem.insert(mem.end(), cm.begin(), cm.end());
        }
        std::sort(mem.begin(), mem.end());
        me.members = std::move(mem);
        return id;
    }
};
}  // namespace

std::string render_ascii(const ClusterPicture& pic) {
    std::ostringstream os;
    render_rec(pic, pic.root(), os);
    return os.str();
}

ClusterPicture parse_ascii(const std::string& text) {
    ClusterPicture pic;
    Parser p(text);
    p.parse_node(pic, -1);
    p.skip_ws();
    if (p.pos != text.size()) throw std::domain_error("parse_ascii: trailing input");
    pic.n = p.next_leaf;
    if (pic.nodes.empty() || pic.nodes[0].members.size() != static_cast<size_t>(pic.n))
        throw std::domain_error("parse_ascii: top node must contain every root");
    return pic;
}

}  // namespace f2rp
