#include "plumbing/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include <json.hpp>

namespace plumbing {

int PlumbingGraph::valency(int v) const {
    return static_cast<int>(adj[v].size()) + arrow_count(v);
}

int PlumbingGraph::arrow_count(int v) const {
    int c = 0;
    for (int a : arrows)
        if (a == v) ++c;
    return c;
}

namespace {

void finish_graph(PlumbingGraph& g) {
    g.adj.assign(g.n(), {});
    for (auto& [a, b] : g.edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
}

int require_vertex(const PlumbingGraph& g, const std::string& id) {
    auto it = g.index_of.find(id);
    if (it == g.index_of.end()) throw GraphError("unknown vertex id '" + id + "'");
    return it->second;
}

PlumbingGraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("malformed JSON graph: ") + e.what());
    }
    PlumbingGraph g;
    if (!j.is_object() || !j.contains("vertices")) throw GraphError("graph JSON must contain \"vertices\"");
    for (const auto& v : j.at("vertices")) {
        std::string id = v.at("id").get<std::string>();
        long long b = v.at("b").get<long long>();
        if (g.index_of.count(id)) throw GraphError("duplicate vertex id '" + id + "'");
        g.index_of[id] = g.n();
        g.ids.push_back(id);
        g.euler.push_back(b);
    }
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair of ids");
            int a = require_vertex(g, e.at(0).get<std::string>());
            int b = require_vertex(g, e.at(1).get<std::string>());
            g.edges.emplace_back(a, b);
        }
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) g.arrows.push_back(require_vertex(g, a.get<std::string>()));
    finish_graph(g);
    return g;
}

PlumbingGraph parse_text(const std::string& text) {
    PlumbingGraph g;
    std::vector<std::pair<std::string, std::string>> edge_ids;
    std::vector<std::string> arrow_ids;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& what) {
            throw GraphError("line " + std::to_string(lineno) + ": " + what);
        };
        if (kw == "vertex") {
            std::string id;
            long long b;
            if (!(ls >> id >> b)) fail("expected 'vertex <id> <b>'");
            if (g.index_of.count(id)) fail("duplicate vertex id '" + id + "'");
            g.index_of[id] = g.n();
            g.ids.push_back(id);
            g.euler.push_back(b);
        } else if (kw == "edge") {
            std::string a, b;
            if (!(ls >> a >> b)) fail("expected 'edge <id> <id>'");
            edge_ids.emplace_back(a, b);
        } else if (kw == "arrow") {
            std::string a;
            if (!(ls >> a)) fail("expected 'arrow <id>'");
            arrow_ids.push_back(a);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing token '" + extra + "'");
    }
    for (auto& [a, b] : edge_ids) g.edges.emplace_back(require_vertex(g, a), require_vertex(g, b));
    for (auto& a : arrow_ids) g.arrows.push_back(require_vertex(g, a));
    finish_graph(g);
    return g;
}

}  // namespace

PlumbingGraph parse_plumbing(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json(text) : parse_text(text);
    }
    throw GraphError("empty graph description");
}

void validate_tree(const PlumbingGraph& g) {
    if (g.n() == 0) throw GraphError("graph has no vertices");
    if (static_cast<int>(g.edges.size()) != g.n() - 1)
        throw GraphError("edge set is not a tree: expected " + std::to_string(g.n() - 1) + " edges, got " +
                         std::to_string(g.edges.size()));
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : g.edges) {
        if (a == b) throw GraphError("self-loop at vertex '" + g.ids[a] + "'");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw GraphError("duplicate edge " + g.ids[a] + " -- " + g.ids[b]);
    }
    std::vector<char> vis(g.n(), 0);
    std::deque<int> q{0};
    vis[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++count;
                q.push_back(w);
            }
    }
    if (count != g.n()) throw GraphError("edge set is not a tree: graph is disconnected");
    for (int v : g.arrows)
        if (g.arrow_count(v) > 1) throw GraphError("multiple arrows at vertex '" + g.ids[v] + "'");
}

std::vector<std::string> minimality_warnings(const PlumbingGraph& g) {
    std::vector<std::string> out;
    for (int v = 0; v < g.n(); ++v)
        if (g.valency(v) <= 2 && g.arrow_count(v) == 0 && g.euler[v] > -2)
            out.push_back("vertex '" + g.ids[v] + "' has valency " + std::to_string(g.valency(v)) +
                          " and Euler number " + std::to_string(g.euler[v]) + " > -2 (non-minimal graph)");
    return out;
}

std::vector<int> tree_path(const PlumbingGraph& g, int v, int w) {
    std::vector<int> parent(g.n(), -1);
    std::deque<int> q{v};
    std::vector<char> vis(g.n(), 0);
    vis[v] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == w) break;
        for (int y : g.adj[x])
            if (!vis[y]) {
                vis[y] = 1;
                parent[y] = x;
                q.push_back(y);
            }
    }
    std::vector<int> rev;
    for (int x = w; x != -1; x = parent[x]) {
        rev.push_back(x);
        if (x == v) break;
    }
    std::reverse(rev.begin(), rev.end());
    if (rev.empty() || rev.front() != v) throw GraphError("no path between vertices");
    return rev;
}

PathSet path(const PlumbingGraph& g, int v, int w, PathKind kind) {
    PathSet out;
    std::vector<int> p = tree_path(g, v, w);
    size_t lo = 0, hi = p.size();
    bool drop_left = kind == PathKind::HalfOpenRight || kind == PathKind::Open;    // (v,...
    bool drop_right = kind == PathKind::HalfOpenLeft || kind == PathKind::Open;    // ...,w)
    if (v == w && kind == PathKind::Open) {
        out.open_self = true;
        return out;
    }
    if (drop_left) ++lo;
    if (drop_right && hi > lo) --hi;
    else if (drop_right && hi == lo) { /* already empty */ }
    out.vertices.assign(p.begin() + lo, p.begin() + (hi > lo ? hi : lo));
    return out;
}

BigInt subgraph_det(const PlumbingGraph& g, const std::vector<int>& vs) {
    int k = static_cast<int>(vs.size());
    IMat m(k, k);
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[vs[i]] = i;
    for (int i = 0; i < k; ++i) m.at(i, i) = BigInt(-g.euler[vs[i]]);
    for (auto [a, b] : g.edges) {
        auto ia = pos.find(a), ib = pos.find(b);
        if (ia != pos.end() && ib != pos.end()) {
            m.at(ia->second, ib->second) = BigInt(-1);
            m.at(ib->second, ia->second) = BigInt(-1);
        }
    }
    return det_bareiss(std::move(m));
}

BigInt subgraph_det(const PlumbingGraph& g, const PathSet& p) {
    if (p.open_self) return BigInt(0);
    return subgraph_det(g, p.vertices);
}

BigInt det_complement_of_path(const PlumbingGraph& g, int v, int w) {
    std::vector<int> p = tree_path(g, v, w);
    std::vector<char> drop(g.n(), 0);
    for (int x : p) drop[x] = 1;
    std::vector<int> rest;
    for (int x = 0; x < g.n(); ++x)
        if (!drop[x]) rest.push_back(x);
    return subgraph_det(g, rest);
}

int Classification::node_pos_of(int vertex) const { return node_pos_lookup[vertex]; }

int Classification::pair_index(int lo_pos, int hi_pos) const {
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].lo == lo_pos && pairs[i].hi == hi_pos) return static_cast<int>(i);
    return -1;
}

Classification classify(const PlumbingGraph& g) {
    Classification c;
    c.node_pos_lookup.assign(g.n(), -1);

    std::vector<int> node_vertices, end_vertices;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.valency(v);
        if (d >= 3) node_vertices.push_back(v);
        else if (d == 1) end_vertices.push_back(v);
    }

    // Chains: components after removing nodes. Each is a path; order its
    // vertices along the path.
    std::vector<char> is_node(g.n(), 0);
    for (int v : node_vertices) is_node[v] = 1;
    std::vector<char> seen(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (is_node[v] || seen[v]) continue;
        std::vector<int> comp;
        std::deque<int> q{v};
        seen[v] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            comp.push_back(x);
            for (int y : g.adj[x])
                if (!is_node[y] && !seen[y]) {
                    seen[y] = 1;
                    q.push_back(y);
                }
        }
        // order along the path: start at a vertex with <= 1 non-node neighbors
        int start = comp[0];
        for (int x : comp) {
            int deg = 0;
            for (int y : g.adj[x])
                if (!is_node[y]) ++deg;
            if (deg <= 1) {
                start = x;
                break;
            }
        }
        std::vector<int> ordered{start};
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int y : g.adj[cur])
                if (!is_node[y] && y != prev) {
                    next = y;
                    break;
                }
            if (next < 0) break;
            ordered.push_back(next);
            prev = cur;
            cur = next;
        }
        c.chains.push_back(std::move(ordered));
    }

    // Canonical node order: root at the lexicographically least node id and
    // breadth-first through the node tree, neighbors sorted by id. This fixes
    // the partial order (root side is smaller) and all connector vertices.
    if (!node_vertices.empty()) {
        int root = node_vertices[0];
        for (int v : node_vertices)
            if (g.ids[v] < g.ids[root]) root = v;

        // adjacency between nodes: connected by a chain (or direct edge)
        auto node_neighbors = [&](int nv) {
            std::vector<std::pair<int, std::vector<int>>> out;  // (node vertex, open chain from nv)
            for (int y : g.adj[nv]) {
                if (is_node[y]) {
                    out.push_back({y, {}});
                    continue;
                }
                // walk the chain away from nv
                std::vector<int> between{y};
                int prev = nv, cur = y;
                int terminal = -1;
                while (true) {
                    int next = -1;
                    for (int z : g.adj[cur])
                        if (z != prev) {
                            next = z;
                            break;
                        }
                    if (next < 0) break;  // chain ends at an end vertex: a leg
                    if (is_node[next]) {
                        terminal = next;
                        break;
                    }
                    between.push_back(next);
                    prev = cur;
                    cur = next;
                }
                if (terminal >= 0) out.push_back({terminal, between});
            }
            std::sort(out.begin(), out.end(),
                      [&](const auto& a, const auto& b) { return g.ids[a.first] < g.ids[b.first]; });
            return out;
        };

        std::vector<char> nvis(g.n(), 0);
        std::deque<int> q{root};
        nvis[root] = 1;
        while (!q.empty()) {
            int nv = q.front();
            q.pop_front();
            int pos = static_cast<int>(c.nodes.size());
            c.nodes.push_back(nv);
            c.node_pos_lookup[nv] = pos;
            for (auto& [nb, between] : node_neighbors(nv))
                if (!nvis[nb]) {
                    nvis[nb] = 1;
                    q.push_back(nb);
                }
        }

        // ordered pairs: lo = node discovered earlier (closer to the root)
        for (int pos = 0; pos < static_cast<int>(c.nodes.size()); ++pos) {
            int nv = c.nodes[pos];
            for (auto& [nb, between] : node_neighbors(nv)) {
                int nb_pos = c.node_pos_lookup[nb];
                if (nb_pos < pos) continue;  // handled from the smaller side
                Classification::ChainPair p;
                p.lo = pos;
                p.hi = nb_pos;
                p.between = between;
                p.connector = between.empty() ? c.nodes[nb_pos] : between.front();
                c.pairs.push_back(std::move(p));
            }
        }
        std::sort(c.pairs.begin(), c.pairs.end(), [](const auto& a, const auto& b) {
            return std::pair(a.lo, a.hi) < std::pair(b.lo, b.hi);
        });
    }

    c.node_ends.assign(c.nodes.size(), {});
    c.node_nodes.assign(c.nodes.size(), {});
    for (auto& p : c.pairs) {
        c.node_nodes[p.lo].push_back(p.hi);
        c.node_nodes[p.hi].push_back(p.lo);
    }

    // Ends and their legs; end order follows the node order then id.
    struct LegTmp {
        int node_pos;
        int end;
        std::vector<int> vertices;
    };
    std::vector<LegTmp> legs;
    for (int u : end_vertices) {
        // Walk from the end away until a node is hit (if none, the graph has
        // no nodes at all and there are no legs).
        std::vector<int> walk{u};
        int prev = -1, cur = u;
        int node_hit = -1;
        while (true) {
            int next = -1;
            for (int y : g.adj[cur])
                if (y != prev) {
                    next = y;
                    break;
                }
            if (next < 0) break;
            if (is_node[next]) {
                node_hit = next;
                break;
            }
            walk.push_back(next);
            prev = cur;
            cur = next;
        }
        if (node_hit < 0) continue;  // node-free graph
        std::reverse(walk.begin(), walk.end());  // order from the node outward
        legs.push_back({c.node_pos_lookup[node_hit], u, walk});
    }
    std::sort(legs.begin(), legs.end(), [&](const LegTmp& a, const LegTmp& b) {
        if (a.node_pos != b.node_pos) return a.node_pos < b.node_pos;
        return g.ids[a.end] < g.ids[b.end];
    });
    for (auto& l : legs) {
        c.node_ends[l.node_pos].push_back(l.end);
        c.ends.push_back(l.end);
        c.legs.push_back({l.node_pos, l.end, l.vertices});
    }
    // ends not attached to any node (node-free graphs) are still reported
    for (int u : end_vertices)
        if (std::find(c.ends.begin(), c.ends.end(), u) == c.ends.end()) c.ends.push_back(u);

    c.delta_n.resize(c.nodes.size());
    c.delta_nN.resize(c.nodes.size());
    c.delta_nE.resize(c.nodes.size());
    for (size_t i = 0; i < c.nodes.size(); ++i) {
        c.delta_n[i] = g.valency(c.nodes[i]);
        c.delta_nN[i] = static_cast<int>(c.node_nodes[i].size());
        c.delta_nE[i] = static_cast<int>(c.node_ends[i].size());
        if (c.delta_nN[i] >= 2) c.nhat.push_back(static_cast<int>(i));
    }
    return c;
}

}  // namespace plumbing
