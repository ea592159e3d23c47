#include "latgraph/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace latgraph {

namespace {

std::string call(const std::string& name, std::initializer_list<std::size_t> args) {
    std::string s = name + "(";
    bool first = true;
    for (auto a : args) {
        if (!first) s += ",";
        s += std::to_string(a);
        first = false;
    }
    return s + ")";
}

class AdjacencyBuilder {
public:
    explicit AdjacencyBuilder(std::size_t n) : n_(n), adj_(n * n, 0) {}
    void connect(std::size_t u, std::size_t v) {
        if (u == v) return;
        adj_[u * n_ + v] = 1;
        adj_[v * n_ + u] = 1;
    }
    Graph build(std::string label) && { return Graph(n_, std::move(adj_), std::move(label)); }

private:
    std::size_t n_;
    std::vector<std::uint8_t> adj_;
};

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    if (k > n) return out;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::size_t intersection_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t count = 0;
    for (auto x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) ++count;
    return count;
}

std::vector<std::vector<std::size_t>> all_distances(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t inf = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, inf));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (g.adjacent(u, v) && dist[s][v] == inf) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<std::uint8_t> adjacency, std::string label)
    : n_(n), adj_(std::move(adjacency)), label_(std::move(label)) {
    if (adj_.size() != n_ * n_) throw std::invalid_argument("adjacency size mismatch");
    for (std::size_t i = 0; i < n_; ++i) {
        if (adj_[i * n_ + i] != 0) throw std::invalid_argument("adjacency has nonzero diagonal");
        for (std::size_t j = 0; j < n_; ++j) {
            if (adj_[i * n_ + j] > 1) throw std::invalid_argument("adjacency entries must be 0/1");
            if (adj_[i * n_ + j] != adj_[j * n_ + i]) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
}

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += adj_[v * n_ + u];
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t e = 0;
    for (auto a : adj_) e += a;
    return e / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u)
        if (adj_[v * n_ + u]) out.push_back(u);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adj_[u * n_ + v]) out.emplace_back(u, v);
    return out;
}

RationalMatrix Graph::adjacency_matrix() const {
    RationalMatrix a(n_, n_);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v)
            if (adj_[u * n_ + v]) a(u, v) = 1;
    return a;
}

std::vector<std::size_t> PermutationGroup::orbit(std::size_t point) const {
    std::vector<bool> seen(degree, false);
    std::vector<std::size_t> stack{point};
    seen[point] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (const auto& g : generators)
            if (!seen[g[x]]) {
                seen[g[x]] = true;
                stack.push_back(g[x]);
            }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degree; ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Constructors

Graph empty_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("empty_graph: n must be >= 1");
    return AdjacencyBuilder(n).build(call("empty", {n}));
}

Graph complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    AdjacencyBuilder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) b.connect(u, v);
    return std::move(b).build(call("complete", {n}));
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    AdjacencyBuilder b(n);
    for (std::size_t u = 0; u < n; ++u) b.connect(u, (u + 1) % n);
    return std::move(b).build(call("cycle", {n}));
}

Graph path(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    AdjacencyBuilder b(n);
    for (std::size_t u = 0; u + 1 < n; ++u) b.connect(u, u + 1);
    return std::move(b).build(call("path", {n}));
}

Graph hamming(std::size_t d, std::size_t q) {
    if (d < 1 || q < 1) throw std::invalid_argument("hamming: d and q must be >= 1");
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        n *= q;
        if (n > 100000) throw std::invalid_argument("hamming: graph too large");
    }
    auto digits = [&](std::size_t x) {
        std::vector<std::size_t> t(d);
        for (std::size_t i = d; i-- > 0;) {
            t[i] = x % q;
            x /= q;
        }
        return t;
    };
    AdjacencyBuilder b(n);
    for (std::size_t u = 0; u < n; ++u) {
        auto tu = digits(u);
        for (std::size_t v = u + 1; v < n; ++v) {
            auto tv = digits(v);
            std::size_t diff = 0;
            for (std::size_t i = 0; i < d; ++i) diff += tu[i] != tv[i];
            if (diff == 1) b.connect(u, v);
        }
    }
    return std::move(b).build(call("hamming", {d, q}));
}

Graph kneser(std::size_t n, std::size_t k) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser: need n >= 2k >= 2");
    auto sets = k_subsets(n, k);
    AdjacencyBuilder b(sets.size());
    for (std::size_t u = 0; u < sets.size(); ++u)
        for (std::size_t v = u + 1; v < sets.size(); ++v)
            if (intersection_size(sets[u], sets[v]) == 0) b.connect(u, v);
    return std::move(b).build(call("kneser", {n, k}));
}

Graph johnson(std::size_t n, std::size_t k) {
    if (k < 1 || n <= k) throw std::invalid_argument("johnson: need n > k >= 1");
    auto sets = k_subsets(n, k);
    AdjacencyBuilder b(sets.size());
    for (std::size_t u = 0; u < sets.size(); ++u)
        for (std::size_t v = u + 1; v < sets.size(); ++v)
            if (intersection_size(sets[u], sets[v]) == k - 1) b.connect(u, v);
    return std::move(b).build(call("johnson", {n, k}));
}

Graph petersen() { return relabeled(kneser(5, 2), "petersen"); }

Graph line_graph(const Graph& g) {
    auto e = g.edges();
    if (e.empty()) throw std::invalid_argument("line_graph: input has no edges");
    AdjacencyBuilder b(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            auto [a1, b1] = e[i];
            auto [a2, b2] = e[j];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) b.connect(i, j);
        }
    return std::move(b).build("line_graph(" + g.label() + ")");
}

Graph complement(const Graph& g) {
    AdjacencyBuilder b(g.order());
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) b.connect(u, v);
    return std::move(b).build("complement(" + g.label() + ")");
}

Graph disjoint_union(const Graph& g, std::size_t copies) {
    if (copies < 1) throw std::invalid_argument("disjoint_union: copies must be >= 1");
    const std::size_t n = g.order();
    AdjacencyBuilder b(n * copies);
    for (std::size_t c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges()) b.connect(c * n + u, c * n + v);
    return std::move(b).build("disjoint_union(" + g.label() + "," + std::to_string(copies) + ")");
}

namespace {

template <typename Rule>
Graph product(const Graph& a, const Graph& b, const std::string& name, Rule rule) {
    const std::size_t n1 = a.order(), n2 = b.order();
    AdjacencyBuilder out(n1 * n2);
    for (std::size_t u1 = 0; u1 < n1; ++u1)
        for (std::size_t v1 = 0; v1 < n2; ++v1)
            for (std::size_t u2 = 0; u2 < n1; ++u2)
                for (std::size_t v2 = 0; v2 < n2; ++v2) {
                    std::size_t x = u1 * n2 + v1, y = u2 * n2 + v2;
                    if (x < y && rule(u1, v1, u2, v2)) out.connect(x, y);
                }
    return std::move(out).build(name + "(" + a.label() + "," + b.label() + ")");
}

}  // namespace

Graph cartesian(const Graph& a, const Graph& b) {
    return product(a, b, "cartesian", [&](auto u1, auto v1, auto u2, auto v2) {
        return (u1 == u2 && b.adjacent(v1, v2)) || (v1 == v2 && a.adjacent(u1, u2));
    });
}

Graph direct(const Graph& a, const Graph& b) {
    return product(a, b, "direct", [&](auto u1, auto v1, auto u2, auto v2) {
        return a.adjacent(u1, u2) && b.adjacent(v1, v2);
    });
}

Graph strong(const Graph& a, const Graph& b) {
    return product(a, b, "strong", [&](auto u1, auto v1, auto u2, auto v2) {
        bool du = u1 == u2 || a.adjacent(u1, u2);
        bool dv = v1 == v2 || b.adjacent(v1, v2);
        return du && dv && !(u1 == u2 && v1 == v2);
    });
}

Graph lexicographic(const Graph& a, const Graph& b) {
    return product(a, b, "lexicographic", [&](auto u1, auto v1, auto u2, auto v2) {
        return a.adjacent(u1, u2) || (u1 == u2 && b.adjacent(v1, v2));
    });
}

Graph folded_cube(std::size_t d) {
    if (d < 2 || d > 20) throw std::invalid_argument("folded_cube: need 2 <= d <= 20");
    const std::size_t n = std::size_t{1} << (d - 1);
    AdjacencyBuilder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            auto w = static_cast<std::size_t>(std::popcount(u ^ v));
            if (w == 1 || w == d - 1) b.connect(u, v);
        }
    return std::move(b).build(call("folded_cube", {d}));
}

Graph clebsch() { return relabeled(folded_cube(5), "clebsch"); }

Graph shrikhande() {
    AdjacencyBuilder b(16);
    const int steps[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (const auto& s : steps) {
                int x2 = (x + s[0]) % 4, y2 = (y + s[1]) % 4;
                b.connect(static_cast<std::size_t>(4 * x + y), static_cast<std::size_t>(4 * x2 + y2));
            }
    return std::move(b).build("shrikhande");
}

Graph gosset() {
    auto e = k_subsets(8, 2);  // 28 edges of K8
    const std::size_t m = e.size();
    AdjacencyBuilder b(2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t meet = intersection_size(e[i], e[j]);
            if (i < j && meet == 1) {
                b.connect(i, j);
                b.connect(m + i, m + j);
            }
            if (meet == 0) b.connect(i, m + j);
        }
    return std::move(b).build("gosset");
}

Graph schlafli() {
    Graph g = gosset();
    Graph s = induced_subgraph(g, g.neighbors(0), "schlafli");
    auto srg = is_strongly_regular(s);
    if (!srg || !(*srg == SrgParameters{16, 10, 8}) || s.order() != 27)
        throw std::logic_error("schlafli: local graph of Gosset is not srg(27,16,10,8)");
    return s;
}

Graph relabeled(const Graph& g, std::string label) {
    std::vector<std::size_t> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return induced_subgraph(g, all, std::move(label));
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices, std::string label) {
    AdjacencyBuilder b(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) b.connect(i, j);
    return std::move(b).build(std::move(label));
}

// ---------------------------------------------------------------------------
// Structural checks

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    std::size_t d = g.degree(0);
    for (std::size_t v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto d = all_distances(g);
    return std::none_of(d[0].begin(), d[0].end(), [](std::size_t x) { return x == static_cast<std::size_t>(-1); });
}

std::optional<SrgParameters> is_strongly_regular(const Graph& g) {
    auto k = is_regular(g);
    const std::size_t n = g.order();
    if (!k || *k + 1 == n || *k == 0 || !is_connected(g)) return std::nullopt;
    std::optional<std::size_t> lambda, mu;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t common = 0;
            for (std::size_t w = 0; w < n; ++w) common += g.adjacent(u, w) && g.adjacent(v, w);
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            if (!slot) slot = common;
            else if (*slot != common) return std::nullopt;
        }
    return SrgParameters{*k, lambda.value_or(0), mu.value_or(0)};
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_distance_regular: graph is disconnected");
    const std::size_t n = g.order();
    auto dist = all_distances(g);
    std::size_t diameter = 0;
    for (const auto& row : dist) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
    std::vector<std::optional<std::size_t>> b(diameter + 1), c(diameter + 1);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t i = dist[u][v];
            std::size_t up = 0, down = 0;
            for (std::size_t w : g.neighbors(v)) {
                if (dist[u][w] + 1 == i) ++down;
                if (dist[u][w] == i + 1) ++up;
            }
            if (i < diameter) {
                if (!b[i]) b[i] = up;
                else if (*b[i] != up) return std::nullopt;
            }
            if (i > 0) {
                if (!c[i]) c[i] = down;
                else if (*c[i] != down) return std::nullopt;
            }
        }
    IntersectionArray a;
    for (std::size_t i = 0; i < diameter; ++i) a.b.push_back(*b[i]);
    for (std::size_t i = 1; i <= diameter; ++i) a.c.push_back(*c[i]);
    return a;
}

std::string to_string(const IntersectionArray& a) {
    std::string s = "{";
    for (std::size_t i = 0; i < a.b.size(); ++i) s += (i ? "," : "") + std::to_string(a.b[i]);
    s += ";";
    for (std::size_t i = 0; i < a.c.size(); ++i) s += (i ? "," : "") + std::to_string(a.c[i]);
    return s + "}";
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    const std::size_t n = g.order();
    if (p.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (auto x : p) {
        if (x >= n || hit[x]) return false;
        hit[x] = true;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
    return true;
}

namespace {

class AutomorphismSearch {
public:
    AutomorphismSearch(const Graph& g, std::size_t budget) : g_(g), budget_(budget) {
        const std::size_t n = g.order();
        // BFS order over every component, remembering each vertex's parent.
        std::vector<bool> seen(n, false);
        parent_.assign(n, n);
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s]) continue;
            std::queue<std::size_t> q;
            q.push(s);
            seen[s] = true;
            while (!q.empty()) {
                auto u = q.front();
                q.pop();
                order_.push_back(u);
                for (auto v : g.neighbors(u))
                    if (!seen[v]) {
                        seen[v] = true;
                        parent_[v] = u;
                        q.push(v);
                    }
            }
        }
        degree_.resize(n);
        for (std::size_t v = 0; v < n; ++v) degree_[v] = g.degree(v);
    }

    // Returns an automorphism with 0 -> target, nullopt when none exists, and
    // sets exhausted() when the node budget ran out.
    std::optional<Permutation> find(std::size_t target) {
        const std::size_t n = g_.order();
        image_.assign(n, n);
        used_.assign(n, false);
        if (order_.front() != 0) throw std::logic_error("search order must start at vertex 0");
        if (degree_[0] != degree_[target]) return std::nullopt;
        image_[0] = target;
        used_[target] = true;
        if (extend(1)) return image_;
        return std::nullopt;
    }

    bool exhausted() const { return exhausted_; }
    std::size_t nodes() const { return nodes_; }

private:
    bool consistent(std::size_t x, std::size_t y, std::size_t depth) const {
        if (degree_[x] != degree_[y]) return false;
        for (std::size_t i = 0; i < depth; ++i) {
            auto w = order_[i];
            if (g_.adjacent(x, w) != g_.adjacent(y, image_[w])) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        const std::size_t n = g_.order();
        if (depth == n) return true;
        auto x = order_[depth];
        std::vector<std::size_t> candidates;
        if (parent_[x] != n) candidates = g_.neighbors(image_[parent_[x]]);
        else
            for (std::size_t y = 0; y < n; ++y) candidates.push_back(y);
        for (auto y : candidates) {
            if (used_[y]) continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            if (!consistent(x, y, depth)) continue;
            image_[x] = y;
            used_[y] = true;
            if (extend(depth + 1)) return true;
            used_[y] = false;
            image_[x] = n;
            if (exhausted_) return false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t budget_;
    std::vector<std::size_t> order_, parent_, degree_, image_;
    std::vector<bool> used_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

TransitivityResult vertex_transitivity_witness(const Graph& g, std::size_t budget) {
    TransitivityResult res;
    res.group.degree = g.order();
    if (g.order() <= 1) {
        res.status = TransitivityStatus::witness;
        return res;
    }
    AutomorphismSearch search(g, budget);
    for (std::size_t v = 1; v < g.order(); ++v) {
        auto orbit = res.group.orbit(0);
        if (std::binary_search(orbit.begin(), orbit.end(), v)) continue;
        auto aut = search.find(v);
        res.nodes_used = search.nodes();
        if (!aut) {
            res.status = search.exhausted() ? TransitivityStatus::budget_exhausted : TransitivityStatus::refuted;
            return res;
        }
        res.group.generators.push_back(std::move(*aut));
    }
    res.status = TransitivityStatus::witness;
    return res;
}

// ---------------------------------------------------------------------------
// graph6

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("to_graph6: graph too large");
    }
    int bits = 0, acc = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(const std::string& text_in, std::string label) {
    std::string text = text_in;
    if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.empty()) throw std::invalid_argument("from_graph6: empty input");
    for (char ch : text)
        if (ch < 63 || ch > 126) throw std::invalid_argument("from_graph6: invalid character");
    std::size_t pos = 0, n = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~') throw std::invalid_argument("from_graph6: unsupported size header");
        for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
        pos = 4;
    }
    const std::size_t needed = (n * (n - (n ? 1 : 0)) / 2 + 5) / 6;
    if (text.size() - pos != needed) throw std::invalid_argument("from_graph6: length does not match vertex count");
    AdjacencyBuilder b(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            int byte = text[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) b.connect(i, j);
        }
    return std::move(b).build(std::move(label));
}

}  // namespace latgraph
