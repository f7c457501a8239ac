#include "gtx/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace gtx {

namespace {

struct Interner {
    std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, Label> ids;
};

Interner& interner() {
    static Interner in;
    return in;
}

template <class T>
auto find_by_id(const std::vector<T>& v, Id id) {
    return std::lower_bound(v.begin(), v.end(), id, [](const T& x, Id i) { return x.id < i; });
}

}  // namespace

Label intern(std::string_view name) {
    auto& in = interner();
    std::lock_guard lock(in.mu);
    auto it = in.ids.find(std::string(name));
    if (it != in.ids.end()) return it->second;
    Label l = static_cast<Label>(in.names.size());
    in.names.emplace_back(name);
    in.ids.emplace(std::string(name), l);
    return l;
}

const std::string& label_name(Label l) {
    auto& in = interner();
    std::lock_guard lock(in.mu);
    if (l >= in.names.size()) throw Error("unknown label handle " + std::to_string(l));
    return in.names[l];
}

Signature Signature::merged(const Signature& o) const {
    Signature s = *this;
    s.node_labels.insert(o.node_labels.begin(), o.node_labels.end());
    s.edge_labels.insert(o.edge_labels.begin(), o.edge_labels.end());
    return s;
}

// ---------------------------------------------------------------- Graph

Graph& Graph::add_node(Id id, Label label) {
    auto it = find_by_id(nodes_, id);
    if (it != nodes_.end() && it->id == id) throw Error("duplicate node id " + std::to_string(id));
    nodes_.insert(it, Node{id, label});
    return *this;
}

Graph& Graph::add_edge(Id id, Id src, Id tgt, Label label) {
    auto it = find_by_id(edges_, id);
    if (it != edges_.end() && it->id == id) throw Error("duplicate edge id " + std::to_string(id));
    edges_.insert(it, Edge{id, src, tgt, label});
    return *this;
}

void Graph::remove_edge(Id id) {
    auto it = find_by_id(edges_, id);
    if (it == edges_.end() || it->id != id) throw Error("no edge " + std::to_string(id));
    edges_.erase(it);
}

void Graph::remove_node(Id id) {
    auto it = find_by_id(nodes_, id);
    if (it == nodes_.end() || it->id != id) throw Error("no node " + std::to_string(id));
    for (const auto& e : edges_)
        if (e.src == id || e.tgt == id)
            throw Error("node " + std::to_string(id) + " still has incident edges");
    nodes_.erase(it);
}

std::optional<std::size_t> Graph::node_index(Id id) const {
    auto it = find_by_id(nodes_, id);
    if (it == nodes_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::optional<std::size_t> Graph::edge_index(Id id) const {
    auto it = find_by_id(edges_, id);
    if (it == edges_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

const Node& Graph::node(Id id) const {
    auto i = node_index(id);
    if (!i) throw Error("no node " + std::to_string(id));
    return nodes_[*i];
}

const Edge& Graph::edge(Id id) const {
    auto i = edge_index(id);
    if (!i) throw Error("no edge " + std::to_string(id));
    return edges_[*i];
}

Id Graph::fresh_id() const {
    Id m = 0;
    if (!nodes_.empty()) m = std::max(m, nodes_.back().id + 1);
    if (!edges_.empty()) m = std::max(m, edges_.back().id + 1);
    return m;
}

Signature Graph::signature() const {
    Signature s;
    for (const auto& n : nodes_) s.node_labels.insert(label_name(n.label));
    for (const auto& e : edges_) s.edge_labels.insert(label_name(e.label));
    return s;
}

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < g.nodes().size(); ++i)
        if (g.nodes()[i].id == g.nodes()[i - 1].id)
            out.push_back("duplicate node id " + std::to_string(g.nodes()[i].id));
    for (std::size_t i = 1; i < g.edges().size(); ++i)
        if (g.edges()[i].id == g.edges()[i - 1].id)
            out.push_back("duplicate edge id " + std::to_string(g.edges()[i].id));
    for (const auto& e : g.edges()) {
        if (!g.has_node(e.src))
            out.push_back("dangling endpoint: edge " + std::to_string(e.id) + " source " +
                          std::to_string(e.src));
        if (!g.has_node(e.tgt))
            out.push_back("dangling endpoint: edge " + std::to_string(e.id) + " target " +
                          std::to_string(e.tgt));
    }
    return out;
}

std::vector<std::string> validate(const Graph& g, const Signature& sig) {
    auto out = validate(g);
    for (const auto& n : g.nodes())
        if (!sig.has_node_label(n.label))
            out.push_back("node " + std::to_string(n.id) + " label '" + label_name(n.label) +
                          "' not in signature");
    for (const auto& e : g.edges())
        if (!sig.has_edge_label(e.label))
            out.push_back("edge " + std::to_string(e.id) + " label '" + label_name(e.label) +
                          "' not in signature");
    return out;
}

// ---------------------------------------------------------------- IdMap

void IdMap::set(Id from, Id to) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), from,
                               [](const auto& p, Id k) { return p.first < k; });
    if (it != entries_.end() && it->first == from)
        it->second = to;
    else
        entries_.insert(it, {from, to});
}

std::optional<Id> IdMap::get(Id from) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), from,
                               [](const auto& p, Id k) { return p.first < k; });
    if (it != entries_.end() && it->first == from) return it->second;
    return std::nullopt;
}

Id IdMap::at(Id from) const {
    auto v = get(from);
    if (!v) throw Error("id " + std::to_string(from) + " not in map domain");
    return *v;
}

void IdMap::erase(Id from) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), from,
                               [](const auto& p, Id k) { return p.first < k; });
    if (it != entries_.end() && it->first == from) entries_.erase(it);
}

// ---------------------------------------------------------------- Morphism

Morphism Morphism::compose_after(const Morphism& first) const {
    Morphism out;
    out.partial = partial || first.partial;
    for (auto [a, b] : first.nodes.entries())
        if (auto c = nodes.get(b)) out.nodes.set(a, *c);
    for (auto [a, b] : first.edges.entries())
        if (auto c = edges.get(b)) out.edges.set(a, *c);
    return out;
}

bool Morphism::injective() const { return is_injective(*this); }

bool is_morphism(const Morphism& m, const Graph& dom, const Graph& cod) {
    for (auto [a, b] : m.nodes.entries()) {
        if (!dom.has_node(a) || !cod.has_node(b)) return false;
        if (dom.node(a).label != cod.node(b).label) return false;
    }
    for (auto [a, b] : m.edges.entries()) {
        if (!dom.has_edge(a) || !cod.has_edge(b)) return false;
        const Edge& x = dom.edge(a);
        const Edge& y = cod.edge(b);
        if (x.label != y.label) return false;
        auto s = m.nodes.get(x.src);
        auto t = m.nodes.get(x.tgt);
        if (!s || !t || *s != y.src || *t != y.tgt) return false;
    }
    if (!m.partial)
        if (m.nodes.size() != dom.node_count() || m.edges.size() != dom.edge_count()) return false;
    return true;
}

bool is_injective(const Morphism& m) {
    auto check = [](const IdMap& im) {
        std::vector<Id> img;
        for (auto [a, b] : im.entries()) img.push_back(b);
        std::sort(img.begin(), img.end());
        return std::adjacent_find(img.begin(), img.end()) == img.end();
    };
    return check(m.nodes) && check(m.edges);
}

bool is_surjective(const Morphism& m, const Graph& cod) {
    std::set<Id> n, e;
    for (auto [a, b] : m.nodes.entries()) n.insert(b);
    for (auto [a, b] : m.edges.entries()) e.insert(b);
    return n.size() == cod.node_count() && e.size() == cod.edge_count();
}

Morphism identity_morphism(const Graph& g) {
    Morphism m;
    for (const auto& n : g.nodes()) m.nodes.set(n.id, n.id);
    for (const auto& e : g.edges()) m.edges.set(e.id, e.id);
    return m;
}

// ---------------------------------------------------------------- matching

namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v, Label l) {
    return (static_cast<std::uint64_t>(u) << 48) ^ (static_cast<std::uint64_t>(v) << 32) ^ l;
}

// Index-based view of a graph for the search routines.
struct Indexed {
    const Graph* g;
    std::vector<Label> label;
    std::vector<int> out_deg, in_deg;
    std::vector<std::pair<std::uint64_t, std::size_t>> between;  // (pair key, edge index), sorted

    explicit Indexed(const Graph& graph) : g(&graph) {
        std::size_t n = graph.node_count();
        label.resize(n);
        out_deg.assign(n, 0);
        in_deg.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) label[i] = graph.nodes()[i].label;
        between.reserve(graph.edge_count());
        for (std::size_t k = 0; k < graph.edge_count(); ++k) {
            const Edge& e = graph.edges()[k];
            std::size_t s = *graph.node_index(e.src), t = *graph.node_index(e.tgt);
            out_deg[s]++;
            in_deg[t]++;
            between.emplace_back(pair_key(s, t, e.label), k);
        }
        std::sort(between.begin(), between.end());
    }

    using Range = std::pair<std::vector<std::pair<std::uint64_t, std::size_t>>::const_iterator,
                            std::vector<std::pair<std::uint64_t, std::size_t>>::const_iterator>;

    Range edges_between(std::size_t u, std::size_t v, Label l) const {
        const auto k = pair_key(u, v, l);
        auto lo = std::lower_bound(between.begin(), between.end(), std::pair<std::uint64_t, std::size_t>{k, 0});
        auto hi = lo;
        while (hi != between.end() && hi->first == k) ++hi;
        return {lo, hi};
    }
    std::size_t count(std::size_t u, std::size_t v, Label l) const {
        auto [lo, hi] = edges_between(u, v, l);
        return static_cast<std::size_t>(hi - lo);
    }
};

// Cheap necessary condition for an injective morphism: enough nodes and
// edges of every label.
bool may_embed(const Graph& pattern, const Graph& host) {
    if (pattern.node_count() > host.node_count() || pattern.edge_count() > host.edge_count()) return false;
    auto fits = [](auto labels_of, const auto& small, const auto& big) {
        std::vector<Label> a, b;
        for (const auto& x : small) a.push_back(labels_of(x));
        for (const auto& x : big) b.push_back(labels_of(x));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    return fits([](const Node& n) { return n.label; }, pattern.nodes(), host.nodes()) &&
           fits([](const Edge& e) { return e.label; }, pattern.edges(), host.edges());
}

struct PairConstraint {
    std::size_t other;  // earlier (or same) pattern node index
    bool outgoing;      // edges current -> other
    Label label;
    std::size_t count;
};

class MonoSearch {
public:
    MonoSearch(const Graph& pattern, const Graph& host, bool injective, std::size_t limit)
        : P(pattern), H(host), injective_(injective), limit_(limit) {
        std::size_t n = pattern.node_count();
        constraints_.resize(n);
        std::map<std::tuple<std::size_t, std::size_t, bool, Label>, std::size_t> counts;
        for (const auto& e : pattern.edges()) {
            std::size_t s = *pattern.node_index(e.src), t = *pattern.node_index(e.tgt);
            if (s >= t)
                counts[{s, t, true, e.label}]++;
            else
                counts[{t, s, false, e.label}]++;
        }
        for (auto& [k, c] : counts) {
            auto [cur, other, out, l] = k;
            constraints_[cur].push_back({other, out, l, c});
        }
        assign_.assign(n, 0);
        used_.assign(host.node_count(), false);
    }

    std::vector<Morphism> run() {
        if (P.node_count() > H.node_count() && injective_) return {};
        if (P.edge_count() > H.edge_count() && injective_) return {};
        place(0);
        return std::move(results_);
    }

private:
    const Graph& P;
    const Graph& H;
    Indexed pi{P}, hi{H};
    bool injective_;
    std::size_t limit_;
    std::vector<std::vector<PairConstraint>> constraints_;
    std::vector<std::size_t> assign_;
    std::vector<bool> used_;
    std::vector<Morphism> results_;

    bool done() const { return limit_ && results_.size() >= limit_; }

    bool feasible(std::size_t i, std::size_t c) const {
        if (pi.label[i] != hi.label[c]) return false;
        if (injective_ && (pi.out_deg[i] > hi.out_deg[c] || pi.in_deg[i] > hi.in_deg[c])) return false;
        for (const auto& pc : constraints_[i]) {
            std::size_t o = pc.other == i ? c : assign_[pc.other];
            std::size_t have = pc.outgoing ? hi.count(c, o, pc.label) : hi.count(o, c, pc.label);
            if (injective_ ? have < pc.count : have == 0) return false;
        }
        return true;
    }

    void place(std::size_t i) {
        if (done()) return;
        if (i == P.node_count()) {
            Morphism m;
            for (std::size_t k = 0; k < i; ++k) m.nodes.set(P.nodes()[k].id, H.nodes()[assign_[k]].id);
            std::vector<bool> eused(H.edge_count(), false);
            place_edge(0, m, eused);
            return;
        }
        for (std::size_t c = 0; c < H.node_count(); ++c) {
            if (injective_ && used_[c]) continue;
            if (!feasible(i, c)) continue;
            assign_[i] = c;
            used_[c] = true;
            place(i + 1);
            used_[c] = false;
            if (done()) return;
        }
    }

    void place_edge(std::size_t k, Morphism& m, std::vector<bool>& eused) {
        if (done()) return;
        if (k == P.edge_count()) {
            results_.push_back(m);
            return;
        }
        const Edge& e = P.edges()[k];
        std::size_t s = assign_[*P.node_index(e.src)], t = assign_[*P.node_index(e.tgt)];
        auto [lo, end] = hi.edges_between(s, t, e.label);
        for (auto it = lo; it != end; ++it) {
            const std::size_t c = it->second;
            if (injective_ && eused[c]) continue;
            eused[c] = true;
            m.edges.set(e.id, H.edges()[c].id);
            place_edge(k + 1, m, eused);
            m.edges.erase(e.id);
            eused[c] = false;
            if (done()) return;
        }
    }
};

}  // namespace

std::vector<Morphism> enumerate_monomorphisms(const Graph& pattern, const Graph& host) {
    if (!may_embed(pattern, host)) return {};
    return MonoSearch(pattern, host, true, 0).run();
}

std::optional<Morphism> first_monomorphism(const Graph& pattern, const Graph& host) {
    if (!may_embed(pattern, host)) return std::nullopt;
    auto r = MonoSearch(pattern, host, true, 1).run();
    if (r.empty()) return std::nullopt;
    return r.front();
}

std::optional<Morphism> find_homomorphism(const Graph& from, const Graph& to) {
    auto r = MonoSearch(from, to, false, 1).run();
    if (r.empty()) return std::nullopt;
    return r.front();
}

// ---------------------------------------------------------------- canonical form

namespace {

// Distinct labels of g sorted by name. Interned names have stable
// addresses, so pointers are safe to keep.
std::vector<std::pair<const std::string*, Label>> ranked_labels(const Graph& g) {
    std::vector<std::pair<const std::string*, Label>> names;
    auto note = [&](Label l) {
        for (const auto& x : names)
            if (x.second == l) return;
        names.emplace_back(&label_name(l), l);
    };
    for (const auto& v : g.nodes()) note(v.label);
    for (const auto& e : g.edges()) note(e.label);
    std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return *a.first < *b.first; });
    return names;
}

class Canon {
public:
    Canon(const Graph& g, const std::vector<int>& marks) : n_(g.node_count()), mark_(marks) {
        // Labels are ranked by name; each distinct handle is looked up once.
        const auto names = ranked_labels(g);
        auto rank = [&](Label l) {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i].second == l) return static_cast<int>(i);
            return -1;
        };
        vlabel_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) vlabel_[i] = rank(g.nodes()[i].label);

        std::vector<std::vector<Adj>> adj(n_);
        for (const auto& e : g.edges()) {
            int s = static_cast<int>(*g.node_index(e.src));
            int t = static_cast<int>(*g.node_index(e.tgt));
            int l = rank(e.label);
            edges_.push_back({s, t, l});
            if (s == t) {
                adj[s].push_back({2, l, -1});
            } else {
                adj[s].push_back({0, l, t});
                adj[t].push_back({1, l, s});
            }
        }
        adj_start_.push_back(0);
        for (auto& a : adj) {
            std::sort(a.begin(), a.end());
            adj_.insert(adj_.end(), a.begin(), a.end());
            adj_start_.push_back(adj_.size());
        }
    }

    std::vector<int> run() {
        std::vector<std::int64_t> init(n_);
        for (std::size_t i = 0; i < n_; ++i) init[i] = (std::int64_t(vlabel_[i]) << 32) + mark_[i];
        std::vector<int> colour = compress(init);
        refine(colour);
        search(colour);
        return best_order_;
    }

    std::vector<int> certificate_for(const std::vector<int>& order) const {
        // order[pos] = node index
        std::vector<int> pos(n_);
        for (std::size_t p = 0; p < n_; ++p) pos[order[p]] = static_cast<int>(p);
        std::vector<int> cert;
        cert.reserve(1 + 2 * n_ + 3 * edges_.size());
        cert.push_back(static_cast<int>(n_));
        for (std::size_t p = 0; p < n_; ++p) {
            cert.push_back(vlabel_[order[p]]);
            cert.push_back(mark_[order[p]]);
        }
        std::vector<std::array<int, 3>> es;
        es.reserve(edges_.size());
        for (const auto& e : edges_) es.push_back({pos[e[0]], pos[e[1]], e[2]});
        std::sort(es.begin(), es.end());
        for (const auto& e : es) cert.insert(cert.end(), e.begin(), e.end());
        return cert;
    }

private:
    struct Adj {
        int dir, label, other;
        auto operator<=>(const Adj&) const = default;
    };

    std::size_t n_;
    std::vector<int> vlabel_, mark_;
    std::vector<std::array<int, 3>> edges_;
    std::vector<Adj> adj_;  // neighbourhoods, node i at [adj_start_[i], adj_start_[i+1])
    std::vector<std::size_t> adj_start_;
    std::vector<int> best_cert_, best_order_;
    bool have_best_ = false;
    // Scratch space reused by refine().
    std::vector<std::int64_t> sig_;
    std::vector<std::size_t> sig_start_;
    std::vector<int> idx_;

    // Colours are the ranks of the distinct values.
    static std::vector<int> compress(const std::vector<std::int64_t>& vals) {
        std::vector<std::int64_t> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> colour(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i)
            colour[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vals[i]) - sorted.begin());
        return colour;
    }

    static int distinct(const std::vector<int>& colour) {
        return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    }

    bool same_neighbourhood(int a, int b) const {
        return std::equal(adj_.begin() + adj_start_[a], adj_.begin() + adj_start_[a + 1],
                          adj_.begin() + adj_start_[b], adj_.begin() + adj_start_[b + 1]);
    }

    // Signature of node i: its colour, then the sorted (direction, label,
    // neighbour colour) codes of its incident edges.
    void refine(std::vector<int>& colour) {
        int k = distinct(colour);
        while (true) {
            sig_.clear();
            sig_start_.clear();
            for (std::size_t i = 0; i < n_; ++i) {
                sig_start_.push_back(sig_.size());
                sig_.push_back(colour[i]);
                const std::size_t from = sig_.size();
                for (std::size_t a = adj_start_[i]; a < adj_start_[i + 1]; ++a) {
                    const Adj& x = adj_[a];
                    const std::int64_t c = x.other < 0 ? 0 : colour[x.other] + 1;
                    sig_.push_back((std::int64_t(x.dir) << 50) | (std::int64_t(x.label) << 25) | c);
                }
                std::sort(sig_.begin() + static_cast<std::ptrdiff_t>(from), sig_.end());
            }
            sig_start_.push_back(sig_.size());
            auto span_less = [&](int a, int b) {
                return std::lexicographical_compare(sig_.begin() + sig_start_[a], sig_.begin() + sig_start_[a + 1],
                                                    sig_.begin() + sig_start_[b], sig_.begin() + sig_start_[b + 1]);
            };
            idx_.resize(n_);
            for (std::size_t i = 0; i < n_; ++i) idx_[i] = static_cast<int>(i);
            std::sort(idx_.begin(), idx_.end(), span_less);
            int c = -1;
            for (std::size_t j = 0; j < n_; ++j) {
                if (j == 0 || span_less(idx_[j - 1], idx_[j])) ++c;
                colour[idx_[j]] = c;
            }
            if (c + 1 == k) return;
            k = c + 1;
        }
    }

    void search(const std::vector<int>& colour) {
        int k = distinct(colour);
        if (k == static_cast<int>(n_)) {
            std::vector<int> order(n_);
            for (std::size_t i = 0; i < n_; ++i) order[colour[i]] = static_cast<int>(i);
            auto cert = certificate_for(order);
            if (!have_best_ || cert < best_cert_) {
                have_best_ = true;
                best_cert_ = std::move(cert);
                best_order_ = std::move(order);
            }
            return;
        }
        // First non-singleton cell.
        std::vector<int> size(k, 0);
        for (int c : colour) size[c]++;
        int target = 0;
        while (size[target] == 1) ++target;
        std::vector<int> cell;
        for (std::size_t i = 0; i < n_; ++i)
            if (colour[i] == target) cell.push_back(static_cast<int>(i));
        // Nodes with identical neighbourhoods are interchangeable: one branch each.
        std::vector<int> reps;
        std::vector<bool> seen(cell.size(), false);
        for (std::size_t a = 0; a < cell.size(); ++a) {
            if (seen[a]) continue;
            reps.push_back(cell[a]);
            for (std::size_t b = a + 1; b < cell.size(); ++b)
                if (!seen[b] && same_neighbourhood(cell[a], cell[b])) seen[b] = true;
        }
        for (int v : reps) {
            std::vector<std::int64_t> vals(n_);
            for (std::size_t i = 0; i < n_; ++i) vals[i] = 2 * std::int64_t(colour[i]) + (static_cast<int>(i) == v ? 0 : 1);
            auto next = compress(vals);
            refine(next);
            search(next);
        }
    }
};

std::vector<int> canonical_order(const Graph& g, const std::vector<int>& marks) {
    Canon c(g, marks);
    return c.run();
}

CanonicalKey render_key(const Graph& g, const std::vector<int>& order, const std::vector<int>& marks) {
    const std::size_t n = g.node_count();
    const auto names = ranked_labels(g);
    auto rank = [&](Label l) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i].second == l) return static_cast<int>(i);
        return -1;
    };
    auto append_name = [&](std::string& out, int r) {
        const std::string& name = *names[r].first;
        out += std::to_string(name.size());
        out += ':';
        out += name;
    };
    std::vector<int> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[order[p]] = static_cast<int>(p);
    std::string out = "V";
    out.reserve(16 * (n + g.edge_count()));
    for (std::size_t p = 0; p < n; ++p) {
        append_name(out, rank(g.nodes()[order[p]].label));
        if (marks[order[p]]) out += "#" + std::to_string(marks[order[p]]);
        out += ';';
    }
    // Ranks follow name order, so sorting by rank sorts by name.
    std::vector<std::array<int, 3>> es;
    es.reserve(g.edge_count());
    for (const auto& e : g.edges())
        es.push_back({pos[*g.node_index(e.src)], pos[*g.node_index(e.tgt)], rank(e.label)});
    std::sort(es.begin(), es.end());
    out += 'E';
    for (const auto& e : es) {
        out += std::to_string(e[0]);
        out += '>';
        out += std::to_string(e[1]);
        out += ':';
        append_name(out, e[2]);
        out += ';';
    }
    return out;
}

}  // namespace

CanonicalKey canonical_key(const Graph& g) {
    std::vector<int> marks(g.node_count(), 0);
    return render_key(g, canonical_order(g, marks), marks);
}

CanonicalKey marked_key(const Graph& g, const std::vector<std::optional<Id>>& mark_ids) {
    std::vector<int> marks(g.node_count(), 0);
    for (std::size_t i = 0; i < mark_ids.size(); ++i) {
        if (!mark_ids[i]) continue;
        auto idx = g.node_index(*mark_ids[i]);
        if (!idx) throw Error("marked node " + std::to_string(*mark_ids[i]) + " not in graph");
        marks[*idx] = static_cast<int>(i) + 1;
    }
    return render_key(g, canonical_order(g, marks), marks);
}

std::optional<Morphism> isomorphic(const Graph& g, const Graph& h) {
    if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    std::vector<int> mg(g.node_count(), 0), mh(h.node_count(), 0);
    auto og = canonical_order(g, mg);
    auto oh = canonical_order(h, mh);
    if (render_key(g, og, mg) != render_key(h, oh, mh)) return std::nullopt;
    Morphism m;
    for (std::size_t p = 0; p < og.size(); ++p) m.nodes.set(g.nodes()[og[p]].id, h.nodes()[oh[p]].id);
    // Match edges within each (source, target, label) bundle in id order.
    std::map<std::tuple<Id, Id, Label>, std::vector<Id>> bundles;
    for (const auto& e : h.edges()) bundles[{e.src, e.tgt, e.label}].push_back(e.id);
    std::map<std::tuple<Id, Id, Label>, std::size_t> next;
    for (const auto& e : g.edges()) {
        std::tuple<Id, Id, Label> k{m.nodes.at(e.src), m.nodes.at(e.tgt), e.label};
        m.edges.set(e.id, bundles.at(k)[next[k]++]);
    }
    return m;
}

Graph rename_nodes(const Graph& g, const IdMap& ids) {
    Graph out;
    for (const auto& n : g.nodes()) out.add_node(ids.at(n.id), n.label);
    for (const auto& e : g.edges()) out.add_edge(e.id, ids.at(e.src), ids.at(e.tgt), e.label);
    return out;
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    for (const auto& n : g.nodes()) os << "node " << n.id << " " << label_name(n.label) << "\n";
    for (const auto& e : g.edges())
        os << "edge " << e.id << " " << e.src << " " << e.tgt << " " << label_name(e.label) << "\n";
    return os.str();
}

}  // namespace gtx
