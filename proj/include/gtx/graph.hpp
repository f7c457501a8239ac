#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtx {

using Id = std::int64_t;
using Label = std::uint32_t;

// Labels are interned process-wide. Anything persisted (keys, files) uses
// the name, never the numeric value.
Label intern(std::string_view name);
const std::string& label_name(Label l);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
public:
    using Error::Error;
};

struct Signature {
    std::set<std::string> node_labels;
    std::set<std::string> edge_labels;

    bool has_node_label(Label l) const { return node_labels.count(label_name(l)) != 0; }
    bool has_edge_label(Label l) const { return edge_labels.count(label_name(l)) != 0; }
    Signature merged(const Signature& o) const;
    bool operator==(const Signature&) const = default;
};

struct Node {
    Id id;
    Label label;
    bool operator==(const Node&) const = default;
};

struct Edge {
    Id id;
    Id src;
    Id tgt;
    Label label;
    bool operator==(const Edge&) const = default;
};

/// Finite directed labelled graph. Nodes and edges are kept sorted by id;
/// loops and parallel edges are allowed.
class Graph {
public:
    Graph() = default;

    Graph& add_node(Id id, Label label);
    Graph& add_node(Id id, std::string_view label) { return add_node(id, intern(label)); }
    Graph& add_edge(Id id, Id src, Id tgt, Label label);
    Graph& add_edge(Id id, Id src, Id tgt, std::string_view label) {
        return add_edge(id, src, tgt, intern(label));
    }
    /// Removes an edge; removing a node also requires that no edge touches it.
    void remove_edge(Id id);
    void remove_node(Id id);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return nodes_.empty() && edges_.empty(); }

    std::optional<std::size_t> node_index(Id id) const;
    std::optional<std::size_t> edge_index(Id id) const;
    bool has_node(Id id) const { return node_index(id).has_value(); }
    bool has_edge(Id id) const { return edge_index(id).has_value(); }
    const Node& node(Id id) const;
    const Edge& edge(Id id) const;

    /// Smallest id strictly above every node and edge id in use.
    Id fresh_id() const;
    Signature signature() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
};

/// Structural defects; an empty result means the graph is well formed.
std::vector<std::string> validate(const Graph& g);
std::vector<std::string> validate(const Graph& g, const Signature& sig);

/// Sorted id -> id map, used for both total and partial morphisms.
class IdMap {
public:
    void set(Id from, Id to);
    std::optional<Id> get(Id from) const;
    Id at(Id from) const;
    bool contains(Id from) const { return get(from).has_value(); }
    const std::vector<std::pair<Id, Id>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    void erase(Id from);
    bool operator==(const IdMap&) const = default;
    auto operator<=>(const IdMap&) const = default;

private:
    std::vector<std::pair<Id, Id>> entries_;
};

struct Morphism {
    IdMap nodes;
    IdMap edges;
    bool partial = false;

    bool operator==(const Morphism& o) const { return nodes == o.nodes && edges == o.edges; }
    auto operator<=>(const Morphism& o) const {
        if (auto c = nodes <=> o.nodes; c != 0) return c;
        return edges <=> o.edges;
    }

    Morphism compose_after(const Morphism& first) const;  // this ∘ first
    bool injective() const;
};

/// Checks totality (unless partial), structure and label preservation.
bool is_morphism(const Morphism& m, const Graph& dom, const Graph& cod);
bool is_injective(const Morphism& m);
bool is_surjective(const Morphism& m, const Graph& cod);
Morphism identity_morphism(const Graph& g);

/// All injective morphisms pattern -> host, ordered lexicographically by the
/// images of pattern nodes (ascending id), then of pattern edges.
std::vector<Morphism> enumerate_monomorphisms(const Graph& pattern, const Graph& host);
/// Same search, stopping at the first hit.
std::optional<Morphism> first_monomorphism(const Graph& pattern, const Graph& host);
/// Not necessarily injective; the first found, if any.
std::optional<Morphism> find_homomorphism(const Graph& from, const Graph& to);

std::optional<Morphism> isomorphic(const Graph& g, const Graph& h);

using CanonicalKey = std::string;

/// Key equality holds exactly for isomorphic graphs. The byte layout only
/// depends on label names, so keys are stable across runs.
CanonicalKey canonical_key(const Graph& g);

/// Canonical key with nodes individually marked; two marked graphs share a
/// key iff an isomorphism maps mark i to mark i. Absent entries are skipped
/// but keep their mark number.
CanonicalKey marked_key(const Graph& g, const std::vector<std::optional<Id>>& marks);

/// Copies of g with node ids remapped through `ids` (all nodes must be keys).
Graph rename_nodes(const Graph& g, const IdMap& ids);

std::string to_string(const Graph& g);

}  // namespace gtx
