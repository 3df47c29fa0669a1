#pragma once

#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "seraph/time.hpp"
#include "seraph/value.hpp"

namespace seraph {

using PropertyMap = std::map<std::string, Value>;
using LabelSet = std::set<std::string>;

struct NodeEntry {
  LabelSet labels;
  PropertyMap props;
  bool operator==(const NodeEntry &) const = default;
};

struct RelEntry {
  NodeId src = 0;
  NodeId trg = 0;
  std::string type;
  PropertyMap props;
  bool operator==(const RelEntry &) const = default;
};

/// Directed multigraph with labeled nodes, typed relationships, and key-value
/// properties on both. Node and relationship ids share one 64-bit id space per
/// deployment and must not collide. Immutable once populated; builders call
/// add_node/add_rel, everything downstream only reads.
class PropertyGraph {
 public:
  void add_node(NodeId id, LabelSet labels = {}, PropertyMap props = {});
  void add_rel(RelId id, NodeId src, NodeId trg, std::string type, PropertyMap props = {});

  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  bool has_rel(RelId id) const { return rels_.count(id) != 0; }
  const NodeEntry *node(NodeId id) const;
  const RelEntry *rel(RelId id) const;

  const std::map<NodeId, NodeEntry> &nodes() const { return nodes_; }
  const std::map<RelId, RelEntry> &rels() const { return rels_; }

  /// Relationship ids leaving / entering a node, ascending.
  std::span<const RelId> out_rels(NodeId id) const;
  std::span<const RelId> in_rels(NodeId id) const;

  bool empty() const { return nodes_.empty() && rels_.empty(); }
  bool operator==(const PropertyGraph &other) const {
    return nodes_ == other.nodes_ && rels_ == other.rels_;
  }

 private:
  friend PropertyGraph graph_union(const PropertyGraph &, const PropertyGraph &);

  std::map<NodeId, NodeEntry> nodes_;
  std::map<RelId, RelEntry> rels_;
  std::map<NodeId, std::vector<RelId>> out_;
  std::map<NodeId, std::vector<RelId>> in_;
};

struct TimestampedGraph {
  PropertyGraph graph;
  TimeInstant time;
};

/// True iff every relationship id present in both graphs agrees on source,
/// target, and type.
bool graphs_consistent(const PropertyGraph &g1, const PropertyGraph &g2);

/// Union under the unique name assumption: the empty graph when the inputs are
/// inconsistent; otherwise node/relationship sets united, labels united per
/// node, and conflicting property values resolved second-argument-wins.
PropertyGraph graph_union(const PropertyGraph &g1, const PropertyGraph &g2);

/// Left fold of graph_union in sequence order (callers pass timestamp order,
/// so later events win property conflicts). `on_inconsistent`, when set, is
/// invoked once per inconsistent fold step.
PropertyGraph graph_union_all(std::span<const TimestampedGraph> graphs,
                              const std::function<void()> &on_inconsistent = {});

}  // namespace seraph
