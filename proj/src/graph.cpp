#include "seraph/graph.hpp"

#include <algorithm>

#include "seraph/error.hpp"

namespace seraph {

void PropertyGraph::add_node(NodeId id, LabelSet labels, PropertyMap props) {
  if (rels_.count(id))
    throw DataError("id " + std::to_string(id) + " is already a relationship id");
  auto it = nodes_.find(id);
  if (it != nodes_.end()) {
    if (it->second.labels != labels || it->second.props != props)
      throw DataError("duplicate node id " + std::to_string(id) + " with conflicting data");
    return;
  }
  nodes_.emplace(id, NodeEntry{std::move(labels), std::move(props)});
}

void PropertyGraph::add_rel(RelId id, NodeId src, NodeId trg, std::string type, PropertyMap props) {
  if (nodes_.count(id)) throw DataError("id " + std::to_string(id) + " is already a node id");
  if (!nodes_.count(src))
    throw DataError("relationship " + std::to_string(id) + " has dangling source " +
                    std::to_string(src));
  if (!nodes_.count(trg))
    throw DataError("relationship " + std::to_string(id) + " has dangling target " +
                    std::to_string(trg));
  auto it = rels_.find(id);
  if (it != rels_.end()) {
    RelEntry candidate{src, trg, type, props};
    if (!(it->second == candidate))
      throw DataError("duplicate relationship id " + std::to_string(id) + " with conflicting data");
    return;
  }
  rels_.emplace(id, RelEntry{src, trg, std::move(type), std::move(props)});
  auto &out = out_[src];
  out.insert(std::upper_bound(out.begin(), out.end(), id), id);
  auto &in = in_[trg];
  in.insert(std::upper_bound(in.begin(), in.end(), id), id);
}

const NodeEntry *PropertyGraph::node(NodeId id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const RelEntry *PropertyGraph::rel(RelId id) const {
  auto it = rels_.find(id);
  return it == rels_.end() ? nullptr : &it->second;
}

std::span<const RelId> PropertyGraph::out_rels(NodeId id) const {
  auto it = out_.find(id);
  return it == out_.end() ? std::span<const RelId>{} : std::span<const RelId>(it->second);
}

std::span<const RelId> PropertyGraph::in_rels(NodeId id) const {
  auto it = in_.find(id);
  return it == in_.end() ? std::span<const RelId>{} : std::span<const RelId>(it->second);
}

bool graphs_consistent(const PropertyGraph &g1, const PropertyGraph &g2) {
  const auto &small = g1.rels().size() <= g2.rels().size() ? g1 : g2;
  const auto &large = &small == &g1 ? g2 : g1;
  for (const auto &[id, entry] : small.rels()) {
    const RelEntry *other = large.rel(id);
    if (!other) continue;
    if (other->src != entry.src || other->trg != entry.trg || other->type != entry.type)
      return false;
  }
  return true;
}

PropertyGraph graph_union(const PropertyGraph &g1, const PropertyGraph &g2) {
  if (!graphs_consistent(g1, g2)) return {};
  PropertyGraph out = g1;
  for (const auto &[id, entry] : g2.nodes()) {
    if (out.rels_.count(id))
      throw DataError("union collides node id " + std::to_string(id) +
                      " with a relationship id");
    auto [it, inserted] = out.nodes_.try_emplace(id, entry);
    if (inserted) continue;
    it->second.labels.insert(entry.labels.begin(), entry.labels.end());
    for (const auto &[k, v] : entry.props) it->second.props[k] = v;
  }
  for (const auto &[id, entry] : g2.rels()) {
    if (out.nodes_.count(id))
      throw DataError("union collides relationship id " + std::to_string(id) + " with a node id");
    auto it = out.rels_.find(id);
    if (it == out.rels_.end()) {
      out.rels_.emplace(id, entry);
      auto &o = out.out_[entry.src];
      o.insert(std::upper_bound(o.begin(), o.end(), id), id);
      auto &i = out.in_[entry.trg];
      i.insert(std::upper_bound(i.begin(), i.end(), id), id);
    } else {
      for (const auto &[k, v] : entry.props) it->second.props[k] = v;
    }
  }
  return out;
}

PropertyGraph graph_union_all(std::span<const TimestampedGraph> graphs,
                              const std::function<void()> &on_inconsistent) {
  PropertyGraph acc;
  for (const auto &tg : graphs) {
    if (!acc.empty() && !tg.graph.empty() && !graphs_consistent(acc, tg.graph) && on_inconsistent)
      on_inconsistent();
    acc = graph_union(acc, tg.graph);
  }
  return acc;
}

}  // namespace seraph
