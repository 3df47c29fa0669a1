#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace seraph {

using NodeId = std::uint64_t;
using RelId = std::uint64_t;

/// Reference to a node of some property graph.
struct NodeRef {
  NodeId id = 0;
  auto operator<=>(const NodeRef &) const = default;
};

/// Reference to a relationship of some property graph.
struct RelRef {
  RelId id = 0;
  auto operator<=>(const RelRef &) const = default;
};

/// Alternating node/relationship id sequence. Odd length, node ids at even
/// positions, relationship ids at odd positions; starts and ends with a node.
struct Path {
  std::vector<std::uint64_t> elements;

  bool well_formed() const { return elements.size() % 2 == 1; }
  std::size_t length() const { return elements.size() / 2; }  // number of relationships
  auto operator<=>(const Path &) const = default;
};

/// The Cypher value domain: null, booleans, 64-bit integers, floats (admitted
/// for JSON-PG numerics), strings, element references, lists, maps, paths.
class Value {
 public:
  using List = std::vector<Value>;
  using Map = std::map<std::string, Value>;

  enum class Kind { Null, Boolean, Integer, Float, String, Node, Rel, List, Map, Path };

  Value() = default;  // null
  Value(bool b) : v_(b) {}
  Value(std::int64_t i) : v_(i) {}
  Value(int i) : v_(static_cast<std::int64_t>(i)) {}
  Value(double f) : v_(f) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char *s) : v_(std::string(s)) {}
  Value(NodeRef n) : v_(n) {}
  Value(RelRef r) : v_(r) {}
  Value(List l) : v_(std::move(l)) {}
  Value(Map m) : v_(std::move(m)) {}
  Value(Path p) : v_(std::move(p)) {}

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_null() const { return kind() == Kind::Null; }
  bool is_boolean() const { return kind() == Kind::Boolean; }
  bool is_integer() const { return kind() == Kind::Integer; }
  bool is_float() const { return kind() == Kind::Float; }
  bool is_numeric() const { return is_integer() || is_float(); }
  bool is_string() const { return kind() == Kind::String; }
  bool is_node() const { return kind() == Kind::Node; }
  bool is_rel() const { return kind() == Kind::Rel; }
  bool is_list() const { return kind() == Kind::List; }
  bool is_map() const { return kind() == Kind::Map; }
  bool is_path() const { return kind() == Kind::Path; }

  bool as_boolean() const { return std::get<bool>(v_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(v_); }
  double as_float() const { return std::get<double>(v_); }
  /// Numeric value widened to double (integer or float).
  double as_number() const { return is_integer() ? static_cast<double>(as_integer()) : as_float(); }
  const std::string &as_string() const { return std::get<std::string>(v_); }
  NodeRef as_node() const { return std::get<NodeRef>(v_); }
  RelRef as_rel() const { return std::get<RelRef>(v_); }
  const List &as_list() const { return std::get<List>(v_); }
  const Map &as_map() const { return std::get<Map>(v_); }
  const Path &as_path() const { return std::get<Path>(v_); }

  /// Structural equality. Null equals Null (bag/DISTINCT grouping semantics);
  /// the three-valued `=` of WHERE lives in the evaluator.
  bool operator==(const Value &other) const { return v_ == other.v_; }

  /// Canonical total order: kind tag first, then value. Used for deterministic
  /// row ordering, not for query-level comparisons.
  static int compare(const Value &a, const Value &b);
  bool operator<(const Value &other) const { return compare(*this, other) < 0; }

  /// Canonical, kind-distinguishing text form; drives row sorting and the
  /// deterministic ids of constructed relationships.
  std::string canonical() const;

 private:
  std::variant<std::monostate, bool, std::int64_t, double, std::string, NodeRef, RelRef, List, Map,
               Path>
      v_;
};

}  // namespace seraph
