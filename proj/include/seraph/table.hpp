#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "seraph/time.hpp"
#include "seraph/value.hpp"

namespace seraph {

/// Partial map from field names to values; the row type of tables.
class Record {
 public:
  Record() = default;
  explicit Record(std::map<std::string, Value> fields) : fields_(std::move(fields)) {}

  void set(std::string name, Value v) { fields_[std::move(name)] = std::move(v); }
  const Value *get(const std::string &name) const {
    auto it = fields_.find(name);
    return it == fields_.end() ? nullptr : &it->second;
  }
  const std::map<std::string, Value> &fields() const { return fields_; }
  std::size_t size() const { return fields_.size(); }

  bool operator==(const Record &other) const { return fields_ == other.fields_; }
  static int compare(const Record &a, const Record &b);
  bool operator<(const Record &other) const { return compare(*this, other) < 0; }

  /// Canonical text form (sorted fields); feeds row ordering and the
  /// deterministic ids of constructed elements.
  std::string canonical() const;

 private:
  std::map<std::string, Value> fields_;
};

/// Bag (multiset) of records over one fixed field set.
class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::string> fields);

  const std::vector<std::string> &fields() const { return fields_; }
  bool same_fields(const Table &other) const { return fields_ == other.fields_; }

  /// Appends a row; its domain must equal the table's field set.
  void add_row(Record r);
  void add_row(Record r, std::size_t multiplicity);

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<Record> &rows() const { return rows_; }

  /// Rows in canonical (sorted) order, multiplicities expanded.
  std::vector<Record> canonical_rows() const;
  std::map<Record, std::size_t> multiplicities() const;

  /// Bag equality: same field set and same record multiplicities.
  bool bag_equal(const Table &other) const;

 private:
  std::vector<std::string> fields_;  // sorted, unique
  std::vector<Record> rows_;
};

struct TimestampedTable {
  Table table;
  TimeInstant time;
};

/// Multiset subtraction, multiplicities clamped at zero. Field sets must match.
Table bag_difference(const Table &t1, const Table &t2);

/// Multiset sum. Field sets must match.
Table bag_union(const Table &t1, const Table &t2);

/// Every record's multiplicity collapsed to one.
Table table_distinct(const Table &t);

}  // namespace seraph
