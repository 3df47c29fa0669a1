#include "seraph/value.hpp"

#include <cstdio>

namespace seraph {

namespace {

int cmp_scalar(std::int64_t a, std::int64_t b) { return a < b ? -1 : (b < a ? 1 : 0); }
int cmp_scalar(double a, double b) { return a < b ? -1 : (b < a ? 1 : 0); }
int cmp_scalar(std::uint64_t a, std::uint64_t b) { return a < b ? -1 : (b < a ? 1 : 0); }

void append_escaped(std::string &out, const std::string &s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void append_float(std::string &out, double f) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", f);
  out += buf;
}

}  // namespace

int Value::compare(const Value &a, const Value &b) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Kind::Null: return 0;
    case Kind::Boolean: return cmp_scalar(static_cast<std::int64_t>(a.as_boolean()),
                                          static_cast<std::int64_t>(b.as_boolean()));
    case Kind::Integer: return cmp_scalar(a.as_integer(), b.as_integer());
    case Kind::Float: return cmp_scalar(a.as_float(), b.as_float());
    case Kind::String: return a.as_string().compare(b.as_string());
    case Kind::Node: return cmp_scalar(a.as_node().id, b.as_node().id);
    case Kind::Rel: return cmp_scalar(a.as_rel().id, b.as_rel().id);
    case Kind::List: {
      const auto &la = a.as_list();
      const auto &lb = b.as_list();
      for (std::size_t i = 0; i < la.size() && i < lb.size(); ++i) {
        if (int c = compare(la[i], lb[i]); c != 0) return c;
      }
      return cmp_scalar(static_cast<std::uint64_t>(la.size()), static_cast<std::uint64_t>(lb.size()));
    }
    case Kind::Map: {
      auto ia = a.as_map().begin(), ea = a.as_map().end();
      auto ib = b.as_map().begin(), eb = b.as_map().end();
      for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (int c = ia->first.compare(ib->first); c != 0) return c;
        if (int c = compare(ia->second, ib->second); c != 0) return c;
      }
      if (ia != ea) return 1;
      if (ib != eb) return -1;
      return 0;
    }
    case Kind::Path: {
      const auto &pa = a.as_path().elements;
      const auto &pb = b.as_path().elements;
      for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
        if (int c = cmp_scalar(pa[i], pb[i]); c != 0) return c;
      }
      return cmp_scalar(static_cast<std::uint64_t>(pa.size()), static_cast<std::uint64_t>(pb.size()));
    }
  }
  return 0;
}

std::string Value::canonical() const {
  std::string out;
  switch (kind()) {
    case Kind::Null: out = "null"; break;
    case Kind::Boolean: out = as_boolean() ? "true" : "false"; break;
    case Kind::Integer: out = std::to_string(as_integer()); break;
    case Kind::Float:
      out = "float:";
      append_float(out, as_float());
      break;
    case Kind::String: append_escaped(out, as_string()); break;
    case Kind::Node: out = "node:" + std::to_string(as_node().id); break;
    case Kind::Rel: out = "rel:" + std::to_string(as_rel().id); break;
    case Kind::List: {
      out = "[";
      bool first = true;
      for (const auto &v : as_list()) {
        if (!first) out += ",";
        first = false;
        out += v.canonical();
      }
      out += "]";
      break;
    }
    case Kind::Map: {
      out = "{";
      bool first = true;
      for (const auto &[k, v] : as_map()) {
        if (!first) out += ",";
        first = false;
        append_escaped(out, k);
        out += ":" + v.canonical();
      }
      out += "}";
      break;
    }
    case Kind::Path: {
      out = "path:[";
      bool first = true;
      for (auto id : as_path().elements) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(id);
      }
      out += "]";
      break;
    }
  }
  return out;
}

}  // namespace seraph
