#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "ring_core.hpp"

namespace syzlab {

// Map (p, q) -> nonnegative dimension with provenance. Absent entries are
// zero.
struct BettiTable {
  int n = 0;
  int b = 0;
  int d = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;  // key (p, q)
  std::string field_tag = "Q";
  std::string method_tag = "engine";  // engine | formula | synthesized
  bool complete = true;               // false when a budget cut left holes
  std::map<std::pair<int, int>, bool> computed;  // present iff attempted

  std::int64_t at(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
  }
  void set(int p, int q, std::int64_t v) {
    computed[{p, q}] = true;
    if (v != 0) entries[{p, q}] = v;
  }
  int max_p() const;
  int max_q() const;

  // Diagram convention from the literature: rows are q, columns are p,
  // dash for zero.
  std::string render_diagram() const;
  // `p,q,value,field,method` lines with header.
  std::string to_csv() const;
  std::string to_json() const;
};

}  // namespace syzlab
