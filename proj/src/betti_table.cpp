#include "betti_table.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace syzlab {

int BettiTable::max_p() const {
  int m = 0;
  for (const auto& [key, v] : entries) m = std::max(m, key.first);
  for (const auto& [key, v] : computed) m = std::max(m, key.first);
  return m;
}

int BettiTable::max_q() const {
  int m = 0;
  for (const auto& [key, v] : entries) m = std::max(m, key.second);
  for (const auto& [key, v] : computed) m = std::max(m, key.second);
  return m;
}

std::string BettiTable::render_diagram() const {
  const int pmax = max_p();
  const int qmax = max_q();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(qmax + 2));
  cells[0].push_back("");
  for (int p = 0; p <= pmax; ++p) cells[0].push_back(std::to_string(p));
  for (int q = 0; q <= qmax; ++q) {
    auto& row = cells[static_cast<std::size_t>(q + 1)];
    row.push_back(std::to_string(q));
    for (int p = 0; p <= pmax; ++p) {
      auto it = computed.find({p, q});
      bool known = computed.empty() || (it != computed.end() && it->second);
      if (!known)
        row.push_back("?");
      else
        row.push_back(at(p, q) == 0 ? "-" : std::to_string(at(p, q)));
    }
  }
  std::vector<std::size_t> widths(static_cast<std::size_t>(pmax + 2), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      os << std::string(widths[c] - cells[r][c].size(), ' ') << cells[r][c];
      if (c + 1 < cells[r].size()) os << (c == 0 ? " | " : "  ");
    }
    os << '\n';
    if (r == 0) {
      std::size_t total = widths[0] + 3;
      for (std::size_t c = 1; c < widths.size(); ++c) total += widths[c] + 2;
      os << std::string(total, '-') << '\n';
    }
  }
  return os.str();
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  os << "p,q,value,field,method\n";
  for (const auto& [key, v] : entries)
    os << key.first << ',' << key.second << ',' << v << ',' << field_tag << ','
       << method_tag << '\n';
  return os.str();
}

std::string BettiTable::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["b"] = b;
  j["d"] = d;
  j["field"] = field_tag;
  j["method"] = method_tag;
  j["complete"] = complete;
  j["entries"] = nlohmann::json::array();
  for (const auto& [key, v] : entries)
    j["entries"].push_back({{"p", key.first}, {"q", key.second}, {"value", v}});
  return j.dump(2);
}

}  // namespace syzlab
