#include "effalg/emit.hpp"

#include <algorithm>
#include <sstream>

namespace effalg {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// grid[0] is the header row, grid[i][0] the row label.
std::string render(const std::vector<std::vector<std::string>>& grid, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    for (const auto& row : grid) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_cell(row[j]);
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& row : grid)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += "  ";
      line += row[j];
      line.append(width[j] - row[j].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::vector<std::vector<std::string>> with_header(const std::vector<std::string>& labels, const std::string& corner) {
  std::vector<std::vector<std::string>> grid(1);
  grid[0].push_back(corner);
  grid[0].insert(grid[0].end(), labels.begin(), labels.end());
  return grid;
}

}  // namespace

std::string emit_table(const ImplicationTable& t, TableFormat format) {
  auto grid = with_header(t.labels(), "->");
  for (Element x = 0; x < t.size(); ++x) {
    std::vector<std::string> row{t.labels()[x]};
    for (Element y = 0; y < t.size(); ++y) row.push_back(format_subset(t.entry(x, y), t.labels()));
    grid.push_back(std::move(row));
  }
  return render(grid, format);
}

std::string emit_sum_table(const EffectAlgebra& e, TableFormat format) {
  auto grid = with_header(e.labels(), "+");
  for (Element x = 0; x < e.size(); ++x) {
    std::vector<std::string> row{e.label(x)};
    for (Element y = 0; y < e.size(); ++y) {
      auto z = e.sum(x, y);
      row.push_back(z ? e.label(*z) : "-");
    }
    grid.push_back(std::move(row));
  }
  return render(grid, format);
}

std::string emit_order_matrix(const Poset& p) {
  auto grid = with_header(p.labels(), "<=");
  for (Element x = 0; x < p.size(); ++x) {
    std::vector<std::string> row{p.label(x)};
    for (Element y = 0; y < p.size(); ++y) row.push_back(p.leq(x, y) ? "1" : "0");
    grid.push_back(std::move(row));
  }
  return render(grid, TableFormat::aligned);
}

std::string emit_dot(const Poset& p, const std::string& name) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + '"';
  };
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x) out << "  " << quote(p.label(x)) << ";\n";
  for (auto [x, y] : hasse_edges(p)) out << "  " << quote(p.label(x)) << " -> " << quote(p.label(y)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace effalg
