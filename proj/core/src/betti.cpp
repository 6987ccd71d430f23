#include "toricgraph/betti.hpp"

#include <algorithm>
#include <sstream>

#include "toricgraph/errors.hpp"

namespace toricgraph {

std::string provenance_name(BettiProvenance p) {
  switch (p) {
    case BettiProvenance::Formula:
      return "formula";
    case BettiProvenance::Taylor:
      return "taylor";
    case BettiProvenance::KoszulOracle:
      return "koszul";
    case BettiProvenance::Transferred:
      return "transferred";
    case BettiProvenance::Fixture:
      return "fixture";
  }
  return "?";
}

void BettiTable::set(int i, int j, long long value, BettiProvenance prov) {
  if (i < 0 || j < 0) throw ValidationError("negative Betti index");
  if (value <= 0) throw ValidationError("Betti entries must be positive");
  m_[{i, j}] = Entry{value, prov};
}

void BettiTable::add(int i, int j, long long value, BettiProvenance prov) {
  if (i < 0 || j < 0) throw ValidationError("negative Betti index");
  if (value <= 0) throw ValidationError("Betti entries must be positive");
  Entry& e = m_[{i, j}];
  e.value += value;
  e.prov = prov;
}

long long BettiTable::value(int i, int j) const {
  auto it = m_.find({i, j});
  return it == m_.end() ? 0 : it->second.value;
}

int BettiTable::reg() const {
  int r = 0;
  for (const auto& [ij, e] : m_) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::pdim() const {
  int p = 0;
  for (const auto& [ij, e] : m_) p = std::max(p, ij.first);
  return p;
}

int BettiTable::max_j() const {
  int j = 0;
  for (const auto& [ij, e] : m_) j = std::max(j, ij.second);
  return j;
}

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [ij, e] : m_)
    if (ij.first == i) t += e.value;
  return t;
}

bool BettiTable::values_equal(const BettiTable& o) const {
  if (m_.size() != o.m_.size()) return false;
  for (const auto& [ij, e] : m_)
    if (o.value(ij.first, ij.second) != e.value) return false;
  return true;
}

std::vector<std::pair<int, int>> extremal_betti(const BettiTable& t) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [ij, e] : t.entries()) {
    bool extremal = true;
    for (const auto& [ab, f] : t.entries()) {
      if (ab == ij) continue;
      if (ab.first >= ij.first && ab.second - ab.first >= ij.second - ij.first) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back(ij);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ZPoly euler_numerator(const BettiTable& t) {
  std::vector<Integer> coeffs(static_cast<size_t>(t.max_j()) + 1, Integer(0));
  for (const auto& [ij, e] : t.entries()) {
    const long v = static_cast<long>(e.value);
    const Integer signed_value = ij.first % 2 == 0 ? Integer(v) : Integer(-v);
    coeffs[static_cast<size_t>(ij.second)] += signed_value;
  }
  return ZPoly(std::move(coeffs));
}

CornerInvariants invariants_from_unique_extremal(std::pair<int, int> corner,
                                                 int num_vars, int krull_dim) {
  CornerInvariants inv;
  inv.reg = corner.second - corner.first;
  inv.pdim = corner.first;
  inv.deg_h = corner.second - num_vars + krull_dim;
  return inv;
}

std::string render_betti_diagram(const BettiTable& t) {
  const int cols = t.pdim();
  const int rows = t.reg();

  std::vector<std::string> labels;
  labels.push_back("total:");
  for (int d = 0; d <= rows; ++d) labels.push_back(std::to_string(d) + ":");
  size_t lw = 0;
  for (const auto& s : labels) lw = std::max(lw, s.size());

  // cells[r][c]: r = 0 header, 1 totals, 2+d row d.
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(rows) + 3);
  for (int i = 0; i <= cols; ++i) {
    cells[0].push_back(std::to_string(i));
    cells[1].push_back(std::to_string(t.total(i)));
    for (int d = 0; d <= rows; ++d) {
      const long long v = t.value(i, i + d);
      cells[static_cast<size_t>(d) + 2].push_back(v == 0 ? "." : std::to_string(v));
    }
  }
  std::vector<size_t> widths(static_cast<size_t>(cols) + 1, 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  for (size_t r = 0; r < cells.size(); ++r) {
    std::string label = r == 0 ? "" : labels[r - 1];
    out << label << std::string(lw - label.size(), ' ');
    for (size_t c = 0; c < cells[r].size(); ++c) {
      out << "  " << std::string(widths[c] - cells[r][c].size(), ' ') << cells[r][c];
    }
    out << "\n";
  }
  return out.str();
}

BettiTable parse_betti_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (rows.size() < 3) throw ValidationError("diagram needs header, totals and rows");

  const size_t ncols = rows[0].size();
  for (size_t c = 0; c < ncols; ++c)
    if (rows[0][c] != std::to_string(c))
      throw ValidationError("diagram header must list columns 0..n");
  if (rows[1].size() != ncols + 1 || rows[1][0] != "total:")
    throw ValidationError("diagram totals row is malformed");

  BettiTable t;
  for (size_t r = 2; r < rows.size(); ++r) {
    const std::string expected_label = std::to_string(r - 2) + ":";
    if (rows[r].size() != ncols + 1 || rows[r][0] != expected_label)
      throw ValidationError("diagram row label must be '" + expected_label + "'");
    const int d = static_cast<int>(r) - 2;
    for (size_t c = 0; c < ncols; ++c) {
      const std::string& cell = rows[r][c + 1];
      if (cell == ".") continue;
      long long v;
      try {
        v = std::stoll(cell);
      } catch (const std::exception&) {
        throw ValidationError("bad diagram cell '" + cell + "'");
      }
      t.set(static_cast<int>(c), static_cast<int>(c) + d, v, BettiProvenance::Fixture);
    }
  }
  for (size_t c = 0; c < ncols; ++c) {
    long long claimed;
    try {
      claimed = std::stoll(rows[1][c + 1]);
    } catch (const std::exception&) {
      throw ValidationError("bad diagram total '" + rows[1][c + 1] + "'");
    }
    if (claimed != t.total(static_cast<int>(c)))
      throw ValidationError("diagram totals do not match the entries");
  }
  return t;
}

}  // namespace toricgraph
