#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toricgraph/zpoly.hpp"

namespace toricgraph {

// Where a Betti number came from.  Formula: closed form attached to a
// verified structure (e.g. linear quotients).  Taylor / KoszulOracle:
// computed homology ranks.  Transferred: equal to the initial-ideal value by
// a proven comparison.  Fixture: parsed from a stored diagram.
enum class BettiProvenance { Formula, Taylor, KoszulOracle, Transferred, Fixture };

std::string provenance_name(BettiProvenance p);

// Graded Betti numbers beta_{i,j} of a quotient R/I, sparse, with per-entry
// provenance.  Only nonzero entries are stored.
class BettiTable {
 public:
  struct Entry {
    long long value = 0;
    BettiProvenance prov = BettiProvenance::Formula;
  };

  void set(int i, int j, long long value, BettiProvenance prov);
  void add(int i, int j, long long value, BettiProvenance prov);
  long long value(int i, int j) const;  // 0 when absent

  const std::map<std::pair<int, int>, Entry>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }

  int reg() const;          // max j - i over nonzero entries
  int pdim() const;         // max i over nonzero entries
  int max_j() const;
  long long total(int i) const;

  // Same values, provenance ignored.
  bool values_equal(const BettiTable& o) const;

 private:
  std::map<std::pair<int, int>, Entry> m_;
};

// Corners (i,j): beta_{i,j} != 0 and beta_{a,b} = 0 for all other (a,b)
// with a >= i, b - a >= j - i.  Sorted by i.
std::vector<std::pair<int, int>> extremal_betti(const BettiTable& t);

// K-polynomial sum_{i,j} (-1)^i beta_{i,j} x^j; equals the Hilbert
// numerator of R/I when the table is correct.
ZPoly euler_numerator(const BettiTable& t);

// reg / pdim / deg h read off a table whose extremal corner is unique.
struct CornerInvariants {
  int reg = 0;
  int pdim = 0;
  int deg_h = 0;
};
CornerInvariants invariants_from_unique_extremal(std::pair<int, int> corner,
                                                 int num_vars, int krull_dim);

// Diagram in the standard layout: row d holds beta_{i,i+d} in column i.
// parse_betti_diagram inverts render (entries get Fixture provenance).
std::string render_betti_diagram(const BettiTable& t);
BettiTable parse_betti_diagram(const std::string& text);

}  // namespace toricgraph
