#include "toricgraph/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toricgraph/errors.hpp"
#include "toricgraph/hilbert.hpp"
#include "toricgraph/rank.hpp"
#include "toricgraph/toric.hpp"

namespace toricgraph {

namespace {

// Monomial normal form modulo a binomial basis: rewrite lead -> trail while
// some lead divides.  Stays a single monomial of the same multidegree.
class MonomialReducer {
 public:
  explicit MonomialReducer(const GroebnerBasis& gb) : bins_(gb.binomial_generators()) {}

  Monomial reduce(const Monomial& m) const {
    Monomial cur = m;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Binomial& b : bins_) {
        if (b.lead.divides(cur)) {
          cur = cur.quotient_by(b.lead) * b.trail;
          changed = true;
          break;
        }
      }
    }
    return cur;
  }

  bool is_standard(const Monomial& m) const {
    for (const Binomial& b : bins_)
      if (b.lead.divides(m)) return false;
    return true;
  }

 private:
  std::vector<Binomial> bins_;
};

// All standard monomials of the given degree, with an id lookup.
struct StandardBasis {
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, size_t, Monomial::Hash> id;

  void build(size_t q, int degree, const MonomialReducer& red) {
    std::vector<int> exps(q, 0);
    auto rec = [&](auto&& self, size_t var, int left) -> void {
      if (var + 1 == q) {
        exps[var] = left;
        Monomial m = Monomial::from_exponents(exps);
        if (red.is_standard(m)) {
          id[m] = monos.size();
          monos.push_back(std::move(m));
        }
        exps[var] = 0;
        return;
      }
      for (int k = 0; k <= left; ++k) {
        exps[var] = k;
        self(self, var + 1, left - k);
        exps[var] = 0;
      }
    };
    if (q == 0) return;
    rec(rec, 0, degree);
  }
};

// Number of degree-d standard monomials, from the Hilbert numerator:
// HF(d) = sum_k N[k] * C(q - 1 + d - k, q - 1).
Integer hilbert_function(const ZPoly& numerator, size_t q, int d) {
  Integer total(0);
  for (int k = 0; k <= numerator.degree() && k <= d; ++k) {
    Integer binom(1);
    for (size_t i = 1; i < q; ++i)
      binom = binom * static_cast<long>(d - k + static_cast<int>(i)) /
              static_cast<long>(i);
    total += numerator.coeff(k) * binom;
  }
  return total;
}

Integer choose(size_t n, size_t k) {
  if (k > n) return Integer(0);
  Integer r(1);
  for (size_t i = 1; i <= k; ++i) r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
  return r;
}

using Subset = uint32_t;

struct Strand {
  // level[i]: basis (standard monomial id at degree j-i, subset of size i).
  std::vector<std::vector<std::pair<size_t, Subset>>> level;
  // pos[i]: (pair_code, row) sorted by code, for row lookup in level i.
  std::vector<std::vector<std::pair<uint64_t, uint32_t>>> pos;
};

uint64_t pair_code(size_t mono_id, Subset s) {
  return (static_cast<uint64_t>(mono_id) << 32) | s;
}

// One boundary block of one strand, kept sparse until its rank is taken:
// each column carries at most i entries, all of them +-1.
struct SparseEntry {
  uint32_t row;
  uint32_t col;
  int8_t sign;
};

struct RankJob {
  Strand* strand;
  int i;
  size_t rows;
  size_t cols;
  std::vector<SparseEntry> entries;
};

size_t run_rank_job(RankJob& jb, bool modular_only) {
  size_t rank = 0;
  if (modular_only) {
    DenseMatrix<Fp> fm(jb.rows, jb.cols);
    for (const SparseEntry& e : jb.entries)
      fm.at(e.row, e.col) = fm.at(e.row, e.col) + Fp(e.sign);
    rank = rank_mod_p(std::move(fm));
  } else {
    DenseMatrix<Rational> m(jb.rows, jb.cols);
    for (const SparseEntry& e : jb.entries)
      m.at(e.row, e.col) += Rational(e.sign);
    rank = rank_rational(std::move(m));
  }
  std::vector<SparseEntry>().swap(jb.entries);
  return rank;
}

}  // namespace

KoszulResult koszul_betti(const Graph& g, const GroebnerBasis& gb, int max_i,
                          int max_j, const KoszulOptions& options) {
  const size_t q = g.num_edges();
  if (gb.context()->num_vars() != q)
    throw ContextMismatchError("basis is not over the edge ring of the graph");
  if (q > 31) throw ResourceError("subset enumeration supports at most 31 edges");
  if (max_i < 0 || max_j < 0) throw ValidationError("negative window");
  if (max_i > static_cast<int>(q)) max_i = static_cast<int>(q);

  MonomialReducer reducer(gb);
  const ZPoly numerator = hilbert_numerator(initial_ideal(gb));

  // Budget check over the whole window before any enumeration.
  for (int j = 0; j <= max_j; ++j)
    for (int i = 0; i <= std::min(max_i + 1, j); ++i) {
      const Integer cells = hilbert_function(numerator, q, j - i) *
                            choose(q, static_cast<size_t>(i));
      if (cells > Integer(static_cast<long>(options.budget_cells)))
        throw ResourceError("cell budget " + std::to_string(options.budget_cells) +
                            " exceeded at block (i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + "): estimate " +
                            cells.get_str());
    }

  // Vertex-degree vector of each edge variable.
  std::vector<std::vector<int>> edge_phi(q);
  for (size_t e = 0; e < q; ++e) {
    std::vector<int> d(g.num_vertices(), 0);
    const Graph::Edge& ed = g.edge(static_cast<int>(e));
    d[static_cast<size_t>(ed.u)] += 1;
    d[static_cast<size_t>(ed.v)] += 1;
    edge_phi[e] = std::move(d);
  }

  KoszulResult result;
  result.max_i = max_i;
  result.max_j = max_j;
  result.probabilistic = options.modular_only;

  std::vector<StandardBasis> basis(static_cast<size_t>(max_j) + 1);
  for (int d = 0; d <= max_j; ++d) basis[static_cast<size_t>(d)].build(q, d, reducer);

  // Vertex multidegree of each standard monomial, flattened per degree.
  const size_t nv = g.num_vertices();
  std::vector<std::vector<int>> mono_vdeg(static_cast<size_t>(max_j) + 1);
  for (int d = 0; d <= max_j; ++d) {
    const auto& monos = basis[static_cast<size_t>(d)].monos;
    std::vector<int>& flat = mono_vdeg[static_cast<size_t>(d)];
    flat.assign(monos.size() * nv, 0);
    for (size_t uid = 0; uid < monos.size(); ++uid) {
      const Monomial pu = phi_image(g, monos[uid]);
      for (size_t v = 0; v < nv; ++v)
        flat[uid * nv + v] = pu.exponent(static_cast<int>(v));
    }
  }

  // nf[d][uid * q + e]: id of NF(u * x_e) inside basis[d + 1], -1 until used.
  // Each product is reduced at most once; subsets sharing (u, e) reuse the id.
  std::vector<std::vector<int64_t>> nf(static_cast<size_t>(max_j));
  for (int d = 0; d + 1 <= max_j; ++d)
    nf[static_cast<size_t>(d)].assign(basis[static_cast<size_t>(d)].monos.size() * q, -1);
  auto nf_id = [&](int d, size_t uid, size_t e) -> size_t {
    int64_t& slot = nf[static_cast<size_t>(d)][uid * q + e];
    if (slot >= 0) return static_cast<size_t>(slot);
    const Monomial image = reducer.reduce(
        basis[static_cast<size_t>(d)].monos[uid] * Monomial::variable(q, static_cast<int>(e)));
    const StandardBasis& target = basis[static_cast<size_t>(d) + 1];
    auto tid = target.id.find(image);
    if (tid == target.id.end())
      throw IntegrityError("normal form left the standard basis");
    slot = static_cast<int64_t>(tid->second);
    return tid->second;
  };

  std::vector<Subset> subsets_by_size[32];
  {
    auto rec = [&](auto&& self, size_t start, Subset mask, int size) -> void {
      subsets_by_size[size].push_back(mask);
      if (size == max_i + 1) return;
      for (size_t e = start; e < q; ++e) self(self, e + 1, mask | (1u << e), size + 1);
    };
    rec(rec, 0, 0, 0);
  }

  for (int j = 0; j <= max_j; ++j) {
    // Strands of total degree j, keyed by vertex multidegree.
    std::map<std::vector<int>, Strand> strands;
    const int top = std::min(max_i + 1, j);
    for (int i = 0; i <= top; ++i) {
      const StandardBasis& sb = basis[static_cast<size_t>(j - i)];
      const std::vector<int>& flat = mono_vdeg[static_cast<size_t>(j - i)];
      for (Subset s : subsets_by_size[i]) {
        std::vector<int> sdeg(nv, 0);
        for (size_t e = 0; e < q; ++e)
          if (s & (1u << e))
            for (size_t v = 0; v < nv; ++v) sdeg[v] += edge_phi[e][v];
        std::vector<int> key(nv);
        for (size_t uid = 0; uid < sb.monos.size(); ++uid) {
          for (size_t v = 0; v < nv; ++v)
            key[v] = sdeg[v] + flat[uid * nv + v];
          Strand& st = strands[key];
          if (st.level.empty()) st.level.resize(static_cast<size_t>(top) + 1);
          st.level[static_cast<size_t>(i)].push_back({uid, s});
        }
      }
    }
    for (auto& [key, st] : strands) {
      st.pos.resize(st.level.size());
      for (size_t i = 0; i < st.level.size(); ++i) {
        auto& lookup = st.pos[i];
        lookup.reserve(st.level[i].size());
        for (size_t r = 0; r < st.level[i].size(); ++r)
          lookup.push_back({pair_code(st.level[i][r].first, st.level[i][r].second),
                            static_cast<uint32_t>(r)});
        std::sort(lookup.begin(), lookup.end());
      }
    }

    // Boundary blocks, built sequentially (the NF table is shared) but kept
    // sparse; each block is densified only while its own rank is taken.
    std::vector<RankJob> jobs;
    std::vector<Strand*> ordered;
    for (auto& [key, st] : strands) ordered.push_back(&st);
    for (Strand* st : ordered) {
      const int levels = static_cast<int>(st->level.size());
      for (int i = 1; i < levels; ++i) {
        const auto& cols = st->level[static_cast<size_t>(i)];
        const auto& row_pos = st->pos[static_cast<size_t>(i) - 1];
        if (cols.empty() || row_pos.empty()) continue;
        const size_t rows = st->level[static_cast<size_t>(i) - 1].size();
        const Integer dense_cells = Integer(static_cast<long>(rows)) *
                                    Integer(static_cast<long>(cols.size()));
        if (dense_cells > Integer(static_cast<long>(options.budget_cells)))
          throw ResourceError(
              "cell budget " + std::to_string(options.budget_cells) +
              " exceeded by a boundary block at (i=" + std::to_string(i) +
              ", j=" + std::to_string(j) + "): " + dense_cells.get_str() +
              " cells");
        RankJob jb{st, i, rows, cols.size(), {}};
        jb.entries.reserve(cols.size() * static_cast<size_t>(i));
        for (size_t c = 0; c < cols.size(); ++c) {
          const auto& [uid, s] = cols[c];
          int position = 0;
          for (size_t e = 0; e < q; ++e) {
            if (!(s & (1u << e))) continue;
            const size_t tid = nf_id(j - i, uid, e);
            const uint64_t code = pair_code(tid, s & ~(1u << e));
            auto rit = std::lower_bound(row_pos.begin(), row_pos.end(),
                                        std::pair<uint64_t, uint32_t>{code, 0});
            if (rit != row_pos.end() && rit->first == code)
              jb.entries.push_back({rit->second, static_cast<uint32_t>(c),
                                    static_cast<int8_t>(position % 2 == 0 ? 1 : -1)});
            ++position;
          }
        }
        jobs.push_back(std::move(jb));
      }
    }

    // Ranks one block at a time (in parallel when asked); the dense matrix of
    // a block lives only for the duration of its own elimination.
    std::vector<size_t> ranks(jobs.size(), 0);
    const int workers =
        std::max(1, std::min<int>(options.jobs, static_cast<int>(jobs.size())));
    if (workers <= 1) {
      for (size_t k = 0; k < jobs.size(); ++k)
        ranks[k] = run_rank_job(jobs[k], options.modular_only);
    } else {
      std::atomic<size_t> next(0);
      auto work = [&] {
        for (size_t k = next.fetch_add(1); k < jobs.size(); k = next.fetch_add(1))
          ranks[k] = run_rank_job(jobs[k], options.modular_only);
      };
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }

    std::map<std::pair<Strand*, int>, size_t> rank_of;
    for (size_t k = 0; k < jobs.size(); ++k) rank_of[{jobs[k].strand, jobs[k].i}] = ranks[k];
    for (Strand* st : ordered) {
      const int levels = static_cast<int>(st->level.size());
      for (int i = 0; i <= max_i && i < levels; ++i) {
        auto rk = [&](int lvl) -> size_t {
          auto it = rank_of.find({st, lvl});
          return it == rank_of.end() ? 0 : it->second;
        };
        const long long h = static_cast<long long>(st->level[static_cast<size_t>(i)].size()) -
                            static_cast<long long>(rk(i)) -
                            static_cast<long long>(rk(i + 1));
        if (h < 0) throw IntegrityError("negative strand homology");
        if (h > 0) result.table.add(i, j, h, BettiProvenance::KoszulOracle);
      }
    }
  }
  return result;
}

}  // namespace toricgraph
