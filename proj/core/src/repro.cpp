#include "toricgraph/repro.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "toricgraph/betti.hpp"
#include "toricgraph/errors.hpp"
#include "toricgraph/families.hpp"
#include "toricgraph/linquo.hpp"
#include "toricgraph/report.hpp"

namespace toricgraph {

namespace {

using json = nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------- fixtures

struct Fixture {
  json expected;
  std::string source;
};

std::map<std::string, Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open fixtures file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& e) {
    throw ValidationError("fixtures file " + path + ": " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("claims") || !doc["claims"].is_object())
    throw ValidationError("fixtures file " + path + " lacks a \"claims\" object");
  std::map<std::string, Fixture> out;
  for (const auto& [id, entry] : doc["claims"].items()) {
    if (!entry.is_object() || !entry.contains("expected") || !entry.contains("source"))
      throw ValidationError("fixture entry " + id + " needs \"expected\" and \"source\"");
    out[id] = Fixture{entry["expected"], entry["source"].get<std::string>()};
  }
  return out;
}

// ------------------------------------------------------------------ drafts

// A computed claim before it meets its fixture.  Exactly one of computed /
// bound / pair_bound carries the value; forced short-circuits resolution
// (unit skipped or crashed).
struct Draft {
  std::string id;
  json computed;
  std::optional<BoundedInvariant> bound;
  std::optional<std::pair<BoundedInvariant, BoundedInvariant>> pair_bound;
  std::string note;
  std::optional<ClaimStatus> forced;
};

Draft exact_draft(std::string id, json v, std::string note = "") {
  Draft d;
  d.id = std::move(id);
  d.computed = std::move(v);
  d.note = std::move(note);
  return d;
}

Draft bound_draft(std::string id, const BoundedInvariant& b) {
  Draft d;
  d.id = std::move(id);
  d.bound = b;
  d.note = "route: " + b.route;
  return d;
}

// depth through the edge-ring Auslander-Buchsbaum identity |E| - pdim,
// widened to a bound when pdim is only bounded.
Draft depth_draft(std::string id, const InvariantReport& r) {
  BoundedInvariant b;
  b.route = "|E| - pdim (" + r.pdim.route + ")";
  if (r.depth) {
    b.exact = *r.depth;
    b.lower = b.upper = *r.depth;
  } else {
    b.lower = r.pdim.upper >= 0 ? r.num_edges - r.pdim.upper : 0;
    b.upper = r.num_edges - r.pdim.lower;
  }
  Draft d;
  d.id = std::move(id);
  d.bound = b;
  d.note = "route: " + b.route;
  return d;
}

Draft cm_draft(std::string id, const InvariantReport& r) {
  Draft d;
  d.id = std::move(id);
  if (r.cohen_macaulay)
    d.computed = *r.cohen_macaulay;
  else
    d.note = "depth not pinned down; pdim " + bounded_invariant_str(r.pdim);
  return d;
}

std::vector<Draft> forced_drafts(const std::vector<std::string>& ids,
                                 ClaimStatus status, const std::string& note) {
  std::vector<Draft> out;
  for (const auto& id : ids) {
    Draft d;
    d.id = id;
    d.note = note;
    d.forced = status;
    out.push_back(std::move(d));
  }
  return out;
}

template <typename Fn>
std::vector<Draft> guarded(const std::vector<std::string>& ids, Fn&& fn) {
  try {
    return fn();
  } catch (const ResourceError& e) {
    return forced_drafts(ids, ClaimStatus::Skipped, e.what());
  } catch (const std::exception& e) {
    return forced_drafts(ids, ClaimStatus::Fail, e.what());
  }
}

// ----------------------------------------------------------- small helpers

Monomial named_product(const PolynomialContext& ctx,
                       const std::vector<std::pair<std::string, int>>& factors) {
  std::vector<int> e(ctx.num_vars(), 0);
  for (const auto& f : factors) {
    int v = ctx.var_index(f.first);
    if (v < 0) throw ValidationError("edge variable not in ring: " + f.first);
    e[static_cast<size_t>(v)] += f.second;
  }
  return Monomial::from_exponents(std::move(e));
}

bool same_binomial_set(std::vector<Binomial> a, std::vector<Binomial> b) {
  auto key = [](const Binomial& x) {
    return std::make_pair(x.lead.exponents(), x.trail.exponents());
  };
  auto cmp = [&](const Binomial& x, const Binomial& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (key(a[k]) != key(b[k])) return false;
  return true;
}

json betti_triples(const BettiTable& t) {
  json arr = json::array();
  for (const auto& [ij, entry] : t.entries())
    arr.push_back(json::array({ij.first, ij.second, entry.value}));
  return arr;
}

json corner_list(const std::vector<std::pair<int, int>>& corners) {
  json arr = json::array();
  for (auto [i, j] : corners) arr.push_back(json::array({i, j}));
  return arr;
}

json zpoly_coeffs(const ZPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_si());
  return arr;
}

std::string gid(const FamilySpec& spec) { return spec.id(); }

// ------------------------------------------------------------------- units

std::vector<Draft> run_gt_unit(int t, AnalyzeOptions opts) {
  const std::string p = "gt.t" + std::to_string(t) + ".";
  const std::vector<std::string> ids = {
      p + "basis", p + "initial", p + "linear-quotients", p + "extremal",
      p + "reg",   p + "degh",    p + "pdim",             p + "depth",
      p + "dim"};
  return guarded(ids, [&]() {
    Graph g = build_family(FamilySpec::gt(t));
    opts.use_gt_order = true;
    opts.graph_id = gid(FamilySpec::gt(t));
    InvariantReport r = analyze(g, opts);
    const ContextPtr& ctx = r.basis->context();
    std::vector<Draft> out;

    std::vector<Binomial> ref = gt_reference_basis(ctx, t);
    std::vector<Polynomial> ref_polys;
    for (const auto& b : ref) ref_polys.push_back(binomial_to_polynomial(ctx, b));
    GroebnerBasis ref_gb = buchberger(ctx, ref_polys, opts.gb_limits);
    bool same_ideal = ideal_equal(*r.basis, ref_gb);
    bool elementwise = same_binomial_set(r.basis->binomial_generators(), ref);
    out.push_back(exact_draft(
        p + "basis", same_ideal,
        std::string("reduced basis coincides with the reference set element-wise: ") +
            (elementwise ? "yes" : "no")));

    std::vector<Monomial> ref_leads = gt_reference_lead_order(ctx, t);
    MonomialIdeal ref_in = MonomialIdeal::from_generators(ctx, ref_leads);
    MonomialIdeal got_in = MonomialIdeal::from_generators(ctx, r.initial_gens);
    out.push_back(exact_draft(
        p + "initial", json{{"count", r.initial_gens.size()},
                                    {"matches-reference", got_in == ref_in}}));

    LinearQuotientOutcome lq = check_linear_quotients(ctx, ref_leads);
    if (const auto* cert = std::get_if<LinearQuotientCertificate>(&lq)) {
      out.push_back(exact_draft(
          p + "linear-quotients",
          json{{"admits", true}, {"max-colon", cert->max_colon_size()}},
          "reference listing: three blocks, each ascending"));
    } else {
      const auto& fail = std::get<LinearQuotientFailure>(lq);
      out.push_back(exact_draft(p + "linear-quotients",
                                json{{"admits", false}},
                                "fails at position " + std::to_string(fail.position)));
    }

    json extremal{{"corners", corner_list(r.extremal)}};
    auto cert_it = r.certified_toric.find({2 * t - 1, 2 * t + 3});
    if (cert_it != r.certified_toric.end())
      extremal["value"] = cert_it->second;
    else
      extremal["value"] = nullptr;
    out.push_back(exact_draft(p + "extremal", extremal,
                              "value certified from the graded numerator"));

    out.push_back(bound_draft(p + "reg", r.reg));
    out.push_back(exact_draft(p + "degh", r.deg_h));
    out.push_back(bound_draft(p + "pdim", r.pdim));
    out.push_back(depth_draft(p + "depth", r));
    out.push_back(exact_draft(p + "dim", r.dim,
                              "vertex count minus bipartite components"));
    return out;
  });
}

std::vector<Draft> run_k2t_unit(int t, AnalyzeOptions opts) {
  const std::string p = "k2t.t" + std::to_string(t) + ".";
  const std::vector<std::string> ids = {
      p + "basis", p + "initial", p + "linear-quotients", p + "betti",
      p + "reg",   p + "degh",    p + "dim",              p + "pdim",
      p + "depth", p + "cm"};
  return guarded(ids, [&]() {
    Graph g = build_family(FamilySpec::k2t(t));
    opts.graph_id = gid(FamilySpec::k2t(t));
    InvariantReport r = analyze(g, opts);
    const ContextPtr& ctx = r.basis->context();
    std::vector<Draft> out;

    std::vector<Binomial> ref = k2t_reference_basis(ctx, t);
    bool elementwise = same_binomial_set(r.basis->binomial_generators(), ref);
    out.push_back(exact_draft(p + "basis", elementwise,
                              "reduced basis equals the 2x2 minors"));

    std::vector<Monomial> ref_leads = k2t_reference_lead_order(ctx, t);
    MonomialIdeal ref_in = MonomialIdeal::from_generators(ctx, ref_leads);
    MonomialIdeal got_in = MonomialIdeal::from_generators(ctx, r.initial_gens);
    out.push_back(exact_draft(
        p + "initial", json{{"count", r.initial_gens.size()},
                                    {"matches-reference", got_in == ref_in}}));

    LinearQuotientOutcome lq = check_linear_quotients(ctx, ref_leads);
    if (const auto* cert = std::get_if<LinearQuotientCertificate>(&lq)) {
      const size_t max_colon = cert->max_colon_size();
      const std::string bound_note =
          max_colon <= static_cast<size_t>(t - 1)
              ? "colon bound t-1 holds"
              : "colon bound t-1 VIOLATED";
      out.push_back(exact_draft(
          p + "linear-quotients",
          json{{"admits", true}, {"max-colon", max_colon}},
          "ascending listing of the minors' leads; " + bound_note));
    } else {
      const auto& fail = std::get<LinearQuotientFailure>(lq);
      out.push_back(exact_draft(p + "linear-quotients",
                                json{{"admits", false}},
                                "fails at position " + std::to_string(fail.position)));
    }

    out.push_back(exact_draft(p + "betti", betti_triples(r.initial_betti),
                              "route: " + r.initial_betti_route));
    out.push_back(bound_draft(p + "reg", r.reg));
    out.push_back(exact_draft(p + "degh", r.deg_h));
    out.push_back(exact_draft(p + "dim", r.dim));
    out.push_back(bound_draft(p + "pdim", r.pdim));
    out.push_back(depth_draft(p + "depth", r));
    out.push_back(cm_draft(p + "cm", r));
    return out;
  });
}

std::vector<Draft> run_c4r_unit(int r, AnalyzeOptions opts) {
  const std::string p = "c4r.r" + std::to_string(r) + ".";
  std::vector<std::string> ids = {p + "basis", p + "h",     p + "betti",
                                  p + "reg",   p + "degh",  p + "dim",
                                  p + "pdim",  p + "depth", p + "cm"};
  if (r <= 2) ids.push_back(p + "oracle");
  return guarded(ids, [&]() {
    Graph g = build_family(FamilySpec::c4r(r));
    opts.graph_id = gid(FamilySpec::c4r(r));
    InvariantReport rep = analyze(g, opts);
    const ContextPtr& ctx = rep.basis->context();
    std::vector<Draft> out;

    std::vector<Binomial> ref;
    for (int i = 1; i <= r; ++i) {
      std::string n = std::to_string(i);
      ref.push_back(make_binomial(
          ctx, named_product(*ctx, {{"p" + n, 1}, {"q" + n, 1}}),
          named_product(*ctx, {{"e0", 1}, {"r" + n, 1}})));
    }
    bool elementwise = same_binomial_set(rep.basis->binomial_generators(), ref);
    out.push_back(exact_draft(
        p + "basis", json{{"count", rep.basis->generators().size()},
                                  {"matches-reference", elementwise}},
        "one binomial per square"));

    out.push_back(exact_draft(p + "h", zpoly_coeffs(rep.hilbert.h)));
    out.push_back(exact_draft(p + "betti", betti_triples(rep.initial_betti),
                              "route: " + rep.initial_betti_route));
    out.push_back(bound_draft(p + "reg", rep.reg));
    out.push_back(exact_draft(p + "degh", rep.deg_h));
    out.push_back(exact_draft(p + "dim", rep.dim));
    out.push_back(bound_draft(p + "pdim", rep.pdim));
    out.push_back(depth_draft(p + "depth", rep));
    out.push_back(cm_draft(p + "cm", rep));

    if (r <= 2) {
      bool agrees = rep.comparison && rep.comparison->window_covers_initial &&
                    rep.comparison->all_equal && !rep.comparison->probabilistic;
      std::string note = rep.toric_betti
                             ? "homology window up to (" +
                                   std::to_string(rep.toric_betti->max_i) + ", " +
                                   std::to_string(rep.toric_betti->max_j) + ")"
                             : "homology oracle did not run";
      out.push_back(exact_draft(p + "oracle", agrees, note));
    }
    return out;
  });
}

std::vector<Draft> run_glue_unit(bool g2_host, int s, AnalyzeOptions opts) {
  const std::string stem =
      std::string("glue.") + (g2_host ? "g2" : "c4") + ".s" + std::to_string(s);
  const std::string p = stem + ".";
  std::vector<std::string> ids = {p + "degh", p + "reg"};
  if (g2_host && s == 2) ids.push_back(p + "size");
  return guarded(ids, [&]() {
    FamilySpec host_spec = g2_host ? FamilySpec::gt(2) : FamilySpec::c4r(1);
    Graph host = build_family(host_spec);
    opts.use_gt_order = g2_host;
    opts.graph_id = gid(host_spec);
    GluingCheck check =
        verify_gluing_increment(host, s, g2_host ? "b1" : "e0", opts);
    std::vector<Draft> out;

    out.push_back(exact_draft(
        p + "degh", json{{"before", check.deg_h_before},
                                 {"after", check.deg_h_after}},
        std::string("increment by s - 1: ") +
            (check.deg_h_increment_ok ? "yes" : "NO")));

    Draft reg;
    reg.id = p + "reg";
    reg.pair_bound = std::make_pair(check.reg_before, check.reg_after);
    if (check.reg_increment_ok)
      reg.note = *check.reg_increment_ok ? "increment verified exactly"
                                         : "exact values contradict the increment";
    else
      reg.note = check.reg_increment_consistent
                     ? "bounds consistent with the increment"
                     : "bounds exclude the increment";
    reg.note += "; routes: " + check.reg_before.route + " -> " +
                check.reg_after.route;
    out.push_back(std::move(reg));

    if (g2_host && s == 2)
      out.push_back(exact_draft(
          p + "size", json{{"vertices", check.after.num_vertices},
                                   {"edges", check.after.num_edges}}));
    return out;
  });
}

std::vector<Draft> run_z_unit(AnalyzeOptions opts, const std::string& diagram_path) {
  const std::string p = "z.";
  const std::vector<std::string> ids = {
      p + "hilbert",       p + "degh",        p + "dim",      p + "reg",
      p + "table-extremal", p + "table-euler", p + "table-reg", p + "table-pdim"};
  return guarded(ids, [&]() {
    Graph g = build_family(FamilySpec::z());
    opts.graph_id = gid(FamilySpec::z());
    InvariantReport r = analyze(g, opts);
    std::vector<Draft> out;

    out.push_back(exact_draft(p + "hilbert", zpoly_coeffs(r.hilbert.h)));
    out.push_back(exact_draft(p + "degh", r.deg_h));
    out.push_back(exact_draft(p + "dim", r.dim));
    out.push_back(bound_draft(p + "reg", r.reg));

    std::ifstream in(diagram_path);
    if (!in) throw ValidationError("cannot open diagram fixture: " + diagram_path);
    std::stringstream buf;
    buf << in.rdbuf();
    BettiTable table = parse_betti_diagram(buf.str());

    out.push_back(exact_draft(p + "table-extremal",
                              corner_list(extremal_betti(table))));
    bool euler_ok = euler_numerator(table) == r.hilbert.numerator;
    out.push_back(exact_draft(p + "table-euler", euler_ok,
                              "numerator " + r.hilbert.numerator.str()));
    out.push_back(exact_draft(p + "table-reg", table.reg()));
    out.push_back(exact_draft(p + "table-pdim", table.pdim()));
    return out;
  });
}

std::vector<Draft> run_table_unit(int r, int d, AnalyzeOptions opts) {
  const std::string p =
      "table.r" + std::to_string(r) + "d" + std::to_string(d) + ".";
  const std::vector<std::string> ids = {p + "degh", p + "reg"};
  return guarded(ids, [&]() {
    Graph g = build_table_graph(r, d);
    opts.use_gt_order = false;
    opts.graph_id = "table(r=" + std::to_string(r) + ",d=" + std::to_string(d) + ")";
    InvariantReport rep = analyze(g, opts);
    std::vector<Draft> out;
    out.push_back(exact_draft(p + "degh", rep.deg_h));
    out.push_back(bound_draft(p + "reg", rep.reg));
    return out;
  });
}

// -------------------------------------------------------------- resolution

std::string scope_of(const std::string& id) {
  return id.substr(0, id.find('.'));
}

ClaimResult resolve(const Draft& d,
                    const std::map<std::string, Fixture>& fixtures) {
  ClaimResult cr;
  cr.id = d.id;
  cr.scope = scope_of(d.id);
  cr.note = d.note;
  cr.computed = "-";

  auto fit = fixtures.find(d.id);
  if (fit == fixtures.end()) {
    cr.status = ClaimStatus::Fail;
    cr.expected = "(no fixture entry)";
    if (!d.computed.is_null()) cr.computed = d.computed.dump();
    return cr;
  }
  const Fixture& fx = fit->second;
  cr.expected = fx.expected.dump();
  cr.source = fx.source;

  if (d.forced) {
    cr.status = *d.forced;
    return cr;
  }

  if (d.bound) {
    const BoundedInvariant& b = *d.bound;
    cr.computed = bounded_invariant_str(b);
    if (!fx.expected.is_number_integer()) {
      cr.status = ClaimStatus::Fail;
      cr.note += (cr.note.empty() ? "" : "; ") + std::string("fixture is not an integer");
      return cr;
    }
    int e = fx.expected.get<int>();
    if (b.exact)
      cr.status = (*b.exact == e) ? ClaimStatus::Match : ClaimStatus::Fail;
    else
      cr.status = b.admits(e) ? ClaimStatus::BoundConsistent : ClaimStatus::Fail;
    return cr;
  }

  if (d.pair_bound) {
    const auto& [b1, b2] = *d.pair_bound;
    cr.computed = "before " + bounded_invariant_str(b1) + ", after " +
                  bounded_invariant_str(b2);
    if (!fx.expected.is_object() || !fx.expected.contains("before") ||
        !fx.expected.contains("after")) {
      cr.status = ClaimStatus::Fail;
      cr.note += (cr.note.empty() ? "" : "; ") +
                 std::string("fixture needs before/after integers");
      return cr;
    }
    int e1 = fx.expected["before"].get<int>();
    int e2 = fx.expected["after"].get<int>();
    if (b1.exact && b2.exact)
      cr.status = (*b1.exact == e1 && *b2.exact == e2) ? ClaimStatus::Match
                                                       : ClaimStatus::Fail;
    else
      cr.status = (b1.admits(e1) && b2.admits(e2)) ? ClaimStatus::BoundConsistent
                                                   : ClaimStatus::Fail;
    return cr;
  }

  cr.computed = d.computed.dump();
  cr.status = (d.computed == fx.expected) ? ClaimStatus::Match : ClaimStatus::Fail;
  return cr;
}

std::string iso_now() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

std::string claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Match: return "match";
    case ClaimStatus::BoundConsistent: return "bound-consistent";
    case ClaimStatus::Skipped: return "skipped";
    case ClaimStatus::Fail: return "FAIL";
  }
  return "?";
}

const std::vector<std::string>& repro_scopes() {
  static const std::vector<std::string> scopes = {"all", "gt",  "k2t",
                                                  "c4r", "glue", "z", "table"};
  return scopes;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("TORICGRAPH_DATA"); env && *env) return env;
#ifdef TORICGRAPH_DATA_DIR
  return TORICGRAPH_DATA_DIR;
#else
  return "data";
#endif
}

std::string default_fixtures_path() {
  return default_data_dir() + "/reproduce_expected.json";
}

ReproSummary run_reproduction(const ReproOptions& options) {
  std::set<std::string> want = options.scopes;
  if (want.empty() || want.count("all"))
    want = {"gt", "k2t", "c4r", "glue", "z", "table"};
  for (const auto& s : want)
    if (std::find(repro_scopes().begin(), repro_scopes().end(), s) ==
        repro_scopes().end())
      throw ValidationError("unknown reproduction scope: " + s);

  const std::string fixtures_path =
      options.fixtures_path.empty() ? default_fixtures_path() : options.fixtures_path;
  const auto fixtures = load_fixtures(fixtures_path);
  const std::string data_dir =
      std::filesystem::path(fixtures_path).parent_path().string();
  const std::string diagram_path =
      (data_dir.empty() ? std::string(".") : data_dir) + "/z_betti_diagram.txt";

  const AnalyzeOptions& base = options.analyze;
  std::vector<std::function<std::vector<Draft>()>> units;
  if (want.count("gt"))
    for (int t = 2; t <= 6; ++t)
      units.push_back([t, base] { return run_gt_unit(t, base); });
  if (want.count("k2t"))
    for (int t = 2; t <= 8; ++t)
      units.push_back([t, base] { return run_k2t_unit(t, base); });
  if (want.count("c4r"))
    for (int r = 1; r <= 4; ++r)
      units.push_back([r, base] { return run_c4r_unit(r, base); });
  if (want.count("glue"))
    for (bool g2 : {false, true})
      for (int s : {2, 3})
        units.push_back([g2, s, base] { return run_glue_unit(g2, s, base); });
  if (want.count("z"))
    units.push_back([base, diagram_path] { return run_z_unit(base, diagram_path); });
  if (want.count("table")) {
    for (int r = 1; r <= 3; ++r)
      units.push_back([r, base] { return run_table_unit(r, r, base); });
    for (int r = 4; r <= 7; ++r)
      for (int d = r; d <= 7; ++d)
        units.push_back([r, d, base] { return run_table_unit(r, d, base); });
  }

  std::vector<std::vector<Draft>> slots(units.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || units.size() <= 1) {
    for (size_t k = 0; k < units.size(); ++k) slots[k] = units[k]();
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t k; (k = next.fetch_add(1)) < units.size();)
        slots[k] = units[k]();
    };
    std::vector<std::thread> pool;
    const size_t n = std::min<size_t>(static_cast<size_t>(jobs), units.size());
    pool.reserve(n);
    for (size_t k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ReproSummary summary;
  for (const auto& drafts : slots)
    for (const auto& d : drafts) summary.results.push_back(resolve(d, fixtures));
  std::sort(summary.results.begin(), summary.results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
  for (const auto& cr : summary.results) {
    switch (cr.status) {
      case ClaimStatus::Match: ++summary.matched; break;
      case ClaimStatus::BoundConsistent: ++summary.bound_consistent; break;
      case ClaimStatus::Skipped: ++summary.skipped; break;
      case ClaimStatus::Fail: ++summary.failed; break;
    }
  }
  return summary;
}

std::string repro_text(const ReproSummary& s) {
  size_t idw = 0, stw = 0;
  for (const auto& cr : s.results) {
    idw = std::max(idw, cr.id.size());
    stw = std::max(stw, claim_status_name(cr.status).size());
  }
  std::ostringstream os;
  for (const auto& cr : s.results) {
    std::string st = claim_status_name(cr.status);
    os << st << std::string(stw - st.size() + 2, ' ') << cr.id
       << std::string(idw - cr.id.size() + 2, ' ') << "expected " << cr.expected
       << "  computed " << cr.computed;
    if (!cr.source.empty()) os << "  [" << cr.source << "]";
    if (!cr.note.empty()) os << "  -- " << cr.note;
    os << "\n";
  }
  os << "summary: " << s.results.size() << " claims, " << s.matched << " match, "
     << s.bound_consistent << " bound-consistent, " << s.skipped << " skipped, "
     << s.failed << " FAIL\n";
  return os.str();
}

std::string repro_json(const ReproSummary& s, bool with_timestamp) {
  ordered_json claims = ordered_json::array();
  for (const auto& cr : s.results) {
    ordered_json c{{"id", cr.id},
                   {"scope", cr.scope},
                   {"status", claim_status_name(cr.status)},
                   {"expected", cr.expected},
                   {"computed", cr.computed},
                   {"source", cr.source}};
    if (!cr.note.empty()) c["note"] = cr.note;
    claims.push_back(std::move(c));
  }
  ordered_json doc{{"claims", std::move(claims)},
                   {"summary",
                    {{"total", s.results.size()},
                     {"match", s.matched},
                     {"bound_consistent", s.bound_consistent},
                     {"skipped", s.skipped},
                     {"fail", s.failed},
                     {"ok", s.ok()}}}};
  if (with_timestamp) doc["generated_at"] = iso_now();
  return doc.dump(2) + "\n";
}

}  // namespace toricgraph
