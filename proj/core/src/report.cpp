#include "toricgraph/report.hpp"

#include <json.hpp>

#include <ctime>
#include <sstream>

namespace toricgraph {

namespace {

using nlohmann::ordered_json;

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

ordered_json coeff_list(const ZPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const Integer& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

ordered_json betti_json(const BettiTable& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& [ij, e] : t.entries())
    arr.push_back(ordered_json{{"i", ij.first},
                               {"j", ij.second},
                               {"value", e.value},
                               {"provenance", provenance_name(e.prov)}});
  return arr;
}

ordered_json bounded_json(const BoundedInvariant& b) {
  ordered_json j{{"lower", b.lower}, {"upper", b.upper}, {"route", b.route}};
  if (b.exact)
    j["exact"] = *b.exact;
  else
    j["exact"] = nullptr;
  return j;
}

}  // namespace

std::string bounded_invariant_str(const BoundedInvariant& b) {
  if (b.exact) return std::to_string(*b.exact) + " (" + b.route + ")";
  std::ostringstream out;
  out << "in [" << b.lower << ", ";
  if (b.upper < 0)
    out << "?";
  else
    out << b.upper;
  out << "] (" << b.route << ")";
  return out.str();
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "graph: " << r.graph_id << "  (" << r.num_vertices << " vertices, "
      << r.num_edges << " edges)\n";
  out << "connected: " << (r.connected ? "yes" : "no")
      << "  components: " << r.components
      << "  bipartite components: " << r.bipartite_comps << "\n";
  out << "order: " << r.order_description << "\n";

  out << "toric basis (" << (r.basis ? r.basis->size() : 0) << " generators):\n";
  if (r.basis)
    for (const Polynomial& g : r.basis->generators()) out << "  " << g.str() << "\n";

  out << "initial ideal (" << r.initial_gens.size() << " generators):";
  if (r.basis) {
    const ContextPtr& ctx = r.basis->context();
    for (const Monomial& m : r.initial_gens) out << " " << ctx->monomial_str(m);
  }
  out << "\n";

  out << "hilbert numerator: " << r.hilbert.numerator.str() << "\n";
  out << "h-polynomial: " << r.hilbert.h.str() << "  (deg h = " << r.deg_h << ")\n";
  out << "dimension: " << r.dim << "\n";

  out << "initial betti (" << r.initial_betti_route << ")";
  if (r.initial_betti_available) {
    out << ":\n" << render_betti_diagram(r.initial_betti);
    out << "extremal:";
    for (const auto& [i, j] : r.extremal) out << " (" << i << "," << j << ")";
    out << "\n";
    if (r.linquo) {
      out << "linear quotients: max colon size " << r.linquo->max_colon_size() << "\n";
    }
  } else {
    out << "\n";
  }

  if (r.toric_betti) {
    out << "toric betti (oracle window i<=" << r.toric_betti->max_i
        << ", j<=" << r.toric_betti->max_j
        << (r.toric_betti->probabilistic ? ", probabilistic" : "") << "):\n"
        << render_betti_diagram(r.toric_betti->table);
    if (r.comparison) {
      out << "comparison: "
          << (r.comparison->all_equal ? "equal to initial table"
                                      : "bounded by initial table")
          << "\n";
    }
  }

  out << "regularity: " << bounded_invariant_str(r.reg) << "\n";
  out << "projective dimension: " << bounded_invariant_str(r.pdim) << "\n";
  if (r.depth) out << "depth: " << *r.depth << "\n";
  if (r.cohen_macaulay)
    out << "cohen-macaulay: " << (*r.cohen_macaulay ? "yes" : "no") << "\n";

  for (const std::string& c : r.checks) out << "check: " << c << "\n";
  for (const std::string& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string report_json(const InvariantReport& r, bool with_timestamp) {
  ordered_json j;
  j["graph"] = {{"id", r.graph_id},
                {"vertices", r.num_vertices},
                {"edges", r.num_edges},
                {"connected", r.connected},
                {"components", r.components},
                {"bipartite_components", r.bipartite_comps}};
  j["order"] = r.order_description;

  ordered_json gens = ordered_json::array();
  if (r.basis)
    for (const Polynomial& g : r.basis->generators()) gens.push_back(g.str());
  j["toric_basis"] = gens;

  ordered_json init = ordered_json::array();
  if (r.basis) {
    const ContextPtr& ctx = r.basis->context();
    for (const Monomial& m : r.initial_gens) init.push_back(ctx->monomial_str(m));
  }
  j["initial_ideal"] = init;

  j["hilbert"] = {{"numerator", coeff_list(r.hilbert.numerator)},
                  {"h", coeff_list(r.hilbert.h)},
                  {"dim", r.dim},
                  {"deg_h", r.deg_h}};

  j["initial_betti"] = {{"route", r.initial_betti_route},
                        {"available", r.initial_betti_available}};
  if (r.initial_betti_available) {
    j["initial_betti"]["entries"] = betti_json(r.initial_betti);
    j["initial_betti"]["diagram"] = render_betti_diagram(r.initial_betti);
    ordered_json ext = ordered_json::array();
    for (const auto& [a, b] : r.extremal) ext.push_back(ordered_json::array({a, b}));
    j["initial_betti"]["extremal"] = ext;
    if (r.linquo) {
      ordered_json lq;
      lq["max_colon_size"] = r.linquo->max_colon_size();
      ordered_json order = ordered_json::array();
      for (const Monomial& m : r.linquo->order)
        order.push_back(r.linquo->ctx->monomial_str(m));
      lq["order"] = order;
      j["initial_betti"]["linear_quotients"] = lq;
    }
  }

  if (r.toric_betti) {
    j["toric_betti"] = {{"max_i", r.toric_betti->max_i},
                        {"max_j", r.toric_betti->max_j},
                        {"probabilistic", r.toric_betti->probabilistic},
                        {"entries", betti_json(r.toric_betti->table)}};
    if (r.comparison) {
      ordered_json cmp{{"window_covers_initial", r.comparison->window_covers_initial},
                       {"all_equal", r.comparison->all_equal},
                       {"probabilistic", r.comparison->probabilistic}};
      ordered_json rows = ordered_json::array();
      for (int d : r.comparison->equal_rows) rows.push_back(d);
      cmp["equal_rows"] = rows;
      ordered_json cells = ordered_json::array();
      for (const auto& [a, b] : r.comparison->smaller_cells)
        cells.push_back(ordered_json::array({a, b}));
      cmp["smaller_cells"] = cells;
      j["comparison"] = cmp;
    }
  }

  ordered_json certified = ordered_json::array();
  for (const auto& [ij, v] : r.certified_toric)
    certified.push_back(ordered_json{{"i", ij.first}, {"j", ij.second}, {"value", v}});
  j["certified_toric_entries"] = certified;

  j["regularity"] = bounded_json(r.reg);
  j["projective_dimension"] = bounded_json(r.pdim);
  j["depth"] = r.depth ? ordered_json(*r.depth) : ordered_json(nullptr);
  j["cohen_macaulay"] =
      r.cohen_macaulay ? ordered_json(*r.cohen_macaulay) : ordered_json(nullptr);
  j["checks"] = r.checks;
  j["warnings"] = r.warnings;
  if (with_timestamp) j["generated_at"] = timestamp_utc();
  return j.dump(2) + "\n";
}

std::string gluing_check_text(const GluingCheck& check) {
  std::ostringstream out;
  out << "gluing C" << 2 * check.s << " onto edge '" << check.edge << "'\n";
  out << "applies (connected host): " << (check.applies ? "yes" : "no") << "\n";
  out << "deg h: " << check.deg_h_before << " -> " << check.deg_h_after << "  expected +"
      << (check.s - 1) << ": " << (check.deg_h_increment_ok ? "ok" : "MISMATCH") << "\n";
  out << "reg: " << bounded_invariant_str(check.reg_before) << " -> "
      << bounded_invariant_str(check.reg_after) << "  expected +" << (check.s - 1)
      << ": ";
  if (check.reg_increment_ok)
    out << (*check.reg_increment_ok ? "ok" : "MISMATCH");
  else
    out << (check.reg_increment_consistent ? "consistent" : "MISMATCH");
  out << "\n";
  return out.str();
}

std::string gluing_check_json(const GluingCheck& check, bool with_timestamp) {
  ordered_json j;
  j["cycle"] = 2 * check.s;
  j["edge"] = check.edge;
  j["applies"] = check.applies;
  j["deg_h"] = {{"before", check.deg_h_before},
                {"after", check.deg_h_after},
                {"expected_increment", check.s - 1},
                {"ok", check.deg_h_increment_ok}};
  j["reg"] = {{"before", bounded_json(check.reg_before)},
              {"after", bounded_json(check.reg_after)},
              {"expected_increment", check.s - 1},
              {"consistent", check.reg_increment_consistent}};
  if (check.reg_increment_ok)
    j["reg"]["ok"] = *check.reg_increment_ok;
  else
    j["reg"]["ok"] = nullptr;
  if (with_timestamp) j["generated_at"] = timestamp_utc();
  return j.dump(2) + "\n";
}

}  // namespace toricgraph
