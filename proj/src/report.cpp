#include "folnewt/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace folnewt {

using nlohmann::json;

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const LabelSet& labels) { return json(labels.items()); }

json to_json(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

namespace {

json points_json(const std::vector<Point>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(p);
  return out;
}

json weight_json(const WeightVector& w) {
  json out = json::object();
  for (std::size_t i = 0; i < w.axes().size(); ++i) out[w.axes()[i]] = to_string(w.entries()[i]);
  return out;
}

}  // namespace

json to_json(const Face& face) {
  return {{"weight", weight_json(face.weight)},
          {"value", to_string(face.value)},
          {"vertices", points_json(face.vertices)},
          {"points", points_json(face.points)}};
}

json to_json(const Witness& w) {
  json out = {{"exact", w.exact}};
  if (w.exact) {
    json values = json::object();
    for (const auto& [k, v] : w.values) values[k] = to_string(v);
    out["values"] = values;
  } else {
    json values = json::object();
    for (const auto& [k, v] : w.numeric) values[k] = {v.real(), v.imag()};
    out["numeric"] = values;
    out["residual"] = w.residual;
  }
  return out;
}

json to_json(const groebner::FuelUsage& usage) {
  return {{"spair_reductions", usage.spair_reductions},
          {"max_spair_reductions_single_run", usage.max_spair_reductions_single_run},
          {"groebner_runs", usage.runs},
          {"exhausted_runs", usage.exhausted_runs}};
}

json to_json(const Verdict& v) {
  json out = {{"outcome", std::string(to_string(v.outcome))}, {"reason", v.reason}, {"checks", v.checks}};
  if (v.evidence) {
    const Evidence& e = *v.evidence;
    json ev = {{"chart", e.chart}, {"stratum", to_json(e.stratum)}};
    ev["face"] = e.face ? to_json(*e.face) : json(nullptr);
    ev["locus"] = e.locus ? to_json(*e.locus) : json(nullptr);
    ev["witness"] = e.witness ? to_json(*e.witness) : json(nullptr);
    json centers = json::array();
    for (const auto& c : e.centers) centers.push_back(to_json(c));
    ev["centers"] = centers;
    out["evidence"] = ev;
  } else {
    out["evidence"] = nullptr;
  }
  return out;
}

json to_json(const PolyhedraSystem& system) {
  json out = json::array();
  for (const auto& [j, n] : system.polyhedra) {
    out.push_back({{"stratum", to_json(j)},
                   {"vertices", points_json(n.vertices)},
                   {"support", points_json({system.supports.at(j).points.begin(), system.supports.at(j).points.end()})}});
  }
  return out;
}

json to_json(const LogsingResult& r) {
  json strata = json::array();
  for (const auto& s : r.strata) {
    strata.push_back({{"chart", s.chart},
                      {"stratum", to_json(s.stratum)},
                      {"empty", std::string(to_string(s.empty))},
                      {"locus", to_json(s.locus)}});
  }
  return {{"empty", std::string(to_string(r.empty))}, {"strata", strata}};
}

json to_json(const LogFormChart& chart) {
  json coeffs = json::object();
  for (const auto& [v, a] : chart.coeffs) coeffs[v] = a.to_string();
  json out = {{"id", chart.id}, {"divisor", to_json(chart.divisor)}, {"free", to_json(chart.free)},
              {"coefficients", coeffs}};
  if (chart.provenance) {
    out["parent"] = chart.provenance->parent;
    out["center"] = to_json(chart.provenance->center);
    out["selector"] = chart.provenance->selector;
    out["exceptional"] = chart.provenance->exceptional;
  } else {
    out["parent"] = nullptr;
  }
  return out;
}

json blowup_log_json(const Atlas& atlas) {
  json out = json::array();
  for (const auto& rec : atlas.log()) {
    out.push_back({{"center", to_json(rec.center)}, {"exceptional", rec.exceptional}, {"replaced", rec.replaced}});
  }
  return out;
}

json atlas_json(const Atlas& atlas) {
  json charts = json::array();
  for (const auto& c : atlas.charts()) charts.push_back(to_json(c));
  json leaves = json::array();
  for (const auto* c : atlas.leaves()) leaves.push_back(c->id);
  json fabric = json::array();
  for (const auto& m : atlas.fabric().maximal_strata()) fabric.push_back(to_json(m));
  return {{"charts", charts}, {"leaves", leaves}, {"maximal_strata", fabric}};
}

json report_header(std::string_view command, std::string_view input_text) {
  return {{"schema_version", std::string(report_schema_version)},
          {"command", std::string(command)},
          {"input_digest", "fnv1a64:" + fnv1a64_hex(input_text)}};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string atlas_dot(const Atlas& atlas) {
  std::ostringstream os;
  os << "digraph charts {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::vector<std::string> leaf_ids;
  for (const auto* c : atlas.leaves()) leaf_ids.push_back(c->id);
  for (const auto& c : atlas.charts()) {
    std::string label = c.id + "\\nD = " + c.divisor.to_string();
    const bool leaf = std::find(leaf_ids.begin(), leaf_ids.end(), c.id) != leaf_ids.end();
    if (leaf) {
      const PolyhedraSystem sys = chart_polyhedra(c);
      for (const auto& [j, n] : sys.polyhedra) {
        if (j.empty()) continue;
        label += "\\nN" + dot_escape(j.to_string()) + ":";
        for (const auto& v : n.vertices) label += " " + to_string(v);
      }
    }
    os << "  \"" << dot_escape(c.id) << "\" [label=\"" << label << "\"" << (leaf ? ", style=bold" : "") << "];\n";
  }
  for (const auto& c : atlas.charts()) {
    if (!c.provenance) continue;
    os << "  \"" << dot_escape(c.provenance->parent) << "\" -> \"" << dot_escape(c.id) << "\" [label=\""
       << dot_escape(c.provenance->selector) << " / " << dot_escape(c.provenance->center.to_string()) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

void render_verdict(std::ostringstream& os, const std::string& title, const json& v) {
  os << title << ": " << v.at("outcome").get<std::string>() << " (" << v.at("reason").get<std::string>() << ")\n";
  const json& ev = v.at("evidence");
  if (ev.is_null()) return;
  os << "  chart " << ev.at("chart").get<std::string>() << ", stratum " << ev.at("stratum").dump() << "\n";
  if (!ev.at("face").is_null()) {
    os << "  face vertices " << ev.at("face").at("vertices").dump() << ", weight " << ev.at("face").at("weight").dump()
       << "\n";
  }
  if (!ev.at("locus").is_null()) os << "  locus " << ev.at("locus").dump() << "\n";
  if (!ev.at("witness").is_null()) os << "  witness " << ev.at("witness").dump() << "\n";
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "folnewt " << report.at("command").get<std::string>() << "  [" << report.at("input_digest").get<std::string>()
     << "]\n";
  const json& r = report.at("result");
  if (r.contains("outcome")) render_verdict(os, "verdict", r);
  if (r.contains("agreement")) {
    os << "agreement: " << r.at("agreement").get<std::string>() << "\n";
    render_verdict(os, "direct", r.at("direct"));
    render_verdict(os, "theorem", r.at("theorem"));
  }
  if (r.contains("empty")) {
    os << "logsing empty: " << r.at("empty").get<std::string>() << "\n";
    for (const auto& s : r.at("strata")) {
      os << "  chart " << s.at("chart").get<std::string>() << " stratum " << s.at("stratum").dump() << ": "
         << s.at("empty").get<std::string>() << " locus " << s.at("locus").dump() << "\n";
    }
  }
  if (r.contains("complete")) {
    os << "desingularized: " << (r.at("complete").get<bool>() ? "yes" : "no") << " after "
       << r.at("blowups").get<std::size_t>() << " blow-ups\n";
  }
  if (r.contains("valid")) {
    os << "valid: " << (r.at("valid").get<bool>() ? "yes" : "no");
    if (!r.at("error").is_null()) os << " (" << r.at("error").get<std::string>() << ")";
    os << "\n";
  }
  if (report.contains("polyhedra")) {
    for (const auto& p : report.at("polyhedra")) {
      os << "N" << p.at("stratum").dump() << " vertices " << p.at("vertices").dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace folnewt
