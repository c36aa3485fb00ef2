#include <descend/trace.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace descend {

namespace {

std::string label(NodeId n) { return "x" + std::to_string(n); }

std::string wp_set_text(const std::set<NodeId> &wp) {
  std::string out = "{";
  bool first = true;
  for (NodeId n : wp) {
    if (!first) out += ",";
    out += label(n);
    first = false;
  }
  return out + "}";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render() const {
    std::vector<std::size_t> width(header.size(), 0);
    auto widen_to = [&](const std::vector<std::string> &row) {
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    };
    widen_to(header);
    for (const auto &row : rows) widen_to(row);
    std::string out;
    auto emit = [&](const std::vector<std::string> &row) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size())
          line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    };
    emit(header);
    for (const auto &row : rows) emit(row);
    return out;
  }
};

std::string phase_footer(const PhaseTrace &t, int k) {
  if (t.stabilized)
    return "stabilized after " + std::to_string(t.sweeps.size()) + " sweep" +
           (t.sweeps.size() == 1 ? "" : "s") + "\n";
  return "reached the iteration limit (k = " + std::to_string(k) + ")\n";
}

std::string phase_table(const AnalysisResult &r, const PhaseTrace &t,
                        const Domain &dom, const Assignment *transfer_col) {
  Table tbl;
  tbl.header = {"node", "wp"};
  if (transfer_col) tbl.header.push_back("transfer");
  for (std::size_t s = 1; s <= t.sweeps.size(); ++s)
    tbl.header.push_back("sweep " + std::to_string(s));
  std::size_t nodes = t.sweeps.empty()
                          ? (transfer_col ? transfer_col->size() - 1 : 0)
                          : t.sweeps[0].size() - 1;
  for (NodeId n = 1; n <= nodes; ++n) {
    std::vector<std::string> row{label(n), r.wp.count(n) ? "*" : ""};
    if (transfer_col) row.push_back(dom.render((*transfer_col)[n]));
    for (const Assignment &x : t.sweeps) row.push_back(dom.render(x[n]));
    tbl.rows.push_back(std::move(row));
  }
  return tbl.render();
}

} // namespace

std::string render_final(const AnalysisResult &r) {
  auto dom = make_domain(r.config.desc, *r.program, r.config.max_disjuncts);
  std::string out;
  for (NodeId n = 1; n < r.final.size(); ++n)
    out += label(n) + ": " + dom->render(r.final[n]) + "\n";
  return out;
}

std::string render_trace(const AnalysisResult &r) {
  auto asc_dom = make_domain(r.config.asc, *r.program, r.config.max_disjuncts);
  auto desc_dom = make_domain(r.config.desc, *r.program, r.config.max_disjuncts);
  bool native = desc_dom->has_native_narrowing() && !r.config.force_glb_narrowing;

  std::string out;
  out += "config: asc=" + asc_dom->name() + " desc=" + desc_dom->name() +
         " k=" + std::to_string(r.config.k) +
         " delay=" + std::to_string(r.config.widening_delay) +
         " narrowing=" + (native ? "native" : "glb") + " wp=" + wp_set_text(r.wp) +
         "\n\n";

  out += "ascending phase (" + asc_dom->name() + ")\n";
  out += phase_table(r, r.ascending, *asc_dom, nullptr);
  out += phase_footer(r.ascending, r.config.k);

  out += "\ndescending phase (" + desc_dom->name() + ")\n";
  out += phase_table(r, r.descending, *desc_dom,
                     r.transferred ? &*r.transferred : nullptr);
  out += phase_footer(r.descending, r.config.k);

  out += "\nfinal invariants\n";
  out += render_final(r);
  return out;
}

std::string render_wp_table(const AnalysisResult &r, NodeId wp) {
  auto asc_dom = make_domain(r.config.asc, *r.program, r.config.max_disjuncts);
  auto desc_dom = make_domain(r.config.desc, *r.program, r.config.max_disjuncts);

  std::string out = "widening point " + label(wp) + " (" + r.config.describe() + ")\n";

  const Value *prev = nullptr;
  for (std::size_t s = 0; s < r.ascending.sweeps.size(); ++s) {
    const Value &v = r.ascending.sweeps[s][wp];
    if (prev && asc_dom->equal(v, *prev)) {
      out += "asc/" + std::to_string(s + 1) + "  same value (detected post-fixpoint in " +
             asc_dom->name() + ")\n";
      break;
    }
    out += "asc/" + std::to_string(s + 1) + "  " + asc_dom->render(v) + "\n";
    prev = &v;
  }

  prev = nullptr;
  if (r.transferred) {
    out += "dsc/0  " + desc_dom->render((*r.transferred)[wp]) + "\n";
    prev = &(*r.transferred)[wp];
  }
  for (std::size_t s = 0; s < r.descending.sweeps.size(); ++s) {
    const Value &v = r.descending.sweeps[s][wp];
    if (prev && desc_dom->equal(v, *prev)) {
      out += "dsc/" + std::to_string(s + 1) + "  same value (detected fixpoint in " +
             desc_dom->name() + ")\n";
      break;
    }
    out += "dsc/" + std::to_string(s + 1) + "  " + desc_dom->render(v) + "\n";
    prev = &v;
  }
  return out;
}

std::string render_wp_tables(const AnalysisResult &r) {
  std::string out;
  bool first = true;
  for (NodeId n : r.wp) {
    if (!first) out += "\n";
    out += render_wp_table(r, n);
    first = false;
  }
  return out;
}

std::string trace_to_json(const AnalysisResult &r, const std::string &program_name) {
  using json = nlohmann::ordered_json;
  auto asc_dom = make_domain(r.config.asc, *r.program, r.config.max_disjuncts);
  auto desc_dom = make_domain(r.config.desc, *r.program, r.config.max_disjuncts);

  json j;
  j["program"] = program_name;
  json cfg;
  cfg["asc"] = asc_dom->name();
  cfg["desc"] = desc_dom->name();
  cfg["k"] = r.config.k;
  cfg["widening_delay"] = r.config.widening_delay;
  cfg["glb_narrowing"] =
      r.config.force_glb_narrowing || !desc_dom->has_native_narrowing();
  j["config"] = std::move(cfg);

  json nodes = json::array();
  for (NodeId n = 1; n < r.final.size(); ++n)
    nodes.push_back(json{{"id", n}, {"label", label(n)}});
  j["nodes"] = std::move(nodes);
  j["wp"] = std::vector<NodeId>(r.wp.begin(), r.wp.end());

  auto sweeps_json = [&](const PhaseTrace &t, const Domain &dom) {
    json arr = json::array();
    for (const Assignment &x : t.sweeps) {
      json sweep;
      for (NodeId n = 1; n < x.size(); ++n) sweep[label(n)] = dom.render(x[n]);
      arr.push_back(std::move(sweep));
    }
    return arr;
  };

  json phases = json::array();
  phases.push_back(json{{"phase", "ascending"},
                        {"domain", asc_dom->name()},
                        {"stabilized", r.ascending.stabilized},
                        {"sweeps", sweeps_json(r.ascending, *asc_dom)}});
  if (r.transferred) {
    json sweep;
    for (NodeId n = 1; n < r.transferred->size(); ++n)
      sweep[label(n)] = desc_dom->render((*r.transferred)[n]);
    phases.push_back(json{{"phase", "transfer"},
                          {"domain", desc_dom->name()},
                          {"stabilized", true},
                          {"sweeps", json::array({std::move(sweep)})}});
  }
  phases.push_back(json{{"phase", "descending"},
                        {"domain", desc_dom->name()},
                        {"stabilized", r.descending.stabilized},
                        {"sweeps", sweeps_json(r.descending, *desc_dom)}});
  j["phases"] = std::move(phases);

  json fin;
  for (NodeId n = 1; n < r.final.size(); ++n)
    fin[label(n)] = desc_dom->render(r.final[n]);
  j["final"] = std::move(fin);
  j["stabilized"] = r.descending.stabilized;
  j["sweep_counts"] = json{{"asc", r.ascending.sweeps.size()},
                           {"desc", r.descending.sweeps.size()}};
  return j.dump(2) + "\n";
}

} // namespace descend
