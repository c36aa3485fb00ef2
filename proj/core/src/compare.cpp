#include <descend/compare.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace descend {

const char *ordering_text(Ordering o) {
  switch (o) {
  case Ordering::EQ: return "EQ";
  case Ordering::LT: return "LT";
  case Ordering::GT: return "GT";
  default: return "UN";
  }
}

Ordering classify(const Value &v1, DomainId d1, const Value &v2, DomainId d2) {
  auto common = common_comparison_domain(d1, d2);
  if (!common)
    throw ConfigError("no common comparison domain for " + domain_id_name(d1) +
                      " and " + domain_id_name(d2));
  bool le, ge;
  if (*common == DomainId::Par) {
    const auto &a = std::get<ParityEnv>(v1);
    const auto &b = std::get<ParityEnv>(v2);
    le = a.leq(b);
    ge = b.leq(a);
  } else if (d1 == d2 && (d1 == DomainId::Itv || d1 == DomainId::Box)) {
    const auto &a = std::get<Box>(v1);
    const auto &b = std::get<Box>(v2);
    le = a.leq(b);
    ge = b.leq(a);
  } else {
    Value a = embed_for_comparison(d1, v1);
    Value b = embed_for_comparison(d2, v2);
    const auto &pa = std::get<Pset>(a);
    const auto &pb = std::get<Pset>(b);
    le = pa.leq(pb);
    ge = pb.leq(pa);
  }
  if (le && ge) return Ordering::EQ;
  if (le) return Ordering::LT;
  if (ge) return Ordering::GT;
  return Ordering::UN;
}

std::array<std::size_t, 4> ComparisonReport::PerProgram::counts() const {
  std::array<std::size_t, 4> c{0, 0, 0, 0};
  for (const WpRow &r : rows) ++c[static_cast<std::size_t>(r.cls)];
  return c;
}

std::size_t ComparisonReport::total_wps() const {
  std::size_t n = 0;
  for (const auto &p : programs) n += p.rows.size();
  return n;
}

std::array<std::size_t, 4> ComparisonReport::counts() const {
  std::array<std::size_t, 4> c{0, 0, 0, 0};
  for (const auto &p : programs) {
    auto pc = p.counts();
    for (std::size_t i = 0; i < 4; ++i) c[i] += pc[i];
  }
  return c;
}

std::array<double, 4> ComparisonReport::percentages() const {
  std::array<double, 4> pct{0, 0, 0, 0};
  std::size_t total = total_wps();
  if (total == 0) return pct;
  auto c = counts();
  for (std::size_t i = 0; i < 4; ++i)
    pct[i] = 100.0 * static_cast<double>(c[i]) / static_cast<double>(total);
  return pct;
}

ComparisonReport compare_runs(const Cfg &cfg, const std::string &program_name,
                              const AnalysisConfig &config1,
                              const AnalysisConfig &config2) {
  if (config1.wp_override != config2.wp_override)
    throw ConfigError("the two configurations name different widening points");
  if (!common_comparison_domain(config1.desc, config2.desc))
    throw ConfigError("no common comparison domain for " + config1.describe() +
                      " and " + config2.describe());

  AnalysisResult r1 = analyze(cfg, config1);
  AnalysisResult r2 = analyze(cfg, config2);

  ComparisonReport report;
  report.dom1 = config1.describe();
  report.dom2 = config2.describe();
  report.time1_seconds = r1.ascend_seconds + r1.descend_seconds;
  report.time2_seconds = r2.ascend_seconds + r2.descend_seconds;

  ComparisonReport::PerProgram per;
  per.name = program_name;
  for (NodeId n : r1.wp)
    per.rows.push_back(
        {n, classify(r1.final[n], config1.desc, r2.final[n], config2.desc)});
  report.programs.push_back(std::move(per));
  return report;
}

ComparisonReport aggregate(std::span<const ComparisonReport> reports) {
  ComparisonReport out;
  for (const ComparisonReport &r : reports) {
    if (out.programs.empty()) {
      out.dom1 = r.dom1;
      out.dom2 = r.dom2;
    }
    out.programs.insert(out.programs.end(), r.programs.begin(), r.programs.end());
    out.time1_seconds += r.time1_seconds;
    out.time2_seconds += r.time2_seconds;
  }
  return out;
}

namespace {

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string pad_left(const std::string &s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string &s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

} // namespace

std::string render_report(const ComparisonReport &r) {
  std::string out;
  out += "DOM1 = " + r.dom1 + "\n";
  out += "DOM2 = " + r.dom2 + "\n";
  out += "note: lattice-order comparison; disjunctive refinements count as "
         "improvements\n\n";

  std::size_t name_w = 8;
  for (const auto &p : r.programs) name_w = std::max(name_w, p.name.size());

  out += pad_right("program", name_w) + "  #WP    EQ    LT    GT    UN\n";
  for (const auto &p : r.programs) {
    auto c = p.counts();
    out += pad_right(p.name, name_w) + pad_left(std::to_string(p.rows.size()), 5);
    for (std::size_t i = 0; i < 4; ++i) out += pad_left(std::to_string(c[i]), 6);
    out += "\n";
  }
  auto c = r.counts();
  auto pct = r.percentages();
  out += pad_right("total", name_w) + pad_left(std::to_string(r.total_wps()), 5);
  for (std::size_t i = 0; i < 4; ++i) out += pad_left(std::to_string(c[i]), 6);
  out += "\n";
  out += pad_right("% WP", name_w) + pad_left("100.0", 5);
  for (std::size_t i = 0; i < 4; ++i) out += pad_left(fixed1(pct[i]), 6);
  out += "\n";
  if (r.delta_eq)
    out += "dEQ " + fixed1(*r.delta_eq) + "\n";
  out += "time: DOM1 " + fixed3(r.time1_seconds) + "s  DOM2 " +
         fixed3(r.time2_seconds) + "s\n";
  return out;
}

std::string report_to_json(const ComparisonReport &r) {
  using json = nlohmann::ordered_json;
  json j;
  j["dom1"] = r.dom1;
  j["dom2"] = r.dom2;
  j["comparison_semantics"] = "lattice";
  json programs = json::array();
  for (const auto &p : r.programs) {
    json rows = json::array();
    for (const WpRow &row : p.rows)
      rows.push_back(json{{"node", row.node},
                          {"label", "x" + std::to_string(row.node)},
                          {"class", ordering_text(row.cls)}});
    auto c = p.counts();
    programs.push_back(json{{"name", p.name},
                            {"wps", std::move(rows)},
                            {"counts",
                             json{{"eq", c[0]}, {"lt", c[1]}, {"gt", c[2]}, {"un", c[3]}}}});
  }
  j["programs"] = std::move(programs);
  auto c = r.counts();
  auto pct = r.percentages();
  j["totals"] = json{
      {"wps", r.total_wps()},
      {"counts", json{{"eq", c[0]}, {"lt", c[1]}, {"gt", c[2]}, {"un", c[3]}}},
      {"percentages",
       json{{"eq", pct[0]}, {"lt", pct[1]}, {"gt", pct[2]}, {"un", pct[3]}}}};
  if (r.delta_eq)
    j["delta_eq"] = *r.delta_eq;
  else
    j["delta_eq"] = nullptr;
  j["timings"] = json{{"dom1_seconds", r.time1_seconds},
                      {"dom2_seconds", r.time2_seconds}};
  return j.dump(2) + "\n";
}

} // namespace descend
