#include <algorithm>
#include <sstream>

#include "commands.hpp"

namespace pfres::cli {

namespace {

using Row = std::vector<std::string>;

// Left-aligned columns, two spaces apart.
void table(std::ostream& out, const Row& header, const std::vector<Row>& rows, const std::string& indent = "") {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const Row& r) {
    std::string s = indent;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
    }
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string str(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

std::string twist(const Json& t) { return "(" + t[0].dump() + "," + t[1].dump() + ")"; }

std::string tuple(const Json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].dump();
  return s + ")";
}

void params(std::ostream& out, const Json& p) {
  out << "f=" << p["f"] << " g=" << p["g"] << " delta=" << p["delta"] << " eps=" << p["epsilon"]
      << " prime=" << p["prime"] << " rng-seed=" << p["rng_seed"] << "\n";
}

void checks(std::ostream& out, const Json& list) {
  for (const auto& c : list) {
    out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["check"].get<std::string>();
    if (!c["detail"].get<std::string>().empty()) out << ": " << c["detail"].get<std::string>();
    out << "\n";
    if (c.contains("notes"))
      for (const auto& n : c["notes"]) out << "     " << n.get<std::string>() << "\n";
  }
}

void render_build(std::ostream& out, const Json& doc) {
  params(out, doc["params"]);
  for (const auto& c : doc["complexes"]) {
    out << "\n" << c["name"].get<std::string>() << "\n";
    std::vector<Row> mods, parts;
    for (const auto& p : c["positions"]) {
      std::string m;
      for (const auto& t : p["twists"])
        m += (m.empty() ? "" : " + ") + std::string("R") + twist(t["twist"]) + "^" + t["rank"].dump();
      mods.push_back({p["N"].dump(), p["rank"].dump(), m});
      for (const auto& s : p["summands"])
        parts.push_back({p["N"].dump(), s["label"].get<std::string>(), twist(s["twist"]), s["rank"].dump()});
    }
    table(out, {"N", "rank", "module"}, mods, "  ");
    out << "\n";
    table(out, {"N", "summand", "twist", "rank"}, parts, "  ");
  }
  if (!doc["files"].empty()) {
    out << "\nwrote";
    for (const auto& f : doc["files"]) out << " " << f.get<std::string>();
    out << "\n";
  }
}

void render_verify(std::ostream& out, const Json& doc) {
  params(out, doc["params"]);
  out << "mutation: " << doc["mutation"].get<std::string>() << "\n";
  checks(out, doc["checks"]);
  out << "overall: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  if (!doc["report"].is_null()) out << "report: " << doc["report"].get<std::string>() << "\n";
}

void render_hilbert(std::ostream& out, const Json& doc) {
  std::vector<Row> rows;
  for (const auto& r : doc["rows"]) {
    if (r["status"] != "ok") {
      rows.push_back({r["g"].dump(), r["f"].dump(), "-", r["status"].get<std::string>(), "", "", ""});
      continue;
    }
    rows.push_back({r["g"].dump(), r["f"].dump(), r["epsilon"].dump(), r["hn"].get<std::string>(),
                    tuple(r["h_vector"]), r["multiplicity"].dump(), str(r["linear"])});
  }
  table(out, {"g", "f", "eps", "hn", "h-vector", "e", "linear?"}, rows);
}

void render_unmixed(std::ostream& out, const Json& doc) {
  params(out, doc["params"]);
  if (!doc["message"].is_null()) out << doc["message"].get<std::string>() << "\n";
  out << "c generators (" << doc["c"].size() << ")\n";
  for (const auto& p : doc["c"]) out << "  " << p.get<std::string>() << "\n";
  if (doc.contains("content")) {
    const auto& s = doc["content"];
    out << "content generators, (d,n) = (" << s["d"] << "," << s["n"] << ") (" << s["generators"].size() << ")\n";
    for (const auto& p : s["generators"]) out << "  " << p.get<std::string>() << "\n";
    if (s.contains("multiplicity_sum"))
      out << "multiplicity sum " << s["multiplicity_sum"] << ", hn(1) " << s["hn_at_one"] << "\n";
  }
  for (const auto& r : doc["reports"]) {
    out << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["check"].get<std::string>();
    if (!r["detail"].get<std::string>().empty()) out << ": " << r["detail"].get<std::string>();
    out << "\n";
  }
  out << "overall: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void render_sweep(std::ostream& out, const Json& doc) {
  std::vector<Row> rows;
  for (const auto& r : doc["rows"])
    rows.push_back({r["identity"].get<std::string>(), r["bound"].dump(), r["instances"].dump(), r["violations"].dump(),
                    r["first_violation"].get<std::string>()});
  table(out, {"identity", "bound", "instances", "violations", "first violation"}, rows);
  out << "overall: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream out;
  const auto kind = doc.at("kind").get<std::string>();
  if (kind == "build") render_build(out, doc);
  else if (kind == "verify") render_verify(out, doc);
  else if (kind == "hilbert") render_hilbert(out, doc);
  else if (kind == "unmixed") render_unmixed(out, doc);
  else if (kind == "sweep") render_sweep(out, doc);
  else throw UsageError("unknown document kind '" + kind + "'");
  return out.str();
}

}  // namespace pfres::cli
