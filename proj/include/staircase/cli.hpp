#pragma once

#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "asymptotics.hpp"
#include "checks.hpp"
#include "closed_form.hpp"
#include "enumerate.hpp"
#include "free_energy.hpp"
#include "transfer.hpp"

// Command implementations for the binary. Each cmd_* renders its full
// output as a string so the formatting is testable; the binary only parses
// flags, applies config-file fallbacks, and routes.

namespace staircase {
namespace cli {

using json = nlohmann::ordered_json;

inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// "lo:hi:count" with an optional ":log" or ":linear" suffix
struct Range {
  double lo = 0.5;
  double hi = 8.0;
  int count = 9;
  bool log_spaced = false;
};

inline Range parse_range(const std::string& s) {
  Range r;
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4)
    throw std::invalid_argument("range: want lo:hi:count[:log|:linear]");
  r.lo = std::stod(parts[0]);
  r.hi = std::stod(parts[1]);
  r.count = std::stoi(parts[2]);
  if (parts.size() == 4) {
    if (parts[3] == "log") r.log_spaced = true;
    else if (parts[3] != "linear")
      throw std::invalid_argument("range: spacing must be log or linear");
  }
  if (!(r.lo > 0.0) || !(r.hi >= r.lo) || r.count < 2)
    throw std::invalid_argument("range: need 0 < lo <= hi and count >= 2");
  return r;
}

inline std::vector<double> range_points(const Range& r) {
  std::vector<double> pts(r.count);
  for (int i = 0; i < r.count; ++i) {
    const double f = static_cast<double>(i) / (r.count - 1);
    pts[i] = r.log_spaced ? r.lo * std::pow(r.hi / r.lo, f)
                          : r.lo + f * (r.hi - r.lo);
  }
  return pts;
}

inline PolygonClass polygon_class_from_string(const std::string& s) {
  if (s == "S" || s == "s") return PolygonClass::S;
  if (s == "G" || s == "g") return PolygonClass::G;
  if (s == "C" || s == "c") return PolygonClass::C;
  if (s == "GC" || s == "gc") return PolygonClass::GC;
  throw std::invalid_argument("unknown class: " + s);
}

inline PolygonFamily polygon_family_from_string(const std::string& s) {
  if (s == "SG" || s == "sg") return PolygonFamily::SG;
  switch (polygon_class_from_string(s)) {
    case PolygonClass::S: return PolygonFamily::S;
    case PolygonClass::G: return PolygonFamily::G;
    case PolygonClass::C: return PolygonFamily::C;
    default: return PolygonFamily::GC;
  }
}

inline std::string family_name(PolygonFamily f) {
  switch (f) {
    case PolygonFamily::S: return "S";
    case PolygonFamily::G: return "G";
    case PolygonFamily::C: return "C";
    case PolygonFamily::GC: return "GC";
    default: return "SG";
  }
}

// exact partition polynomial of one class as a JSON document
inline std::string cmd_enumerate(int n, const std::string& cls_name) {
  const PolygonClass cls = polygon_class_from_string(cls_name);
  if (n < 1 || n > kMaxPolygonHalfLength)
    throw std::out_of_range("enumerate: half-length 1.." +
                            std::to_string(kMaxPolygonHalfLength));
  BivariatePolynomial P = enumerate_polygons(n, cls);
  json doc;
  doc["half_length"] = n;
  doc["class"] = to_string(cls);
  doc["terms"] = json::array();
  for (const auto& [vh, c] : P.terms()) {
    json term;
    term["v"] = vh.first;
    term["h"] = vh.second;
    term["count"] = c.str();
    doc["terms"].push_back(term);
  }
  doc["total"] = P.total().str();
  return doc.dump(2) + "\n";
}

// numeric partition value of one family at (a, y, half-length n)
inline std::string cmd_partition(const std::string& family, int n, double a,
                                 double y, const std::string& format) {
  const PolygonFamily fam = polygon_family_from_string(family);
  if (n < 2 || n > 400) throw std::out_of_range("partition: n in 2..400");
  if (!(a > 0.0) || !(y > 0.0))
    throw std::invalid_argument("partition: fugacities must be positive");
  const SignedLog z = polygon_partition(n, fam, SignedLog::from_double(a),
                                        SignedLog::from_double(y));
  const double lv = z.is_zero() ? -std::numeric_limits<double>::infinity()
                                : z.log_abs();
  const double psi = lv / (2.0 * n);
  if (format == "csv") {
    std::ostringstream os;
    os << "class,half_length,a,y,log_value,psi\n";
    os << family_name(fam) << "," << n << "," << fmt12(a) << "," << fmt12(y)
       << "," << fmt12(lv) << "," << fmt12(psi) << "\n";
    return os.str();
  }
  json doc;
  doc["class"] = family_name(fam);
  doc["half_length"] = n;
  doc["a"] = fmt12(a);
  doc["y"] = fmt12(y);
  doc["log_value"] = fmt12(lv);
  doc["psi"] = fmt12(psi);
  return doc.dump(2) + "\n";
}

// sweep of closed-form and finite-n thermodynamics over an (a, y) grid
inline std::string cmd_phase_grid(ModelKind kind, int n, const Range& ar,
                                  const Range& yr,
                                  const std::string& format) {
  const auto as = range_points(ar);
  const auto ys = range_points(yr);
  std::ostringstream csv;
  json rows = json::array();
  if (format == "csv") csv << "a,y,psi_closed,psi_estimate,V,H,phase\n";
  for (double a : as) {
    for (double y : ys) {
      const double pc = psi_closed(kind, a, y);
      const double pe = psi_estimate(kind, a, y, n);
      const OrderParameters op = order_parameters(kind, a, y, n);
      const std::string phase = to_string(classify_phase(kind, a, y));
      if (format == "csv") {
        csv << fmt12(a) << "," << fmt12(y) << "," << fmt12(pc) << ","
            << fmt12(pe) << "," << fmt12(op.visit_density) << ","
            << fmt12(op.height_density) << "," << phase << "\n";
      } else {
        json row;
        row["a"] = fmt12(a);
        row["y"] = fmt12(y);
        row["psi_closed"] = fmt12(pc);
        row["psi_estimate"] = fmt12(pe);
        row["V"] = fmt12(op.visit_density);
        row["H"] = fmt12(op.height_density);
        row["phase"] = phase;
        rows.push_back(row);
      }
    }
  }
  return format == "csv" ? csv.str() : rows.dump(2) + "\n";
}

struct VerifyOutput {
  std::string table;
  std::string json_report;
  bool all_passed = true;
};

inline VerifyOutput cmd_verify(const std::string& suite) {
  const auto ids = suite_criteria(suite);
  const auto results = run_criteria(ids);
  VerifyOutput out;
  std::ostringstream os;
  json rows = json::array();
  for (const auto& c : results) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " | " << c.detail
       << "\n";
    json row;
    row["name"] = c.name;
    row["passed"] = c.passed;
    row["detail"] = c.detail;
    rows.push_back(row);
    out.all_passed = out.all_passed && c.passed;
  }
  os << (out.all_passed ? "suite " + suite + ": all checks passed\n"
                        : "suite " + suite + ": CHECK FAILURES\n");
  out.table = os.str();
  json doc;
  doc["suite"] = suite;
  doc["passed"] = out.all_passed;
  doc["checks"] = rows;
  out.json_report = doc.dump(2) + "\n";
  return out;
}

namespace detail_report {

struct Row {
  std::string section;
  std::string point;
  int n = 0;
  std::string quantity;
  double value = 0.0;
  double target = 0.0;
};

inline void fit_rows(std::vector<Row>& rows, int parity) {
  std::vector<int> ns;
  for (int base : {32, 48, 64, 96, 128}) ns.push_back(base + parity % 4);
  const bool even = parity % 2 == 0;
  {
    auto fit = fit_asymptotics_pinned(pg_log_ladder_exact(ns, 2, 1), 4.0);
    rows.push_back({"exponent", "a=2 y=1", ns.back(), "theta", fit.theta, 3.0});
  }
  {
    auto fit = fit_asymptotics_pinned(pg_log_ladder_exact(ns, 1, 1), 4.0);
    rows.push_back({"exponent", "a=1 y=1", ns.back(), "theta", fit.theta, 5.0});
  }
  {
    auto pts = pg_log_ladder_transfer(ns, 3.0, 2.0);
    auto fit = fit_asymptotics_pinned(pts, growth_ballistic(3.0, 2.0));
    rows.push_back(
        {"exponent", "a=3 y=2", ns.back(), "theta", fit.theta, 0.5});
    rows.push_back({"growth", "a=3 y=2", ns.back(), "mu",
                    growth_estimate(pts, 0.5), growth_ballistic(3.0, 2.0)});
  }
  if (!even) return;
  // amplitude ratios, even parities only
  for (int n : ns) {
    const double lv = log_value(PG(n, BigInt(2), BigInt(1)));
    rows.push_back({"amplitude", "a=2 y=1", n, "ratio_full",
                    amplitude_ratio(n, lv, 4.0, 3.0, amp_g2_21()), 1.0});
  }
  auto parts = pg_part_log_ladders(ns, 1);
  for (const auto& [n, lv] : parts.g2)
    rows.push_back({"amplitude", "a=1 y=1", n, "ratio_rest",
                    amplitude_ratio(n, lv, 4.0, 5.0, amp_g2_y1(1.0)), 1.0});
  if (parity % 4 == 2) {
    auto parts21 = pg_part_log_ladders(ns, 2);
    for (const auto& [n, lv] : parts21.g1)
      rows.push_back({"amplitude", "a=2 y=1", n, "ratio_anchored",
                      amplitude_ratio(n, lv, 4.0, 3.5, amp_g1_21()), 1.0});
  }
}

inline void scan_rows(std::vector<Row>& rows) {
  const double pts[3][2] = {{4, 3}, {10, 1.5}, {1, 3}};
  for (const auto& p : pts) {
    std::ostringstream tag;
    tag << "a=" << p[0] << " y=" << p[1];
    ScanProfile sp = scan_T(100, p[0], p[1]);
    const double gamma = (p[1] - 1.0) / (p[1] + 1.0);
    const double delta = p[0] > 2.0 ? (p[0] - 2.0) / (2.0 * p[0]) : 0.0;
    rows.push_back({"scan_T", tag.str(), 100, "k_frac", sp.k_frac, gamma});
    rows.push_back({"scan_T", tag.str(), 100, "i_frac", sp.i_frac, 0.0});
    rows.push_back({"scan_T", tag.str(), 100, "w_frac", sp.w_frac, delta});
    rows.push_back({"scan_T", tag.str(), 100, "flat", sp.flat ? 1.0 : 0.0,
                    0.0});
    ScanQ sq = scan_S(400, p[0], p[1]);
    rows.push_back({"scan_S", tag.str(), 100, "q_frac", sq.q_frac, 0.0});
  }
}

inline void bridge_rows(std::vector<Row>& rows) {
  for (int y : {2, 3}) {
    const double target = lambdaP(static_cast<double>(y));
    for (const auto& [n, rate] :
         bridge_log_rates({50, 100, 200}, BigRat(y))) {
      std::ostringstream tag;
      tag << "y=" << y;
      rows.push_back({"bridge", tag.str(), n, "rate", rate, target});
    }
  }
}

}  // namespace detail_report

// growth/exponent/amplitude/scan/bridge report over a fixed ladder of the
// requested residue class mod 4
inline std::string cmd_asymptotics_report(int parity,
                                          const std::string& format) {
  if (parity < 0 || parity > 3)
    throw std::invalid_argument("asymptotics-report: parity in 0..3");
  std::vector<detail_report::Row> rows;
  detail_report::fit_rows(rows, parity);
  detail_report::scan_rows(rows);
  detail_report::bridge_rows(rows);
  if (format == "csv") {
    std::ostringstream os;
    os << "section,point,n,quantity,value,target\n";
    for (const auto& r : rows)
      os << r.section << "," << r.point << "," << r.n << "," << r.quantity
         << "," << fmt12(r.value) << "," << fmt12(r.target) << "\n";
    return os.str();
  }
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["section"] = r.section;
    row["point"] = r.point;
    row["n"] = r.n;
    row["quantity"] = r.quantity;
    row["value"] = fmt12(r.value);
    row["target"] = fmt12(r.target);
    arr.push_back(row);
  }
  return arr.dump(2) + "\n";
}

// flat key=value config; '#' starts a comment; later keys win
inline std::map<std::string, std::string> parse_config(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::map<std::string, std::string> out;
  std::string line;
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos)
      line = line.substr(0, h);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && ((val.front() == '"' && val.back() == '"') ||
                            (val.front() == '\'' && val.back() == '\'')))
      val = val.substr(1, val.size() - 2);
    if (!key.empty()) out[key] = val;
  }
  return out;
}

inline void write_output(const std::string& content, const std::string& out) {
  if (out.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out);
  f << content;
}

}  // namespace cli
}  // namespace staircase
