#include "selmer/cli/render.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace selmer::cli {

using nlohmann::ordered_json;

std::string reduction_label(const DeltaContribution& c) {
  if (c.archimedean) return "archimedean";
  if (c.reduction.kind == ReductionKind::Good && c.reduction.sub) return "good_" + to_string(*c.reduction.sub);
  return to_string(c.reduction.kind);
}

namespace {

ordered_json q_json(const Int& q) {
  if (q >= 0 && q <= std::numeric_limits<u64>::max()) return q.convert_to<u64>();
  return q.str();
}

std::string interval(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

std::string behavior_cell(const DeltaContribution& c) {
  std::string s = to_string(c.behavior);
  if (c.t) s += " (t=" + std::to_string(*c.t) + ")";
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ordered_json report_to_json(const SelmerReport& r) {
  ordered_json j;
  j["curve"] = r.curve_id;
  j["p"] = r.p;
  j["m"] = r.m;
  j["hypotheses"] = {{"semistable", r.hypotheses.semistable},
                     {"good_at_p", r.hypotheses.good_at_p},
                     {"selmer_trivial_over_K", r.hypotheses.selmer_trivial_over_K}};
  ordered_json contribs = ordered_json::array();
  for (const auto& c : r.contributions) {
    ordered_json e;
    e["ell"] = c.place.ell;
    e["f_v"] = c.place.f_v;
    e["q_v"] = q_json(c.place.q_v);
    e["reduction"] = reduction_label(c);
    e["behavior"] = to_string(c.behavior);
    e["lo"] = c.lo;
    e["hi"] = c.hi;
    e["reason"] = to_string(c.reason);
    contribs.push_back(std::move(e));
  }
  j["contributions"] = std::move(contribs);
  j["total"] = {{"lo", r.total_lo}, {"hi", r.total_hi}};
  j["verdict"] = to_string(r.verdict);
  return j;
}

std::string render_report(const SelmerReport& r, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::Json:
      out << report_to_json(r).dump(2) << "\n";
      break;
    case Format::Csv:
      out << "curve,p,m,ell,f_v,q_v,reduction,behavior,lo,hi,reason\n";
      for (const auto& c : r.contributions)
        out << r.curve_id << ',' << r.p << ',' << r.m << ',' << c.place.ell << ',' << c.place.f_v << ','
            << c.place.q_v << ',' << reduction_label(c) << ',' << to_string(c.behavior) << ',' << c.lo << ','
            << c.hi << ',' << to_string(c.reason) << "\n";
      break;
    case Format::Table: {
      out << "curve " << r.curve_id << "   p = " << r.p << "   m = " << r.m;
      if (r.m != r.m_input) out << " (from " << r.m_input << ")";
      out << "\n";
      out << "semistable: " << yes_no(r.hypotheses.semistable) << "   good at p: " << yes_no(r.hypotheses.good_at_p)
          << "   Sel_p(E/K) = 0 asserted: " << yes_no(r.hypotheses.selmer_trivial_over_K) << "\n\n";
      out << std::left << std::setw(6) << "ell" << std::setw(5) << "f_v" << std::setw(12) << "q_v" << std::setw(26)
          << "reduction" << std::setw(18) << "behavior" << std::setw(8) << "delta"
          << "reason\n";
      for (const auto& c : r.contributions) {
        out << std::setw(6) << (c.archimedean ? std::string("inf") : std::to_string(c.place.ell)) << std::setw(5)
            << c.place.f_v << std::setw(12) << (c.archimedean ? std::string("-") : c.place.q_v.str())
            << std::setw(26) << reduction_label(c) << std::setw(18) << behavior_cell(c) << std::setw(8)
            << interval(c.lo, c.hi) << to_string(c.reason) << "\n";
      }
      out << "\ntotal " << interval(r.total_lo, r.total_hi) << "   verdict " << to_string(r.verdict);
      if (!r.verdict_valid()) out << " (Sel_p(E/K) = 0 not asserted; formula conditional)";
      out << "\n";
      break;
    }
  }
  return out.str();
}

std::string render_scan(const std::vector<SelmerReport>& rows, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json j;
        j["curve"] = r.curve_id;
        j["p"] = r.p;
        j["m"] = r.m;
        j["total"] = {{"lo", r.total_lo}, {"hi", r.total_hi}};
        j["verdict"] = to_string(r.verdict);
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "curve,p,m,lo,hi,verdict\n";
      for (const auto& r : rows)
        out << r.curve_id << ',' << r.p << ',' << r.m << ',' << r.total_lo << ',' << r.total_hi << ','
            << to_string(r.verdict) << "\n";
      break;
    case Format::Table:
      for (const auto& r : rows)
        out << std::left << std::setw(10) << r.m << std::setw(10) << interval(r.total_lo, r.total_hi)
            << to_string(r.verdict) << "\n";
      break;
  }
  return out.str();
}

}  // namespace selmer::cli
