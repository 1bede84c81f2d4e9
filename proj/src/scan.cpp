#include "chibound/scan.hpp"

#include <cmath>
#include <sstream>

#include <omp.h>

#include "chibound/colnum.hpp"
#include "chibound/detect.hpp"
#include "chibound/graph_io.hpp"

namespace chibound {

ExperimentRecord compute_record(const Graph& g, std::size_t id, SearchBudget budget) {
  ExperimentRecord r;
  r.id = id;
  r.n = g.order();
  r.m = g.size();
  r.graph6 = to_graph6(g);
  auto lip = longest_induced_path(g, budget);
  if (lip.inconclusive()) r.exhausted.push_back("longest_induced_path");
  else r.longest_induced_path = lip.value ? lip.value->size() : 0;
  auto lic = longest_induced_cycle(g, budget);
  if (lic.inconclusive()) r.exhausted.push_back("longest_induced_cycle");
  else r.longest_induced_cycle = lic.found() ? lic.value->size() : 0;
  auto bb = max_balanced_biclique(g, budget);
  if (bb.inconclusive()) r.exhausted.push_back("max_biclique");
  else r.max_biclique = bb.value.value_or(0);
  r.degeneracy = degeneracy(g).degeneracy;
  auto chi = chromatic_number_exact(g, budget);
  if (chi.exact()) r.chi = chi.lower;
  else r.exhausted.push_back("chi");
  auto om = max_clique(g, budget);
  if (om.found()) r.omega = om.value->size();
  else r.exhausted.push_back("omega");
  if (g.order() <= kWidthCap) {
    r.tw = treewidth_exact(g);
    r.td = treedepth_exact(g).value;
  }
  return r;
}

std::vector<std::string> record_contradictions(const ExperimentRecord& r) {
  std::vector<std::string> out;
  if (r.tw && r.degeneracy > *r.tw + 1) out.push_back("degeneracy <= tw + 1");
  if (r.chi && *r.chi > r.degeneracy + 1) out.push_back("chi <= degeneracy + 1");
  return out;
}

namespace {

ScanSummary summarize(const std::vector<ExperimentRecord>& recs, const ScanOptions& opt) {
  ScanSummary s;
  s.total = recs.size();
  for (std::size_t ell : opt.ells) s.buckets.push_back({ell, 0, {}, {}, {}});
  auto bump = [](std::optional<std::size_t>& slot, std::optional<std::size_t> v) {
    if (v) slot = slot ? std::max(*slot, *v) : *v;
  };
  for (const auto& r : recs) {
    s.contradictions += record_contradictions(r).empty() ? 0 : 1;
    const auto& hole = opt.path_mode ? r.longest_induced_path : r.longest_induced_cycle;
    if (!hole || !r.max_biclique) {
      ++s.excluded;
      continue;
    }
    if (*hole >= opt.t) continue;
    for (auto& b : s.buckets) {
      if (*r.max_biclique >= b.ell) continue;
      ++b.count;
      bump(b.max_degeneracy, r.degeneracy);
      bump(b.max_tw, r.tw);
      bump(b.max_td, r.td);
    }
  }
  // least squares of log max-degeneracy against log l
  std::vector<std::pair<double, double>> pts;
  for (const auto& b : s.buckets)
    if (b.count > 0 && b.max_degeneracy && *b.max_degeneracy > 0)
      pts.emplace_back(std::log(static_cast<double>(b.ell)), std::log(static_cast<double>(*b.max_degeneracy)));
  s.slope_points = pts.size();
  if (pts.size() >= 3) {
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    if (sxx > 0) s.slope = sxy / sxx;
  }
  return s;
}

}  // namespace

ScanResult scan_bounds(const std::vector<Graph>& corpus, const ScanOptions& opt) {
  ScanResult out;
  out.records.resize(corpus.size());
  const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i)
    out.records[static_cast<std::size_t>(i)] =
        compute_record(corpus[static_cast<std::size_t>(i)], static_cast<std::size_t>(i), opt.budget);
  out.summary = summarize(out.records, opt);
  return out;
}

ScanResult scan_bounds_serial(const std::vector<Graph>& corpus, const ScanOptions& opt) {
  ScanResult out;
  for (std::size_t i = 0; i < corpus.size(); ++i) out.records.push_back(compute_record(corpus[i], i, opt.budget));
  out.summary = summarize(out.records, opt);
  return out;
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream os;
  os << kScanSchemaTag << '\n'
     << "id,n,m,graph6,longest_induced_path,longest_induced_cycle,max_biclique,degeneracy,chi,omega,tw,td,exhausted\n";
  auto field = [&](const std::optional<std::size_t>& v) {
    os << ',';
    if (v) os << *v;
  };
  for (const auto& r : records) {
    // graph6 may contain commas or quotes
    std::string g6;
    for (char c : r.graph6) g6 += c == '"' ? std::string("\"\"") : std::string(1, c);
    os << r.id << ',' << r.n << ',' << r.m << ",\"" << g6 << '"';
    field(r.longest_induced_path);
    field(r.longest_induced_cycle);
    field(r.max_biclique);
    os << ',' << r.degeneracy;
    field(r.chi);
    field(r.omega);
    field(r.tw);
    field(r.td);
    os << ',';
    for (std::size_t i = 0; i < r.exhausted.size(); ++i) os << (i ? ";" : "") << r.exhausted[i];
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ScanSummary& s, const ScanOptions& opt) {
  auto opt_json = [](const std::optional<std::size_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& b : s.buckets)
    buckets.push_back({{"ell", b.ell},
                       {"count", b.count},
                       {"max_degeneracy", opt_json(b.max_degeneracy)},
                       {"max_tw", opt_json(b.max_tw)},
                       {"max_td", opt_json(b.max_td)}});
  return {{"t", opt.t},
          {"filter", opt.path_mode ? "P_t-free" : "C>=t-free"},
          {"total", s.total},
          {"excluded", s.excluded},
          {"contradictions", s.contradictions},
          {"buckets", buckets},
          {"slope", s.slope ? nlohmann::json(*s.slope) : nlohmann::json(nullptr)},
          {"slope_points", s.slope_points}};
}

}  // namespace chibound
