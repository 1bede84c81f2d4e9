#include "chibound/pipeline.hpp"

#include <algorithm>
#include <map>

#include "chibound/minors.hpp"

namespace chibound {

nlohmann::json to_json(const PipelineResult& r) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : r.stages) stages.push_back(to_json(s));
  nlohmann::json out{{"outcome", r.certificate ? "certificate" : "inconclusive"}, {"stages", stages}};
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  return out;
}

std::uint64_t stage_seed(std::uint64_t root, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = h ^ root;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Certificate checked(const Graph& g, Certificate c) {
  const auto res = check_certificate(g, c);
  if (!res.ok) throw InternalError("pipeline produced a certificate that fails verification: " + res.detail);
  return c;
}

}  // namespace

PipelineResult main_pipeline(const Graph& g, std::size_t t, std::size_t ell, const PipelineOverrides& ov) {
  if (t < 4 || t % 2 != 0) throw InputError("t must be even and at least 4");
  if (ell < 2) throw InputError("ell must be at least 2");
  const std::size_t n_target = ov.a_double_prime_size.value_or(t / 2);
  const std::size_t s_target = ov.a_prime_size.value_or(t / 2);
  const std::size_t r_target = ov.paths_per_pair.value_or(s_target == 2 ? 2 : 1);
  if (n_target < 2 || r_target < 1 || s_target < 2) throw InputError("surrogate sizes too small");
  const std::size_t b_count = n_target * (n_target - 1) / 2 * r_target;
  const std::size_t z = n_target + b_count;
  const std::size_t w = ov.minor_size.value_or(z * z + z);
  if (w < z) throw InputError("minor size must be at least Z");

  PipelineResult out;
  auto& st = out.stages;

  const auto minor = find_clique_minor(g, w, ov.budget);
  st.push_back({"clique-minor", w, minor.found() ? w : 0,
                minor.found() ? "ok" : (minor.absent() ? "absent" : "inconclusive")});
  if (!minor.found()) return out;

  const auto full = full_vertex_minor(g, *minor.value, z, t, stage_seed(ov.seed, "full-vertex-minor"));
  if (full.kind == FullMinorResult::Kind::Cycle) {
    st.push_back({"full-vertex-minor", z, full.cycle->size(), "cycle"});
    out.certificate = checked(g, Certificate::cycle(full.cycle->vertices, t));
    return out;
  }
  st.push_back({"full-vertex-minor", z, full.full_vertices.size(),
                full.kind == FullMinorResult::Kind::Minor ? "ok" : "inconclusive"});
  if (full.kind != FullMinorResult::Kind::Minor) return out;

  std::vector<Vertex> a(full.full_vertices.begin(), full.full_vertices.begin() + static_cast<long>(n_target));
  std::vector<std::vector<Vertex>> b(full.minor.branch_sets.begin() + static_cast<long>(n_target),
                                     full.minor.branch_sets.begin() + static_cast<long>(z));
  st.push_back({"split-a-b", z, n_target + b.size(), "ok"});

  LinkedParams lp{ell, t, n_target, r_target, s_target, stage_seed(ov.seed, "interference"), ov.budget};
  auto linked = build_linked_families(g, a, b, lp);
  st.insert(st.end(), linked.stages.begin(), linked.stages.end());
  if (linked.biclique) {
    out.certificate = checked(g, Certificate::biclique(*linked.biclique, ell));
    return out;
  }
  if (linked.status != SearchStatus::Found) return out;

  // one length class per pair, then make it partially anticomplete
  std::map<std::pair<Vertex, Vertex>, PathFamily> pac;
  std::size_t smallest = SIZE_MAX;
  for (const auto& [key, fam] : linked.families) {
    std::map<std::size_t, PathFamily> by_len;
    for (const auto& p : fam.paths) by_len[p.size()].paths.push_back(p);
    const PathFamily* best = nullptr;
    for (const auto& [len, f] : by_len)
      if (!best || f.size() > best->size()) best = &f;
    auto ext = extract_partially_anticomplete(g, best ? *best : PathFamily{}, ov.budget);
    smallest = std::min(smallest, ext.size());
    pac[key] = std::move(ext);
  }
  const bool pac_ok = smallest > 0 && smallest != SIZE_MAX;
  st.push_back({"partially-anticomplete", 1, pac_ok ? smallest : 0, pac_ok ? "ok" : "inconclusive"});
  if (!pac_ok) return out;

  // families between cyclically consecutive vertices of A'
  const auto& ap = linked.a_prime;
  std::vector<PathFamily> chain;
  if (ap.size() == 2) {
    // both sides of the cycle come from the one family: split it
    const auto& only = pac.at({ap[0], ap[1]});
    PathFamily there, back;
    for (std::size_t i = 0; i < only.size(); ++i) {
      if (i % 2 == 0) there.paths.push_back(only.paths[i]);
      else back.paths.push_back(only.paths[i].reversed());
    }
    chain = {std::move(there), std::move(back)};
  } else {
    for (std::size_t i = 0; i + 1 < ap.size(); ++i) chain.push_back(pac.at({ap[i], ap[i + 1]}));
    PathFamily back;
    for (const auto& p : pac.at({ap.front(), ap.back()}).paths) back.paths.push_back(p.reversed());
    chain.push_back(std::move(back));
  }
  const auto sel = select_pairwise_anticomplete(g, chain, ell, t);
  if (sel.biclique) {
    st.push_back({"pairwise-anticomplete", ap.size(), 0, "witness"});
    out.certificate = checked(g, Certificate::biclique(*sel.biclique, ell));
    return out;
  }
  st.push_back({"pairwise-anticomplete", ap.size(), sel.paths.size(), sel.status == SearchStatus::Found ? "ok" : "inconclusive"});
  if (sel.status != SearchStatus::Found) return out;

  const auto cyc = assemble_cycle(g, ap, sel.paths);
  const bool long_enough = cyc.size() >= t;
  st.push_back({"assemble", t, cyc.size(), long_enough ? "ok" : "short"});
  if (!long_enough) return out;
  out.certificate = checked(g, Certificate::cycle(cyc.vertices, t));
  return out;
}

}  // namespace chibound
