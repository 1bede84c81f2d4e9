#include "chibound/certificate.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "chibound/search.hpp"

namespace chibound {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

constexpr std::array<std::pair<CertificateTag, std::string_view>, 7> kTags{{
    {CertificateTag::InducedCycle, "InducedCycle"},
    {CertificateTag::InducedPath, "InducedPath"},
    {CertificateTag::BicliqueWitness, "BicliqueWitness"},
    {CertificateTag::SubdividedStarWitness, "SubdividedStarWitness"},
    {CertificateTag::LowDegreeVertex, "LowDegreeVertex"},
    {CertificateTag::EliminationOrder, "EliminationOrder"},
    {CertificateTag::IndependentSetWitness, "IndependentSetWitness"},
}};

std::string list(std::span<const Vertex> vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

std::uint64_t required_bound(const Certificate& c) {
  if (!c.claimed_bound) throw InputError(std::string(to_string(c.tag)) + " certificate requires claimed_bound");
  return *c.claimed_bound;
}

std::optional<std::pair<std::size_t, std::size_t>> repeated(std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) return std::pair{i, j};
  return std::nullopt;
}

CheckResult check_sequence(const Graph& g, std::span<const Vertex> vs, bool cyclic) {
  if (auto r = repeated(vs))
    return fail("vertex " + std::to_string(vs[r->first]) + " repeated at positions " + std::to_string(r->first) +
                " and " + std::to_string(r->second));
  const std::size_t k = vs.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (cyclic && i == 0 && j == k - 1);
      const bool adj = g.adjacent(vs[i], vs[j]);
      if (consecutive && !adj)
        return fail("missing edge " + std::to_string(vs[i]) + "-" + std::to_string(vs[j]) + " at positions " +
                    std::to_string(i) + "," + std::to_string(j));
      if (!consecutive && adj)
        return fail("chord " + std::to_string(vs[i]) + "-" + std::to_string(vs[j]) + " at positions " +
                    std::to_string(i) + "," + std::to_string(j));
    }
  return {};
}

}  // namespace

std::string_view to_string(CertificateTag tag) {
  for (auto [t, name] : kTags)
    if (t == tag) return name;
  return "?";
}

CertificateTag parse_certificate_tag(std::string_view name) {
  for (auto [t, n] : kTags)
    if (n == name) return t;
  throw InputError("unknown certificate tag '" + std::string(name) + "'");
}

std::vector<Vertex> SubdividedStarWitness::flatten() const {
  std::vector<Vertex> out{center};
  for (std::size_t i = 0; i < middles.size(); ++i) {
    out.push_back(middles[i]);
    out.push_back(leaves[i]);
  }
  return out;
}

SubdividedStarWitness SubdividedStarWitness::unflatten(std::span<const Vertex> vs) {
  if (vs.size() < 3 || vs.size() % 2 == 0)
    throw InputError("subdivided star payload must have 2d+1 vertices with d >= 1, got " + std::to_string(vs.size()));
  SubdividedStarWitness w;
  w.center = vs[0];
  for (std::size_t i = 1; i < vs.size(); i += 2) {
    w.middles.push_back(vs[i]);
    w.leaves.push_back(vs[i + 1]);
  }
  return w;
}

Certificate Certificate::cycle(std::vector<Vertex> vs, std::optional<std::uint64_t> min_len) {
  Certificate c;
  c.tag = CertificateTag::InducedCycle;
  c.vertices = std::move(vs);
  c.claimed_bound = min_len;
  return c;
}

Certificate Certificate::path(std::vector<Vertex> vs, std::optional<std::uint64_t> min_len) {
  Certificate c;
  c.tag = CertificateTag::InducedPath;
  c.vertices = std::move(vs);
  c.claimed_bound = min_len;
  return c;
}

Certificate Certificate::biclique(const BicliqueWitness& w, std::optional<std::uint64_t> min_side) {
  Certificate c;
  c.tag = CertificateTag::BicliqueWitness;
  c.left = w.left;
  c.right = w.right;
  c.claimed_bound = min_side;
  return c;
}

Certificate Certificate::star(const SubdividedStarWitness& w) {
  Certificate c;
  c.tag = CertificateTag::SubdividedStarWitness;
  c.vertices = w.flatten();
  c.claimed_bound = w.d();
  return c;
}

Certificate Certificate::low_degree(Vertex v, std::uint64_t bound) {
  Certificate c;
  c.tag = CertificateTag::LowDegreeVertex;
  c.vertices = {v};
  c.claimed_bound = bound;
  return c;
}

Certificate Certificate::elimination(std::vector<Vertex> order, std::uint64_t bound) {
  Certificate c;
  c.tag = CertificateTag::EliminationOrder;
  c.vertices = std::move(order);
  c.claimed_bound = bound;
  return c;
}

Certificate Certificate::independent(std::vector<Vertex> vs, std::optional<std::uint64_t> min_size) {
  Certificate c;
  c.tag = CertificateTag::IndependentSetWitness;
  c.vertices = std::move(vs);
  c.claimed_bound = min_size;
  return c;
}

CheckResult check_certificate(const Graph& g, const Certificate& c) {
  g.check_vertices(c.vertices);
  g.check_vertices(c.left);
  g.check_vertices(c.right);

  switch (c.tag) {
    case CertificateTag::InducedCycle: {
      if (c.vertices.size() < 3) throw InputError("InducedCycle needs at least 3 vertices");
      if (c.claimed_bound && c.vertices.size() < *c.claimed_bound)
        return fail("cycle has " + std::to_string(c.vertices.size()) + " vertices, claimed at least " +
                    std::to_string(*c.claimed_bound));
      return check_sequence(g, c.vertices, true);
    }
    case CertificateTag::InducedPath: {
      if (c.vertices.empty()) throw InputError("InducedPath needs at least 1 vertex");
      if (c.claimed_bound && c.vertices.size() < *c.claimed_bound)
        return fail("path has " + std::to_string(c.vertices.size()) + " vertices, claimed at least " +
                    std::to_string(*c.claimed_bound));
      return check_sequence(g, c.vertices, false);
    }
    case CertificateTag::BicliqueWitness: {
      if (c.left.empty() || c.right.empty()) throw InputError("BicliqueWitness needs non-empty left and right");
      if (c.claimed_bound && std::min(c.left.size(), c.right.size()) < *c.claimed_bound)
        return fail("biclique side smaller than claimed " + std::to_string(*c.claimed_bound));
      std::vector<Vertex> both = c.left;
      both.insert(both.end(), c.right.begin(), c.right.end());
      if (auto r = repeated(both)) return fail("vertex " + std::to_string(both[r->first]) + " used twice");
      for (Vertex x : c.left)
        for (Vertex y : c.right)
          if (!g.adjacent(x, y)) return fail("missing cross edge " + std::to_string(x) + "-" + std::to_string(y));
      return {};
    }
    case CertificateTag::SubdividedStarWitness: {
      const auto w = SubdividedStarWitness::unflatten(c.vertices);
      if (c.claimed_bound && w.d() != *c.claimed_bound)
        return fail("star has " + std::to_string(w.d()) + " legs, claimed " + std::to_string(*c.claimed_bound));
      if (auto r = repeated(c.vertices)) return fail("vertex " + std::to_string(c.vertices[r->first]) + " used twice");
      // vertex i > 0 at odd position is a middle, its partner follows it
      const auto& vs = c.vertices;
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          const bool want = (i == 0 && j % 2 == 1) || (i % 2 == 1 && j == i + 1);
          if (g.adjacent(vs[i], vs[j]) != want)
            return fail(std::string(want ? "missing edge " : "extra edge ") + std::to_string(vs[i]) + "-" +
                        std::to_string(vs[j]) + " at positions " + std::to_string(i) + "," + std::to_string(j));
        }
      return {};
    }
    case CertificateTag::LowDegreeVertex: {
      if (c.vertices.size() != 1) throw InputError("LowDegreeVertex payload must be exactly one vertex");
      const auto bound = required_bound(c);
      const auto deg = g.degree(c.vertices[0]);
      if (deg > bound)
        return fail("vertex " + std::to_string(c.vertices[0]) + " has degree " + std::to_string(deg) +
                    " above claimed " + std::to_string(bound));
      return {};
    }
    case CertificateTag::EliminationOrder: {
      const auto bound = required_bound(c);
      if (c.vertices.size() != g.order())
        return fail("order lists " + std::to_string(c.vertices.size()) + " vertices, graph has " +
                    std::to_string(g.order()));
      std::vector<std::size_t> pos(g.order(), g.order());
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (pos[c.vertices[i]] != g.order()) return fail("vertex " + std::to_string(c.vertices[i]) + " listed twice");
        pos[c.vertices[i]] = i;
      }
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const Vertex v = c.vertices[i];
        std::size_t later = 0;
        for (Vertex w : g.neighbors(v)) later += pos[w] > i ? 1 : 0;
        if (later > bound)
          return fail("position " + std::to_string(i) + " (vertex " + std::to_string(v) + ") has " +
                      std::to_string(later) + " remaining neighbors, claimed at most " + std::to_string(bound));
      }
      return {};
    }
    case CertificateTag::IndependentSetWitness: {
      if (c.claimed_bound && c.vertices.size() < *c.claimed_bound)
        return fail("set has " + std::to_string(c.vertices.size()) + " vertices, claimed at least " +
                    std::to_string(*c.claimed_bound));
      if (auto r = repeated(c.vertices)) return fail("vertex " + std::to_string(c.vertices[r->first]) + " used twice");
      for (std::size_t i = 0; i < c.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
          if (g.adjacent(c.vertices[i], c.vertices[j]))
            return fail("edge " + std::to_string(c.vertices[i]) + "-" + std::to_string(c.vertices[j]) + " inside set " +
                        list(c.vertices));
      return {};
    }
  }
  throw InputError("unhandled certificate tag");
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["tag"] = to_string(c.tag);
  j["vertices"] = c.vertices;
  j["left"] = c.left;
  j["right"] = c.right;
  j["claimed_bound"] = c.claimed_bound ? nlohmann::json(*c.claimed_bound) : nlohmann::json(nullptr);
  if (c.recursion_trace) j["recursion_trace"] = *c.recursion_trace;
  return j;
}

namespace {

std::vector<Vertex> vertex_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& a = j.at(key);
  if (!a.is_array()) throw InputError(std::string("certificate field '") + key + "' must be an array");
  std::vector<Vertex> out;
  for (const auto& x : a) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
      throw InputError(std::string("certificate field '") + key + "' must hold non-negative integers");
    const auto v = x.get<unsigned long long>();
    if (v > 0xffffffffULL) throw InputError("vertex id too large");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("tag") || !j.at("tag").is_string())
    throw InputError("certificate JSON must be an object with a string 'tag'");
  Certificate c;
  c.tag = parse_certificate_tag(j.at("tag").get<std::string>());
  c.vertices = vertex_list(j, "vertices");
  c.left = vertex_list(j, "left");
  c.right = vertex_list(j, "right");
  if (j.contains("claimed_bound") && !j.at("claimed_bound").is_null()) {
    const auto& b = j.at("claimed_bound");
    if (!b.is_number_integer() || b.get<long long>() < 0)
      throw InputError("claimed_bound must be a non-negative integer");
    c.claimed_bound = b.get<std::uint64_t>();
  }
  if (j.contains("recursion_trace")) c.recursion_trace = j.at("recursion_trace");
  return c;
}

}  // namespace chibound
