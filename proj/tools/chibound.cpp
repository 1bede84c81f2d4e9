#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "chibound/certificate.hpp"
#include "chibound/colnum.hpp"
#include "chibound/constants.hpp"
#include "chibound/detect.hpp"
#include "chibound/generators.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/pipeline.hpp"
#include "chibound/scan.hpp"

using namespace chibound;

namespace {

enum Exit { kOk = 0, kWitness = 1, kInconclusive = 2, kInputError = 3 };

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  int threads = 0;
  std::string format = "graph6";
};

std::uint64_t env_seed() {
  const char* s = std::getenv("CHIBOUND_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError("CHIBOUND_SEED is not an unsigned integer");
  }
}

std::vector<Graph> load(const std::string& path, const Globals& g) {
  const auto fmt = parse_format(g.format);
  if (path == "-") return read_graphs(std::cin, fmt);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graphs(in, fmt);
}

Graph load_one(const std::string& path, const Globals& g) {
  auto gs = load(path, g);
  if (gs.size() != 1) throw InputError("expected exactly one graph in " + path + ", found " + std::to_string(gs.size()));
  return std::move(gs.front());
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

template <class T>
int status_exit(const SearchResult<T>& r) {
  return r.found() ? kWitness : r.absent() ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced-cycle and bounded-degeneracy toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  glob.seed = 0;
  bool seed_given = false;
  app.add_option("--seed", glob.seed, "root seed (default: CHIBOUND_SEED or 0)")->each([&](const std::string&) {
    seed_given = true;
  });
  app.add_option("--budget", glob.budget, "node budget for exact searches, 0 = unlimited");
  app.add_option("--threads", glob.threads, "OpenMP threads, 0 = default");
  app.add_option("--format", glob.format, "graph format")->check(CLI::IsMember({"graph6", "dimacs"}));

  // gen
  auto* gen = app.add_subcommand("gen", "emit generated graphs");
  std::string family = "gnp";
  GenParams gp;
  gen->add_option("--family", family)->required();
  gen->add_option("--n", gp.n);
  gen->add_option("--p", gp.p);
  gen->add_option("--k", gp.k);
  gen->add_option("--count", gp.count);

  // detect
  auto* det = app.add_subcommand("detect", "run one detector and print its certificate");
  std::string det_graph;
  std::vector<std::size_t> biclique;
  std::size_t path_t = 0, cycle_t = 0, star_d = 0;
  bool mis = false, clique = false, degen = false, chrom = false;
  det->add_option("graph", det_graph, "graph file or -")->required();
  auto* det_group = det->add_option_group("detector");
  det_group->add_option("--biclique", biclique, "K_{a,b} subgraph")->expected(2)->allow_extra_args(false);
  det_group->add_option("--path", path_t, "induced path on t vertices");
  det_group->add_option("--cycle", cycle_t, "induced cycle on at least t vertices");
  det_group->add_option("--star", star_d, "induced 1-subdivided star S'_d");
  det_group->add_flag("--mis", mis, "maximum independent set");
  det_group->add_flag("--clique", clique, "maximum clique");
  det_group->add_flag("--degeneracy", degen, "degeneracy with elimination order");
  det_group->add_flag("--chromatic", chrom, "chromatic number");
  det_group->require_option(1);

  // verify
  auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
  std::string ver_graph, ver_cert;
  ver->add_option("graph", ver_graph)->required();
  ver->add_option("certificate", ver_cert, "certificate JSON file")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "bound scan over a corpus, CSV to stdout");
  std::string scan_family, scan_input, scan_summary;
  std::size_t max_n = 0;
  GenParams sp;
  ScanOptions so;
  scan->add_option("--family", scan_family);
  scan->add_option("--input", scan_input, "graph file instead of a family");
  scan->add_option("--max-n", max_n, "all-small: every order from 1 to max-n");
  scan->add_option("--n", sp.n);
  scan->add_option("--p", sp.p);
  scan->add_option("--k", sp.k);
  scan->add_option("--count", sp.count);
  scan->add_option("--t", so.t);
  scan->add_option("--ells", so.ells)->delimiter(',');
  scan->add_flag("--path-mode", so.path_mode, "filter P_t-free instead of C>=t-free");
  scan->add_option("--summary", scan_summary, "write the summary JSON here");

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "best-effort long induced cycle pipeline");
  std::string pipe_graph;
  std::size_t pt = 6, pell = 2;
  PipelineOverrides ov;
  pipe->add_option("graph", pipe_graph)->required();
  pipe->add_option("--t", pt);
  pipe->add_option("--ell", pell);
  pipe->add_option("--minor-size", ov.minor_size);
  pipe->add_option("--paths-per-pair", ov.paths_per_pair);
  pipe->add_option("--a-prime-size", ov.a_prime_size);
  pipe->add_option("--a-double-prime-size", ov.a_double_prime_size);

  // colnum
  auto* col = app.add_subcommand("colnum", "coloring-number identity report");
  std::string col_graph;
  std::size_t col_t = 0;
  col->add_option("graph", col_graph)->required();
  col->add_option("--t", col_t, "also check the P_t-free bound");

  // constants
  auto* con = app.add_subcommand("constants", "print the size constants in log form");
  ConstantsInput ci;
  std::string eps = "1";
  con->add_option("--t", ci.t);
  con->add_option("--ell", ci.ell);
  con->add_option("--epsilon", eps);
  con->add_option("--c", ci.c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (!seed_given) glob.seed = env_seed();
    if (glob.threads > 0) omp_set_num_threads(glob.threads);
    const SearchBudget budget{glob.budget};
    const auto fmt = parse_format(glob.format);

    if (*gen) {
      for (const auto& g : generate(family, gp, glob.seed)) {
        std::cout << write_graph(g, fmt);
      }
      return kOk;
    }

    if (*det) {
      const Graph g = load_one(det_graph, glob);
      if (!biclique.empty()) {
        auto r = find_biclique_subgraph(g, biclique[0], biclique[1], budget);
        if (r.found()) print(to_json(Certificate::biclique(*r.value, std::min(biclique[0], biclique[1]))));
        else print({{"status", to_string(r.status)}});
        return status_exit(r);
      }
      if (path_t) {
        auto r = has_induced_path(g, path_t, budget);
        if (r.found()) print(to_json(Certificate::path(r.value->vertices, path_t)));
        else print({{"status", to_string(r.status)}});
        return status_exit(r);
      }
      if (cycle_t) {
        auto r = find_long_induced_cycle(g, cycle_t, budget);
        if (r.found()) print(to_json(Certificate::cycle(r.value->vertices, cycle_t)));
        else print({{"status", to_string(r.status)}});
        return status_exit(r);
      }
      if (star_d) {
        auto r = find_induced_subdivided_star(g, star_d, budget);
        if (r.found()) print(to_json(Certificate::star(*r.value)));
        else print({{"status", to_string(r.status)}});
        return status_exit(r);
      }
      if (mis) {
        auto r = max_independent_set(g, budget);
        print(to_json(Certificate::independent(*r.value, r.value->size())));
        return r.inconclusive() ? kInconclusive : kOk;
      }
      if (clique) {
        auto r = max_clique(g, budget);
        print({{"status", to_string(r.status)}, {"clique", *r.value}, {"size", r.value->size()}});
        return r.inconclusive() ? kInconclusive : kOk;
      }
      if (degen) {
        auto r = degeneracy(g);
        print(to_json(Certificate::elimination(r.order, r.degeneracy)));
        return kOk;
      }
      auto r = chromatic_number_exact(g, budget);
      print({{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact()}, {"coloring", r.coloring}});
      return r.exact() ? kOk : kInconclusive;
    }

    if (*ver) {
      const Graph g = load_one(ver_graph, glob);
      std::ifstream in(ver_cert);
      if (!in) throw InputError("cannot open " + ver_cert);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("certificate is not valid JSON: ") + e.what());
      }
      const auto res = check_certificate(g, certificate_from_json(j));
      if (!res.ok) {
        std::cerr << "certificate rejected: " << res.detail << '\n';
        return kInputError;
      }
      std::cout << "ok\n";
      return kOk;
    }

    if (*scan) {
      std::vector<Graph> corpus;
      if (!scan_input.empty()) {
        corpus = load(scan_input, glob);
      } else if (scan_family == "all-small" && max_n > 0) {
        corpus = all_small_upto(max_n);
      } else if (!scan_family.empty()) {
        corpus = generate(scan_family, sp, glob.seed);
      } else {
        throw InputError("scan needs --family or --input");
      }
      so.budget = budget;
      so.threads = glob.threads;
      const auto res = scan_bounds(corpus, so);
      std::cout << to_csv(res.records);
      if (!scan_summary.empty()) {
        std::ofstream out(scan_summary);
        if (!out) throw InputError("cannot write " + scan_summary);
        out << to_json(res.summary, so).dump(2) << '\n';
      }
      return kOk;
    }

    if (*pipe) {
      const Graph g = load_one(pipe_graph, glob);
      ov.seed = glob.seed;
      ov.budget = budget;
      const auto r = main_pipeline(g, pt, pell, ov);
      print(to_json(r));
      return r.certificate ? kOk : kInconclusive;
    }

    if (*col) {
      const Graph g = load_one(col_graph, glob);
      const auto rep = verify_identities(g, col_t);
      print(to_json(rep));
      return rep.all_hold() ? kOk : kWitness;
    }

    if (*con) {
      ci.epsilon = parse_rational(eps);
      print(to_json(bound_constants(ci)));
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return kOk;
}
