// compaug: compatible connectivity augmentation from the command line.
// Exit codes: 0 success, 2 invalid input, 3 internal failure.

#include "compaug/adversarial.hpp"
#include "compaug/augment.hpp"
#include "compaug/embedding.hpp"
#include "compaug/instance_io.hpp"
#include "compaug/linf_path.hpp"
#include "compaug/random_instance.hpp"
#include "compaug/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

namespace fs = std::filesystem;
using namespace compaug;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

// Empty when the instance is valid, else the first problem found.
std::string check_instance(const Instance& in) {
  for (std::size_t i = 0; i < in.drawings.size(); ++i) {
    auto report = validate_planar(in.drawings[i]);
    if (!report.ok()) return in.drawings[i].name + ": " + report.describe();
  }
  for (std::size_t i = 1; i < in.drawings.size(); ++i) {
    if (auto why = isomorphism_mismatch(in.drawings[0], in.drawings[i])) {
      return in.drawings[0].name + " vs " + in.drawings[i].name + ": " + *why;
    }
  }
  return {};
}

void write_svgs(const Instance& in, const CompatibleResult& res, const std::string& dir, const std::string& stem,
                bool fattening) {
  fs::create_directories(dir);
  const LabelledGraph& h = *res.graph;
  SvgLayers layers;
  for (const auto& [a, b] : res.added_edges) layers.highlighted.emplace_back(h.index_of(a), h.index_of(b));
  for (std::size_t i = 0; i < res.drawings.size(); ++i) {
    layers.underlay = fattening ? fattenings(in.drawings[i]) : std::vector<std::vector<Point2>>{};
    std::ofstream f(fs::path(dir) / (stem + "_drawing" + std::to_string(i) + ".svg"));
    f << render_svg(res.drawings[i], layers);
  }
}

struct GridSpec {
  std::vector<int> n, r, k;
  int r_divisor = 0;  // r = n / r_divisor when given as "r=n/D"
};

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad number " + item);
  }
  return out;
}

// "n=128,256;r=8,16;k=2,3". r may also be "n/16".
GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("grid entries look like n=1,2,3");
    const std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "n") {
      g.n = int_list(value);
    } else if (key == "r" && value.rfind("n/", 0) == 0) {
      g.r_divisor = std::stoi(value.substr(2));
      if (g.r_divisor <= 0) throw std::invalid_argument("r=n/D needs D > 0");
    } else if (key == "r") {
      g.r = int_list(value);
    } else if (key == "k") {
      g.k = int_list(value);
    } else {
      throw std::invalid_argument("unknown grid key " + key);
    }
  }
  return g;
}

struct BenchRow {
  int n, r, k;
  std::size_t vertices, edges;
  double ratio, seconds;
  std::string family;
};

BenchRow run_one(const Instance& in, const std::string& family) {
  AugmentOptions opt;
  opt.validate_result = false;
  const auto t0 = std::chrono::steady_clock::now();
  CompatibleResult res = compatible_augment(in, opt);
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  GapReport gap = measure_lower_bound_gap(in, res);
  return {gap.n, gap.r, gap.k, gap.added_vertices, gap.added_edges, gap.ratio, sec, family};
}

void print_scaling(const std::vector<BenchRow>& rows) {
  // Time exponent in n for every (family, k, r) with two or more sizes.
  std::map<std::tuple<std::string, int, int>, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& row : rows) {
    auto& [xs, ys] = groups[{row.family, row.k, row.r}];
    xs.push_back(row.n);
    ys.push_back(std::max(row.seconds, 1e-6));
  }
  for (const auto& [key, data] : groups) {
    std::vector<double> xs = data.first;
    std::sort(xs.begin(), xs.end());
    if (std::unique(xs.begin(), xs.end()) - xs.begin() < 2) continue;
    auto fit = fit_loglog(data.first, data.second);
    std::cerr << "time exponent " << std::get<0>(key) << " k=" << std::get<1>(key) << " r=" << std::get<2>(key)
              << ": " << fit.slope << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatible connectivity augmentation of isomorphic planar drawings"};
  app.require_subcommand(1);

  std::string input, out, svg_dir, grid_text, family = "both", dir;
  std::uint64_t seed = 0;
  int n = 32, r = 4, k = 2;
  bool debug_fattening = false, check_invariants = false, framed = false, raw = false;

  auto* augment = app.add_subcommand("augment", "Augment an instance and write the result JSON");
  augment->add_option("input", input, "Instance JSON")->required()->check(CLI::ExistingFile);
  augment->add_option("--out", out, "Result path (default stdout)");
  augment->add_option("--svg", svg_dir, "Write one SVG per drawing into this directory");
  augment->add_flag("--debug-fattening", debug_fattening, "Draw the component fattenings in the SVGs");
  augment->add_flag("--check-invariants", check_invariants, "Run the per-hop clearance checks");

  auto* validate = app.add_subcommand("validate", "Check planarity and isomorphism of an instance");
  validate->add_option("input", input, "Instance JSON")->required()->check(CLI::ExistingFile);

  auto* tsp = app.add_subcommand("tsp", "Short max-norm path through integer points");
  tsp->add_option("input", input, "JSON array of points")->required()->check(CLI::ExistingFile);
  tsp->add_flag("--raw", raw, "Skip the 2-opt improvement");

  auto* gen_lower = app.add_subcommand("gen-lower", "Nested-ring instance");
  auto* gen_random = app.add_subcommand("gen-random", "Random instance");
  for (auto* gen : {gen_lower, gen_random}) {
    gen->add_option("--n", n, "Vertices")->capture_default_str();
    gen->add_option("--r", r, "Components")->capture_default_str();
    gen->add_option("--k", k, "Drawings")->capture_default_str();
    gen->add_option("--seed", seed, "Random seed")->capture_default_str();
    gen->add_option("--out", out, "Instance path (default stdout)");
  }
  gen_random->add_flag("--framed", framed, "Put part of the components inside a cycle");

  auto* bench = app.add_subcommand("bench", "Sweep sizes and print CSV");
  bench->add_option("--grid", grid_text, "For example \"n=128,256;r=8;k=2,3\" or \"n=256;r=n/16;k=2\"");
  bench->add_option("--dir", dir, "Also run every *.json instance in this directory")->check(CLI::ExistingDirectory);
  bench->add_option("--family", family, "random, nested or both")
      ->check(CLI::IsMember({"random", "nested", "both"}))
      ->capture_default_str();
  bench->add_option("--seed", seed, "Random seed")->capture_default_str();
  bench->add_option("--out", out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*augment) {
      Instance in = read_instance_file(input);
      AugmentOptions opt;
      opt.check_invariants = check_invariants;
      CompatibleResult res = compatible_augment(in, opt);
      write_output(out, emit_result(in, res));
      if (!svg_dir.empty()) write_svgs(in, res, svg_dir, fs::path(input).stem().string(), debug_fattening);
      std::cerr << "added " << res.added_vertex_count() << " vertices, " << res.added_edge_count()
                << " edges, envelope constant " << res.envelope_constant() << "\n";
      return kOk;
    }
    if (*validate) {
      Instance in = read_instance_file(input);
      if (auto why = check_instance(in); !why.empty()) {
        std::cout << "invalid: " << why << "\n";
        return kInvalid;
      }
      std::cout << "ok: " << in.graph->vertex_count() << " vertices, " << in.graph->edge_count() << " edges, "
                << in.graph->components().size() << " components, " << in.drawings.size() << " drawings\n";
      return kOk;
    }
    if (*tsp) {
      auto points = parse_points(read_file(input));
      SpanningPath path = spanning_path(points);
      if (!raw) path = improve_path(path, points);
      std::cout << "order";
      for (int p : path.order) std::cout << ' ' << p;
      std::cout << "\nlength " << to_string(path.total()) << "\n";
      return kOk;
    }
    if (*gen_lower) {
      NestedInstance nested = generate_nested_instance(n, r, k, seed);
      if (nested.n != n || nested.r != r) {
        std::cerr << "rounded to n=" << nested.n << " r=" << nested.r << "\n";
      }
      write_output(out, emit_instance(nested.instance));
      return kOk;
    }
    if (*gen_random) {
      RandomInstanceOptions o;
      o.n = n;
      o.r = r;
      o.k = k;
      o.seed = seed;
      o.framed = framed;
      write_output(out, emit_instance(random_instance(o)));
      return kOk;
    }
    if (*bench) {
      std::vector<BenchRow> rows;
      if (!grid_text.empty()) {
        GridSpec grid = parse_grid(grid_text);
        for (int gn : grid.n) {
          std::vector<int> rs = grid.r_divisor ? std::vector<int>{gn / grid.r_divisor} : grid.r;
          for (int gr : rs) {
            for (int gk : grid.k) {
              if (family != "nested") {
                RandomInstanceOptions o;
                o.n = gn;
                o.r = gr;
                o.k = gk;
                o.seed = seed;
                rows.push_back(run_one(random_instance(o), "random"));
              }
              if (family != "random") {
                rows.push_back(run_one(generate_nested_instance(gn, gr, gk, seed).instance, "nested"));
              }
            }
          }
        }
      }
      if (!dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(dir)) {
          if (e.path().extension() == ".json") files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) rows.push_back(run_one(read_instance_file(f.string()), f.stem().string()));
      }
      std::ostringstream csv;
      csv << "n,r,k,added_vertices,added_edges,envelope_ratio,seconds,family\n";
      for (const auto& row : rows) {
        csv << row.n << ',' << row.r << ',' << row.k << ',' << row.vertices << ',' << row.edges << ',' << row.ratio
            << ',' << row.seconds << ',' << row.family << "\n";
      }
      write_output(out, csv.str());
      print_scaling(rows);
      return kOk;
    }
  } catch (const FormatError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const AugmentError& e) {
    std::cerr << (e.kind == AugmentError::Kind::invalid_input ? "invalid input: " : "internal error: ") << e.what()
              << "\n";
    return e.kind == AugmentError::Kind::invalid_input ? kInvalid : kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
