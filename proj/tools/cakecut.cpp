// cakecut: command-line front end for the cake-division engine.
//
// Cake arguments are document paths or preset names (square, triangle,
// lshape, star1..star8). Exit codes: 0 success, 2 validation or check
// failure, 3 no convergence.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cakecut/api.hpp"
#include "cakecut/cake_io.hpp"
#include "cakecut/depth.hpp"
#include "cakecut/extremal.hpp"
#include "cakecut/game.hpp"
#include "cakecut/report_json.hpp"
#include "cakecut/svg.hpp"

namespace {

using namespace cakecut;

constexpr int kExitFailure = 2;
constexpr int kExitNoConvergence = 3;

NamedCake load(const std::string& ref) {
  if (!std::filesystem::exists(ref) && is_preset_name(ref)) return NamedCake{ref, preset_cake(ref)};
  NamedDocument doc = load_cake_file(ref);
  std::string id = doc.name.empty() ? std::filesystem::path(ref).stem().string() : doc.name;
  return NamedCake{std::move(id), std::move(doc.cake)};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw Error(ErrorCode::InvalidArgument, "not a number: " + item);
  }
  return out;
}

Vector point_arg(const std::vector<double>& coords, int dim) {
  if (static_cast<int>(coords.size()) != dim) {
    throw Error(ErrorCode::MixedDimensions,
                "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(coords.size()));
  }
  return Vector(coords);
}

PavelStrategy parse_pavel(const std::string& text, int dim) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "centroid") return PavelStrategy::centroid();
  if (kind == "centerpoint") return PavelStrategy::centerpoint(arg.empty() ? 1e-3 : std::stod(arg));
  if (kind == "fixed") return PavelStrategy::fixed(point_arg(parse_list(arg), dim));
  throw Error(ErrorCode::InvalidArgument, "unknown Pavel strategy: " + text);
}

HavelStrategy parse_havel(const std::string& text, int dim, std::uint64_t seed) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "exact") return HavelStrategy::exact_min();
  if (kind == "sampled") return HavelStrategy::sampled_min(arg.empty() ? 4096 : std::stoul(arg), seed);
  if (kind == "manual") return HavelStrategy::manual(point_arg(parse_list(arg), dim));
  throw Error(ErrorCode::InvalidArgument, "unknown Havel strategy: " + text);
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

int print_theorem_table(int n, const std::vector<TheoremCheck>& checks) {
  bool all = true;
  std::cout << "Star body n=" << n << ", bound 1/" << n + 1 << " = " << std::setprecision(12) << 1.0 / (n + 1) << "\n";
  std::cout << std::left << std::setw(32) << "check" << std::setw(22) << "value" << std::setw(40) << "expected"
            << "result\n";
  for (const TheoremCheck& c : checks) {
    std::ostringstream value;
    value << std::setprecision(15) << c.value;
    std::cout << std::setw(32) << c.name << std::setw(22) << value.str() << std::setw(40) << c.expected
              << (c.pass ? "PASS" : "FAIL") << '\n';
    all &= c.pass;
  }
  std::cout << (all ? "ALL PASS" : "FAILED") << '\n';
  return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact halfspace-depth engine for the point-and-cut cake game"};
  app.require_subcommand(1);

  std::string cake_ref;
  std::vector<double> coords;

  auto* validate = app.add_subcommand("validate", "Validate a cake document");
  validate->add_option("cake", cake_ref, "Cake file or preset")->required();

  auto* info = app.add_subcommand("info", "Print measure, bounding box and validation details");
  info->add_option("cake", cake_ref, "Cake file or preset")->required();

  auto* depth = app.add_subcommand("depth", "Halfspace depth of a point");
  depth->add_option("cake", cake_ref, "Cake file or preset")->required();
  depth->add_option("x", coords, "Point coordinates")->required();

  std::string mode = "min";
  auto* bestcut = app.add_subcommand("bestcut", "Cut through a point minimizing or maximizing the piece");
  bestcut->add_option("cake", cake_ref, "Cake file or preset")->required();
  bestcut->add_option("x", coords, "Point coordinates")->required();
  bestcut->add_option("--mode", mode, "min or max")->check(CLI::IsMember({"min", "max"}));

  double tol = 1e-3;
  auto* centerpoint = app.add_subcommand("centerpoint", "Maximin (deepest) point with a certified bracket");
  centerpoint->add_option("cake", cake_ref, "Cake file or preset")->required();
  centerpoint->add_option("--tol", tol, "Bracket tolerance (>= 1e-4)");

  int star_n = 2;
  std::string output;
  auto* star = app.add_subcommand("star", "Export the extremal star body as a cake document");
  star->add_option("n", star_n, "Dimension (1..8)")->required();
  star->add_option("-o,--output", output, "Output file (default stdout)");

  std::size_t samples = 4096;
  std::size_t sphere_samples = 4096;
  std::uint64_t seed = 0;
  auto* theorem = app.add_subcommand("verify-theorem", "Check the star body against the 1/(n+1) bound");
  theorem->add_option("n", star_n, "Dimension (1..8)")->required();
  theorem->add_option("--samples", samples, "Random directions drawn from the simplex");
  theorem->add_option("--sphere-samples", sphere_samples, "Sphere lattice size");
  theorem->add_option("--seed", seed, "Random seed");

  std::vector<std::string> game_cakes;
  std::string pavel = "centerpoint";
  std::string havel = "exact";
  bool csv = false;
  auto* game = app.add_subcommand("game", "Play one round per cake (CSV table for several cakes)");
  game->add_option("cakes", game_cakes, "Cake files or presets")->required();
  game->add_option("--pavel", pavel, "centroid | centerpoint[:tol] | fixed:x,y,...");
  game->add_option("--havel", havel, "exact | sampled[:count] | manual:dx,dy,...");
  game->add_option("--seed", seed, "Seed for sampled Havel");
  game->add_flag("--csv", csv, "Always print the CSV table");

  int heatmap = 0;
  std::string cut_arg;
  auto* render = app.add_subcommand("render", "Render a 2D cake as SVG");
  render->add_option("cake", cake_ref, "Cake file or preset")->required();
  auto* heat_opt = render->add_option("--heatmap", heatmap, "Depth heatmap grid resolution (<= 512)");
  render->add_option("--cut", cut_arg, "Cut overlay x,y,dx,dy")->excludes(heat_opt);
  render->add_option("-o,--output", output, "Output file (default stdout)");

  ServeConfig serve_config;
  serve_config.port = default_port();
  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--port", serve_config.port, "Port (default $CAKECUT_PORT or 8080)");
  serve->add_option("--host", serve_config.host, "Bind address");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate || *info) {
      const NamedCake c = load(cake_ref);
      nlohmann::json j = cake_info_json(c.cake, content_hash(c.cake), c.id);
      if (*validate) j["valid"] = true;
      print(j);
    } else if (*depth) {
      const NamedCake c = load(cake_ref);
      print(depth_json(depth_at(c.cake, point_arg(coords, c.cake.dim()))));
    } else if (*bestcut) {
      const NamedCake c = load(cake_ref);
      const Cut cut = best_cut(c.cake, point_arg(coords, c.cake.dim()), mode == "min" ? CutMode::MinPiece : CutMode::MaxPiece);
      nlohmann::json j = cut_json(c.cake, cut);
      j["mode"] = mode;
      print(j);
    } else if (*centerpoint) {
      const NamedCake c = load(cake_ref);
      print(maximin_json(maximin_point(c.cake, tol), true));
    } else if (*star) {
      const StarBody sb = star_body(star_n);
      write_output(output, cake_to_json(sb.cake, "star" + std::to_string(star_n)).dump(2) + "\n");
    } else if (*theorem) {
      return print_theorem_table(star_n, verify_theorem(star_n, samples, sphere_samples, seed));
    } else if (*game) {
      std::vector<NamedCake> cakes;
      for (const std::string& ref : game_cakes) cakes.push_back(load(ref));
      const int dim = cakes.front().cake.dim();
      const PavelStrategy p = parse_pavel(pavel, dim);
      const HavelStrategy h = parse_havel(havel, dim, seed);
      if (cakes.size() == 1 && !csv) {
        print(round_json(play_round(cakes.front().cake, p, h, cakes.front().id)));
      } else {
        const ExperimentSummary s = run_experiment(cakes, p, h, &std::cout);
        std::cerr << "min_fraction " << std::setprecision(12) << s.min_fraction << " on " << s.argmin_id << '\n';
      }
    } else if (*render) {
      const NamedCake c = load(cake_ref);
      SvgOverlay overlay;
      if (heatmap > 0) {
        overlay = HeatmapOverlay{heatmap};
      } else if (!cut_arg.empty()) {
        const std::vector<double> v = parse_list(cut_arg);
        if (v.size() != 4) throw Error(ErrorCode::InvalidArgument, "--cut expects x,y,dx,dy");
        overlay = make_cut(c.cake, Vector{v[0], v[1]}, normalize(Vector{v[2], v[3]}));
      }
      write_output(output, render_svg(c.cake, overlay));
    } else if (*serve) {
      ApiService service;
      std::cerr << "cakecut API listening on " << serve_config.host << ':' << serve_config.port << '\n';
      serve_api(service, serve_config);
    }
  } catch (const NoConvergenceError& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    print(maximin_json(e.best(), false));
    return kExitNoConvergence;
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
