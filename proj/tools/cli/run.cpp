#include "wormlab_cli/run.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wormlab/capacity.hpp"
#include "wormlab/errors.hpp"
#include "wormlab/wormcover.hpp"
#include "wormlab_cli/bodies_io.hpp"
#include "wormlab_cli/svg.hpp"

namespace wormlab::cli {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// CSV table with a header row.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string s;
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + num(row[i]);
    s += '\n';
  }
  return s;
}

[[noreturn]] void no_format(const char* command, const char* format) {
  throw ParseError(std::string("command '") + command + "' does not support --format " + format);
}

struct Output {
  json document;
  std::string table;  // CSV rendering, empty when unsupported
  std::string svg;    // empty when unsupported
};

std::vector<WormFamily> families_from_names(const std::vector<std::string>& names) {
  std::vector<WormFamily> out;
  for (const auto& n : names) {
    if (n == "circle") {
      out.push_back(circle_family());
    } else if (n == "triangle") {
      out.push_back(triangle_family());
    } else if (n == "rectangle") {
      out.push_back(rectangle_family());
    } else if (n == "segment") {
      out.push_back(segment_family());
    } else {
      throw ParseError("unknown worm family '" + n + "' (circle, triangle, rectangle, segment)");
    }
  }
  return out;
}

std::string grid_table(const BoundReport& r) {
  std::vector<std::string> header;
  for (const auto& [name, value] : r.outer_params) header.push_back(name);
  header.push_back("value");
  std::vector<std::vector<double>> rows;
  for (const auto& s : r.grid) {
    auto row = s.params;
    row.push_back(s.value);
    rows.push_back(std::move(row));
  }
  return csv(header, rows);
}

Output execute(const RunConfig& c, std::ostream& err) {
  Output o;
  switch (c.command) {
    case Command::Length: {
      const double v = minkowski_length(load_curve(c.curve), load_body(c.t_body));
      o.document = {{"length", v}};
      o.table = csv({"length"}, {{v}});
      break;
    }
    case Command::Capacity: {
      const ConvexBody2 k = load_body(c.k_body);
      const CapacityReport r = min_escape_length(k, load_body(c.t_body), c.grid);
      o.document = to_json(r);
      o.table = csv({"value", "bounces", "grid"}, {{r.value, double(r.bounce_count), double(r.solver_grid)}});
      if (c.format == Format::Svg) o.svg = capacity_svg(r, k);
      break;
    }
    case Command::Escape: {
      const double v = escape_length(load_body(c.k_body), load_body(c.t_body), c.grid);
      o.document = {{"escape_length", v}};
      o.table = csv({"escape_length"}, {{v}});
      break;
    }
    case Command::Viterbo: {
      const ViterboCheck r = check_viterbo(load_body(c.k_body), load_body(c.t_body), c.grid);
      o.document = to_json(r);
      o.table = csv({"volume", "capacity", "ratio"}, {{r.volume, r.capacity, r.ratio}});
      break;
    }
    case Command::Mahler: {
      const ConvexBody2 t = load_body(c.t_body);
      MahlerCheck r;
      if (const auto* p = t.as_polygon()) {
        r = check_mahler(*p, c.symmetric, c.grid);
      } else if (const auto* d = t.as_disc()) {
        r = check_mahler(*d, c.grid);
      } else {
        throw InvalidParam("mahler needs a polygon or a disc");
      }
      o.document = to_json(r);
      o.table = csv({"capacity", "volume_product"}, {{r.capacity, r.volume_product}});
      break;
    }
    case Command::Invariance: {
      const LinearMap2 phi(c.phi[0], c.phi[1], c.phi[2], c.phi[3]);
      const ConvexBody2 k = load_body(c.k_body);
      const ConvexBody2 t = load_body(c.t_body);
      const InvarianceCheck r = check_symplectic_invariance(k, t, phi, c.grid);
      o.document = to_json(r);
      o.table = csv({"before", "after"}, {{r.before, r.after}});
      break;
    }
    case Command::Wetzel:
    case Command::Bound: {
      BoundReport r;
      if (c.command == Command::Wetzel) {
        r = wetzel_lower_bound(c.outer_grid, c.refine, c.tolerance);
      } else {
        const auto families = families_from_names(c.families);
        r = generic_lower_bound(families, load_body(c.t_body),
                                OuterSchedule{.grid = c.outer_grid,
                                              .refine_iters = c.refine,
                                              .inner_tolerance = c.tolerance,
                                              .seed = c.seed},
                                c.alpha);
      }
      err << "wall_time_seconds: " << num(r.wall_time) << '\n';
      o.document = to_json(r);
      o.table = grid_table(r);
      if (c.format == Format::Svg) o.svg = bound_svg(r);
      break;
    }
    case Command::Fit: {
      const auto a = fits_by_translation(load_curve(c.curve), load_body(c.k_body));
      o.document = {{"fits", a.has_value()}, {"translation", a ? json::array({a->x, a->y}) : json(nullptr)}};
      break;
    }
    case Command::Falsify: {
      const auto worm = falsify_cover(load_body(c.k_body), load_body(c.t_body), c.samples, c.seed);
      o.document = {{"samples", c.samples},
                    {"seed", c.seed},
                    {"counterexample", worm ? curve_to_json(*worm) : json(nullptr)}};
      break;
    }
  }
  return o;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Length: return "length";
    case Command::Capacity: return "capacity";
    case Command::Escape: return "escape";
    case Command::Viterbo: return "viterbo";
    case Command::Mahler: return "mahler";
    case Command::Invariance: return "invariance";
    case Command::Wetzel: return "wetzel";
    case Command::Bound: return "bound";
    case Command::Fit: return "fit";
    case Command::Falsify: return "falsify";
  }
  return "?";
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.grid < 64 || c.grid > 8192) throw InvalidParam("--grid must be in [64, 8192]");
  if (c.resolution < 16 || c.resolution > 65536) throw InvalidParam("--resolution must be in [16, 65536]");
  if (!(c.tolerance > 0.0)) throw InvalidParam("--tolerance must be positive");
  if (!(c.alpha > 0.0)) throw InvalidParam("--alpha must be positive");
  if (c.samples < 1) throw InvalidParam("--samples must be at least 1");
  if (c.refine < 0) throw InvalidParam("--refine must be non-negative");
  const int min_outer = c.command == Command::Wetzel ? 8 : 2;
  if (c.outer_grid < min_outer || c.outer_grid > 512) {
    throw InvalidParam("--outer-grid must be in [" + std::to_string(min_outer) + ", 512]");
  }
  const bool needs_k = c.command == Command::Capacity || c.command == Command::Escape ||
                       c.command == Command::Viterbo || c.command == Command::Invariance ||
                       c.command == Command::Fit || c.command == Command::Falsify;
  if (needs_k && c.k_body.empty()) throw ParseError("--k is required");
  if ((c.command == Command::Length || c.command == Command::Fit) && c.curve.empty()) {
    throw ParseError("--curve is required");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const Output o = execute(config, err);
    std::string text;
    switch (config.format) {
      case Format::Json:
        text = o.document.dump(2) + '\n';
        break;
      case Format::Csv:
        if (o.table.empty()) no_format(command_name(config.command), "csv");
        text = o.table;
        break;
      case Format::Svg:
        if (o.svg.empty()) no_format(command_name(config.command), "svg");
        text = o.svg;
        break;
    }
    if (config.out.empty()) {
      out << text;
    } else {
      write_file(config.out, text);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const NonConvergence& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitConvergence;
  } catch (const DomainError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kExitOther;
  } catch (const std::exception& e) {
    err << "Error: " << e.what() << '\n';
    return kExitOther;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minkowski billiards, EHZ capacities of Lagrangian products and worm-cover bounds in the plane"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "json";
  std::vector<double> phi(c.phi.begin(), c.phi.end());

  auto common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "Output file (default: standard output)");
    s->add_option("--format", format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  };
  auto k_opt = [&](CLI::App* s) {
    s->add_option("--k", c.k_body, "Body K: square, unit-square, disc[:r], diamond, hexagon, reuleaux:<w> or a JSON file")
        ->required();
  };
  auto t_opt = [&](CLI::App* s) { s->add_option("--t", c.t_body, "Body T (default: disc)")->capture_default_str(); };
  auto grid_opt = [&](CLI::App* s) { s->add_option("--grid", c.grid, "Boundary samples of the capacity solver")->capture_default_str(); };

  struct Sub {
    Command command;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  auto sub = [&](Command cmd, const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    subs.push_back({cmd, s});
    return s;
  };

  {
    auto* s = sub(Command::Length, "length", "ℓ_T-length of a closed polygonal curve");
    s->add_option("--curve", c.curve, "Curve JSON file")->required();
    t_opt(s);
  }
  {
    auto* s = sub(Command::Capacity, "capacity", "EHZ capacity of K × T with a minimizing trajectory");
    k_opt(s);
    t_opt(s);
    grid_opt(s);
  }
  {
    auto* s = sub(Command::Escape, "escape", "Largest α with K ∈ A(T, α)");
    k_opt(s);
    t_opt(s);
    grid_opt(s);
  }
  {
    auto* s = sub(Command::Viterbo, "viterbo", "Volume over capacity²/2 for K × T");
    k_opt(s);
    t_opt(s);
    grid_opt(s);
  }
  {
    auto* s = sub(Command::Mahler, "mahler", "Capacity of T × T° and the volume product");
    t_opt(s);
    s->add_flag("--symmetric", c.symmetric, "Check central symmetry of T");
    grid_opt(s);
  }
  {
    auto* s = sub(Command::Invariance, "invariance", "Capacity before and after (Φ, (Φᵀ)⁻¹)");
    k_opt(s);
    t_opt(s);
    grid_opt(s);
    s->add_option("--phi", phi, "Matrix entries m11 m12 m21 m22")->expected(4);
    s->add_option("--resolution", c.resolution, "Polygonization resolution")->capture_default_str();
  }
  {
    auto* s = sub(Command::Wetzel, "wetzel", "Hull-area lower bound from a circle, a triangle and a rectangle");
    s->add_option("--outer-grid", c.outer_grid, "Grid points per outer parameter")->capture_default_str();
    s->add_option("--refine", c.refine, "Outer refinement polls")->capture_default_str();
    s->add_option("--tolerance", c.tolerance, "Inner minimization gap")->capture_default_str();
  }
  {
    auto* s = sub(Command::Bound, "bound", "Hull-area lower bound for chosen worm families and T");
    s->add_option("--families", c.families, "circle, triangle, rectangle, segment")->delimiter(',');
    t_opt(s);
    s->add_option("--alpha", c.alpha, "Worm length")->capture_default_str();
    s->add_option("--outer-grid", c.outer_grid, "Grid points per outer parameter")->capture_default_str();
    s->add_option("--refine", c.refine, "Outer refinement polls")->capture_default_str();
    s->add_option("--tolerance", c.tolerance, "Inner minimization gap")->capture_default_str();
    s->add_option("--seed", c.seed, "Refinement seed")->capture_default_str();
  }
  {
    auto* s = sub(Command::Fit, "fit", "Translate a curve into K");
    s->add_option("--curve", c.curve, "Curve JSON file")->required();
    k_opt(s);
  }
  {
    auto* s = sub(Command::Falsify, "falsify", "Search for a unit-length worm that does not fit into K");
    k_opt(s);
    t_opt(s);
    s->add_option("--samples", c.samples, "Number of random worms")->capture_default_str();
    s->add_option("--seed", c.seed, "Sampler seed")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // Subcommand help.
      for (const auto& s : subs) {
        if (s.app->parsed()) {
          out << s.app->help();
          return kExitOk;
        }
      }
      out << app.help();
      return kExitOk;
    }
    err << "ParseError: " << e.what() << '\n';
    return kExitParse;
  }
  for (const auto& s : subs) {
    if (s.app->parsed()) c.command = s.command;
  }
  std::copy(phi.begin(), phi.end(), c.phi.begin());
  c.format = format == "csv" ? Format::Csv : format == "svg" ? Format::Svg : Format::Json;
  return run(c, out, err);
}

}  // namespace wormlab::cli
