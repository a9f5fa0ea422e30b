#include "cgx/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cgx/generators.hpp"
#include "cgx/json_io.hpp"
#include "cgx/polygon.hpp"
#include "cgx/shelling.hpp"
#include "cgx/svg.hpp"

namespace cgx::cli {

namespace {

struct Options {
  std::string output;
  std::string svg;
  std::string lambda;
  std::optional<std::size_t> limit;
  std::uint64_t seed = 1;
  bool json = true;
};

std::size_t effective_limit(const Options& opts) {
  if (opts.limit) return *opts.limit;
  if (const char* env = std::getenv("CGX_LIMIT")) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("CGX_LIMIT is not a nonnegative integer: '") + env + "'");
  }
  return kDefaultLimit;
}

Json axiom_json(const ConvexGeometry& g, const AxiomReport& r) {
  Json j{{"pass", r.pass()},
         {"contains_empty_and_ground", r.contains_empty_and_ground},
         {"intersection_closed", r.intersection_closed},
         {"extensible", r.extensible}};
  if (r.intersection_witness) {
    j["intersection_witness"] = Json::array(
        {names_json(g.ground(), r.intersection_witness->first), names_json(g.ground(), r.intersection_witness->second)});
  }
  if (r.extension_witness) j["extension_witness"] = names_json(g.ground(), *r.extension_witness);
  return j;
}

Json report_json(const GroundSet& ground, const VerificationReport& r) {
  Json j{{"pass", r.pass}};
  if (r.witness) j["witness"] = names_json(ground, *r.witness);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json orderings_list(const OrderingFamily& f) { return to_json(f)["orderings"]; }

class Runner {
 public:
  Runner(std::ostream& out, std::istream& in) : out_(out), in_(in) {}

  int check(const std::string& path) {
    const auto g = load_geometry(path);
    const auto axioms = check_axioms(g);
    Json j{{"axioms", axiom_json(g, axioms)}};
    bool pass = axioms.pass();
    if (axioms.pass()) {
      const auto ae = check_anti_exchange(g);
      Json ae_json{{"pass", ae.pass}};
      if (ae.violation) {
        ae_json["violation"] = Json{{"X", names_json(g.ground(), ae.violation->base)},
                                    {"y", g.ground().name(ae.violation->y)},
                                    {"z", g.ground().name(ae.violation->z)}};
      }
      j["anti_exchange"] = std::move(ae_json);
      pass = ae.pass;
    } else {
      j["anti_exchange"] = nullptr;
    }
    j["pass"] = pass;
    return emit(j, pass);
  }

  int closure_of(const std::string& path, const std::vector<std::string>& elements) {
    const auto g = load_geometry(path);
    const Subset a = g.ground().subset_of(elements);
    return emit(Json{{"set", names_json(g.ground(), a)}, {"closure", names_json(g.ground(), closure(g, a))}});
  }

  int cdim_of(const std::string& path, std::size_t limit) {
    const auto result = cdim(load_geometry(path), limit);
    return emit(Json{{"cdim", result.k}, {"witness", orderings_list(result.witness)}});
  }

  int compat(const std::string& path) {
    const auto g = load_geometry(path);
    const auto orders = compatible_orderings(g);
    Json list = Json::array();
    for (const auto& o : orders) {
      Json names = Json::array();
      for (ElementId e : o.ranked()) names.push_back(g.ground().name(e));
      list.push_back(std::move(names));
    }
    return emit(Json{{"count", orders.size()}, {"orderings", std::move(list)}});
  }

  int dim(const std::string& path, std::size_t limit) {
    const auto r = dim_report(load_geometry(path), limit);
    Json j{{"cdim", r.cdim}, {"upper_bound", r.upper_bound}, {"lower_bound", r.lower_bound}, {"dim1", r.dim1}};
    j["dim_exact"] = r.dim_exact ? Json(*r.dim_exact) : Json(nullptr);
    return emit(j);
  }

  int embed_shelling_cmd(const std::string& path, const Options& opts, std::size_t limit) {
    const auto family = orderings_from_json(read_json(path, in_));
    std::optional<Rational> lambda;
    if (!opts.lambda.empty()) lambda = parse_rational(opts.lambda);
    const auto e = embed_shelling(family, lambda, limit);
    return emit_or_write(to_json(e.instance), opts.output);
  }

  int embed_polygons_cmd(const std::string& path, const Options& opts, std::size_t limit) {
    const auto g = load_geometry(path);
    const auto result = embed_polygons(g, limit);
    if (!opts.svg.empty()) emit_svg(result.map, opts.svg);
    return emit_or_write(to_json(result.map), opts.output);
  }

  int verify_shelling_cmd(const std::string& embedding, const std::string& geometry) {
    const auto inst = instance_from_json(read_json(embedding, in_));
    const auto g = load_geometry(geometry);
    const auto report = verify_shelling(inst, g);
    return emit(report_json(g.ground(), report), report.pass);
  }

  int verify_hulls_cmd(const std::string& path, const Options& opts, std::size_t limit) {
    const auto family = orderings_from_json(read_json(path, in_));
    std::optional<Rational> lambda;
    if (!opts.lambda.empty()) lambda = parse_rational(opts.lambda);
    const auto e = embed_shelling(family, lambda, limit);
    const auto pos = verify_pos_equals_ext_hull(e);
    const auto hull = verify_hull_equals_ext_hull(e);
    const auto roundtrip = verify_roundtrip(e, generate(family));
    const bool pass = pos.pass && hull.pass && roundtrip.pass;
    return emit(Json{{"pass", pass},
                     {"lambda", to_string(e.lambda)},
                     {"lambda_raised", e.lambda_raised},
                     {"pos_equals_ext_hull", report_json(family.ground(), pos)},
                     {"hull_equals_ext_hull", report_json(family.ground(), hull)},
                     {"roundtrip", report_json(family.ground(), roundtrip)}},
                pass);
  }

  int verify_polygons_cmd(const std::string& map_path, const std::string& geometry_path) {
    const auto map = polygon_map_from_json(read_json(map_path, in_));
    const auto injective = check_strong_injectivity(map);
    Json inj{{"pass", injective.pass}};
    if (!injective.pass) {
      inj["elements"] = Json::array(
          {map.ground().name(injective.elements->first), map.ground().name(injective.elements->second)});
      inj["shared_vertex"] = to_json(*injective.shared_vertex);
    }
    Json j{{"strong_injectivity", std::move(inj)}};
    bool pass = injective.pass;
    if (!geometry_path.empty()) {
      const auto g = load_geometry(geometry_path);
      const auto report = verify_polygons(map, g);
      j["geometry"] = report_json(g.ground(), report);
      pass = pass && report.pass;
    } else if (injective.pass) {
      // Strong injectivity guarantees a convex geometry; confirm it.
      const auto axioms = check_axioms(geometry_from_polygons(map));
      j["axioms_pass"] = axioms.pass();
      pass = axioms.pass();
    }
    j["pass"] = pass;
    return emit(j, pass);
  }

  int gen_poset(const std::string& levels, const Options& opts) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(levels);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        sizes.push_back(std::stoul(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw InvalidInput("--levels expects three comma-separated sizes, got '" + levels + "'");
      }
    }
    if (sizes.size() != 3) throw InvalidInput("--levels expects three comma-separated sizes, got '" + levels + "'");
    return emit_or_write(to_json(poset_geometry(three_level_poset(sizes[0], sizes[1], sizes[2]))), opts.output);
  }

  int gen_points(bool circle, std::size_t n, const Options& opts) {
    if (n == 0) throw InvalidInput("--n must be positive");
    const auto ground = GroundSet::letters(n);
    const auto points = circle ? circle_points(n) : line_points(n);
    return emit_or_write(to_json(planar_points_geometry(ground, points)), opts.output);
  }

  int gen_orderings(const std::string& path, const Options& opts) {
    return emit_or_write(to_json(generate(orderings_from_json(read_json(path, in_)))), opts.output);
  }

  int gen_random(std::size_t n, std::size_t m, const Options& opts) {
    if (n == 0 || m == 0) throw InvalidInput("--n and --m must be positive");
    std::mt19937_64 rng(opts.seed);
    return emit_or_write(to_json(random_ordering_family(n, m, rng)), opts.output);
  }

  int drel(const std::string& path, std::size_t limit) {
    const auto g = load_geometry(path);
    const auto rel = d_relation(g, limit);
    Json pairs = Json::array();
    for (auto [a, b] : rel.pairs) pairs.push_back(Json::array({g.ground().name(a), g.ground().name(b)}));
    Json j{{"pairs", std::move(pairs)}, {"acyclic", rel.acyclic}};
    if (rel.cycle) {
      Json cycle = Json::array();
      for (ElementId e : *rel.cycle) cycle.push_back(g.ground().name(e));
      j["cycle"] = std::move(cycle);
    }
    return emit(j);
  }

  int ext(const std::string& path, const std::vector<std::string>& elements) {
    const auto family = orderings_from_json(read_json(path, in_));
    const Subset x = family.ground().subset_of(elements);
    const ElementId z = extension_element(family, x);
    return emit(Json{{"set", names_json(family.ground(), x)},
                     {"extension", family.ground().name(z)},
                     {"extended", names_json(family.ground(), x.with(z))}});
  }

 private:
  ConvexGeometry load_geometry(const std::string& path) { return geometry_from_json(read_json(path, in_)); }

  int emit(const Json& j, bool pass = true) {
    out_ << j.dump(2) << '\n';
    return pass ? kExitOk : kExitVerificationFailed;
  }

  int emit_or_write(const Json& j, const std::string& output) {
    if (output.empty()) return emit(j);
    write_json(j, output);
    return kExitOk;
  }

  std::ostream& out_;
  std::istream& in_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"cgx: construct, analyze, embed, and verify finite convex geometries", "cgx"};
  app.require_subcommand(1);
  // Global flags are accepted after the subcommand too.
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Options opts;
  app.add_option("--limit", opts.limit, "Largest |E| for exponential searches (default 12, or CGX_LIMIT)");
  app.add_option("--seed", opts.seed, "Seed for randomized subcommands");
  app.add_flag("--json", opts.json, "Emit JSON (the default and only format)");

  Runner runner(out, in);
  std::function<int()> action;
  std::string input, second;
  std::vector<std::string> elements;
  std::size_t count = 0, orders = 0;
  std::string levels;

  auto* check = app.add_subcommand("check", "Check the convex geometry axioms and anti-exchange");
  check->add_option("geometry", input, "Geometry JSON (- for stdin)")->required();
  check->callback([&] { action = [&] { return runner.check(input); }; });

  auto* closure_cmd = app.add_subcommand("closure", "Closure of a set of elements");
  closure_cmd->add_option("geometry", input, "Geometry JSON")->required();
  closure_cmd->add_option("elements", elements, "Element names");
  closure_cmd->callback([&] { action = [&] { return runner.closure_of(input, elements); }; });

  auto* cdim_cmd = app.add_subcommand("cdim", "Convex dimension with a witness family");
  cdim_cmd->add_option("geometry", input, "Geometry JSON")->required();
  cdim_cmd->callback([&] { action = [&] { return runner.cdim_of(input, effective_limit(opts)); }; });

  auto* compat = app.add_subcommand("compat", "All compatible orderings");
  compat->add_option("geometry", input, "Geometry JSON")->required();
  compat->callback([&] { action = [&] { return runner.compat(input); }; });

  auto* dim = app.add_subcommand("dim", "Dimension report");
  dim->add_option("geometry", input, "Geometry JSON")->required();
  dim->callback([&] { action = [&] { return runner.dim(input, effective_limit(opts)); }; });

  auto* embed = app.add_subcommand("embed", "Build an embedding");
  embed->require_subcommand(1);
  auto* embed_shelling_cmd = embed->add_subcommand("shelling", "Generalized convex shelling from orderings");
  embed_shelling_cmd->add_option("orderings", input, "Orderings JSON")->required();
  embed_shelling_cmd->add_option("--lambda", opts.lambda, "Scale of Q (default (M+1)^(M+1), raised if it fails verification)");
  embed_shelling_cmd->add_option("-o", opts.output, "Write the embedding JSON here");
  embed_shelling_cmd->callback(
      [&] { action = [&] { return runner.embed_shelling_cmd(input, opts, effective_limit(opts)); }; });
  auto* embed_polygons_cmd = embed->add_subcommand("polygons", "Convex polygon embedding in the plane");
  embed_polygons_cmd->add_option("geometry", input, "Geometry JSON")->required();
  embed_polygons_cmd->add_option("--svg", opts.svg, "Also draw the polygons as SVG");
  embed_polygons_cmd->add_option("-o", opts.output, "Write the polygon map JSON here");
  embed_polygons_cmd->callback(
      [&] { action = [&] { return runner.embed_polygons_cmd(input, opts, effective_limit(opts)); }; });

  auto* verify = app.add_subcommand("verify", "Verify an embedding exactly");
  verify->require_subcommand(1);
  auto* verify_shelling_cmd = verify->add_subcommand("shelling", "Shelling geometry equals the target geometry");
  verify_shelling_cmd->add_option("embedding", input, "Embedding JSON")->required();
  verify_shelling_cmd->add_option("geometry", second, "Geometry JSON")->required();
  verify_shelling_cmd->callback([&] { action = [&] { return runner.verify_shelling_cmd(input, second); }; });
  auto* verify_hulls = verify->add_subcommand("hulls", "Pos, ExtHull and Hull(P + Q) identities for orderings");
  verify_hulls->add_option("orderings", input, "Orderings JSON")->required();
  verify_hulls->add_option("--lambda", opts.lambda, "Scale of Q (default (M+1)^(M+1), raised if it fails verification)");
  verify_hulls->callback(
      [&] { action = [&] { return runner.verify_hulls_cmd(input, opts, effective_limit(opts)); }; });
  auto* verify_polygons_cmd = verify->add_subcommand("polygons", "Strong injectivity and geometry of a polygon map");
  verify_polygons_cmd->add_option("map", input, "Polygon map JSON")->required();
  verify_polygons_cmd->add_option("geometry", second, "Geometry JSON to compare against");
  verify_polygons_cmd->callback([&] { action = [&] { return runner.verify_polygons_cmd(input, second); }; });

  auto* gen = app.add_subcommand("gen", "Generate a geometry");
  gen->require_subcommand(1);
  auto* gen_poset = gen->add_subcommand("poset", "Order-convex sets of a three-level poset");
  gen_poset->add_option("--levels", levels, "Level sizes, e.g. 2,1,1")->required();
  gen_poset->add_option("-o", opts.output, "Output path");
  gen_poset->callback([&] { action = [&] { return runner.gen_poset(levels, opts); }; });
  auto* gen_line = gen->add_subcommand("line", "Collinear points with standard convexity");
  gen_line->add_option("--n", count, "Number of points")->required();
  gen_line->add_option("-o", opts.output, "Output path");
  gen_line->callback([&] { action = [&] { return runner.gen_points(false, count, opts); }; });
  auto* gen_circle = gen->add_subcommand("circle", "Points on the unit circle with standard convexity");
  gen_circle->add_option("--n", count, "Number of points")->required();
  gen_circle->add_option("-o", opts.output, "Output path");
  gen_circle->callback([&] { action = [&] { return runner.gen_points(true, count, opts); }; });
  auto* gen_orderings = gen->add_subcommand("orderings", "Geometry generated by an ordering family");
  gen_orderings->add_option("orderings", input, "Orderings JSON")->required();
  gen_orderings->add_option("-o", opts.output, "Output path");
  gen_orderings->callback([&] { action = [&] { return runner.gen_orderings(input, opts); }; });
  auto* gen_random = gen->add_subcommand("random", "Random ordering family (orderings JSON), seeded by --seed");
  gen_random->add_option("--n", count, "Ground set size")->required();
  gen_random->add_option("--m", orders, "Number of orderings")->required();
  gen_random->add_option("-o", opts.output, "Output path");
  gen_random->callback([&] { action = [&] { return runner.gen_random(count, orders, opts); }; });

  auto* drel = app.add_subcommand("drel", "D-relation and its acyclicity");
  drel->add_option("geometry", input, "Geometry JSON")->required();
  drel->callback([&] { action = [&] { return runner.drel(input, effective_limit(opts)); }; });

  auto* ext = app.add_subcommand("ext", "Extension element of a generated set");
  ext->add_option("orderings", input, "Orderings JSON")->required();
  ext->add_option("elements", elements, "Element names of X");
  ext->callback([&] { action = [&] { return runner.ext(input, elements); }; });

  std::vector<const char*> argv{"cgx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const VerificationFailure& e) {
    out << Json{{"pass", false}, {"detail", e.what()}}.dump(2) << '\n';
    return kExitVerificationFailed;
  } catch (const InvalidInput& e) {
    err << "cgx: " << e.what() << '\n';
  } catch (const LimitExceeded& e) {
    err << "cgx: " << e.what() << " (raise with --limit or CGX_LIMIT)\n";
  } catch (const std::runtime_error& e) {
    err << "cgx: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace cgx::cli
