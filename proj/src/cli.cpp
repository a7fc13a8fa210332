#include "quadinc/cli.hpp"

#include "quadinc/bounds.hpp"
#include "quadinc/cross_ratio.hpp"
#include "quadinc/decomposition.hpp"
#include "quadinc/errors.hpp"
#include "quadinc/harness.hpp"
#include "quadinc/incidence.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace quadinc {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string beta = "2/11";
  std::string kappa = "1";
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

// Points and planes come either from one instance file or from two files.
struct LoadedInstance {
  std::vector<Point3> points;
  std::vector<Plane> planes;
  std::optional<Quadric> quadric;
};

LoadedInstance load_instance(const std::string& instance, const std::string& points, const std::string& planes,
                             const std::string& quadric) {
  LoadedInstance li;
  if (!instance.empty()) {
    Instance in = instance_from_json(read_json_file(instance));
    li.points = std::move(in.points);
    li.planes = std::move(in.planes);
    li.quadric = std::move(in.quadric);
  }
  if (!points.empty()) li.points = points_from_json(read_json_file(points));
  if (!planes.empty()) li.planes = planes_from_json(read_json_file(planes));
  if (!quadric.empty()) {
    Json j = read_json_file(quadric);
    li.quadric = quadric_from_json(j.contains("quadric") ? j.at("quadric") : j);
  }
  require_distinct(li.points);
  require_distinct(li.planes);
  return li;
}

std::vector<Rational> set_from_json(const Json& j) {
  const Json& list = j.is_object() && j.contains("set") ? j.at("set") : j;
  if (!list.is_array()) throw InputError("set must be a JSON list of rational strings");
  std::vector<Rational> out;
  for (const Json& e : list) out.push_back(rational_from_json(e));
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact point-plane incidence decomposition on quadrics, and rich Mobius transformations", "quadinc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for generated instances")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads; outputs do not depend on it")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--beta", g.beta, "Exponent of the log factor in the general bound")->capture_default_str();
  app.add_option("--kappa", g.kappa, "Exponent of the log factor in the weak bound")->capture_default_str();

  // classify
  auto* classify = app.add_subcommand("classify", "Print the classification tag of a quadric");
  std::string cq;
  bool classify_json = false;
  classify->add_option("--quadric", cq, "Quadric JSON")->required();
  classify->add_flag("--json", classify_json, "Print the full quadric JSON instead of the tag");

  // incidence
  auto* incidence = app.add_subcommand("incidence", "Exact incidence graph as CSV");
  std::string inst, pts, pls, quad, outp;
  bool histogram = false;
  std::size_t rich_k = 0;
  incidence->add_option("--instance", inst, "Instance JSON with points and planes");
  incidence->add_option("--points", pts, "Points JSON");
  incidence->add_option("--planes", pls, "Planes JSON");
  incidence->add_option("--out", outp, "Edge CSV path (default stdout)");
  incidence->add_flag("--histogram", histogram, "Also print k,planes_with_exactly_k_points");
  incidence->add_option("--rich", rich_k, "Also print the planes with at least this many points");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose G(P,H) along the lines of a quadric and audit it");
  std::string verify;
  bool no_pseudo = false;
  decompose_cmd->add_option("--instance", inst, "Instance JSON with points, planes and quadric");
  decompose_cmd->add_option("--points", pts, "Points JSON");
  decompose_cmd->add_option("--planes", pls, "Planes JSON");
  decompose_cmd->add_option("--quadric", quad, "Quadric JSON");
  decompose_cmd->add_option("--out", outp, "Decomposition JSON path");
  decompose_cmd->add_option("--verify", verify, "Audit this decomposition JSON instead of computing one");
  decompose_cmd->add_flag("--skip-pseudo-circles", no_pseudo, "Skip the quadratic pairwise section check");

  // crossratio
  auto* crossratio = app.add_subcommand("crossratio", "Rich Mobius transformations, Q and distinct cross-ratios");
  std::string set_path, json_out;
  std::size_t kmin = 3, max_size = 30, list_min = 0;
  bool include_affine = false;
  crossratio->add_option("--set", set_path, "JSON list of rational strings")->required();
  crossratio->add_option("--kmin", kmin, "Smallest k tabulated")->check(CLI::Range(std::size_t{3}, std::size_t{1} << 20))->capture_default_str();
  crossratio->add_option("--out", outp, "CSV path for k,N_geq_k,bound_ngek,ratio (default stdout)");
  crossratio->add_option("--json", json_out, "JSON report path");
  crossratio->add_option("--max-size", max_size, "Refuse larger sets")->capture_default_str();
  crossratio->add_option("--list-min", list_min, "List transformations of at least this richness in the JSON");
  crossratio->add_flag("--include-affine", include_affine, "Also report affine maps y = ax + b");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Generate, decompose and audit a sweep of instances");
  std::string config, failures;
  std::size_t sweep = 0, min_size = 10, max_sz = 100;
  experiment->add_option("--config", config, "JSON list of instance specs");
  experiment->add_option("--sweep", sweep, "Generate this many mixed specs from --seed instead");
  experiment->add_option("--min-size", min_size, "Smallest m and n in a sweep")->capture_default_str();
  experiment->add_option("--max-size", max_sz, "Largest m and n in a sweep")->capture_default_str();
  experiment->add_option("--out", outp, "CSV report path (default stdout)");
  experiment->add_option("--failures", failures, "Directory for instances whose audit failed");
  experiment->add_flag("--skip-pseudo-circles", no_pseudo, "Skip the quadratic pairwise section check");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  std::uint64_t bm = 1, bn = 1, bk = 0, products = 0;
  bounds->add_option("--m", bm, "Number of points")->check(CLI::PositiveNumber);
  bounds->add_option("--n", bn, "Number of planes (or |A| with --k)")->check(CLI::PositiveNumber);
  bounds->add_option("--k", bk, "Evaluate the rich-transformation bound at this k >= 3");
  bounds->add_option("--products", products, "sum |P_l||H_l| for the small-m bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*classify) {
      Json j = read_json_file(cq);
      Quadric v = quadric_from_json(j.contains("quadric") ? j.at("quadric") : j);
      if (classify_json)
        out << dump(to_json(v));
      else
        out << to_string(v.kind()) << '\n';
      return 0;
    }

    if (*incidence) {
      LoadedInstance li = load_instance(inst, pts, pls, "");
      IncidenceGraph graph = incidence_graph(li.points, li.planes, g.workers);
      emit(graph_to_csv(graph), outp, out);
      if (histogram) {
        out << "k,planes\n";
        for (const auto& [k, count] : richness_histogram(graph)) out << k << ',' << count << '\n';
      }
      if (rich_k > 0) {
        out << "rich_plane,points\n";
        for (std::size_t j : rich_planes(graph, rich_k)) out << j << ',' << graph.points_on(j).size() << '\n';
      }
      return 0;
    }

    if (*decompose_cmd) {
      LoadedInstance li = load_instance(inst, pts, pls, quad);
      if (!li.quadric) throw InputError("decompose needs a quadric (--quadric or an instance with one)");
      IncidenceGraph graph = incidence_graph(li.points, li.planes, g.workers);
      Decomposition d = verify.empty() ? decompose(li.points, li.planes, *li.quadric, graph)
                                       : decomposition_from_json(read_json_file(verify));
      AuditOptions ao;
      ao.pseudo_circle = !no_pseudo;
      AuditReport audit = audit_decomposition(li.points, li.planes, *li.quadric, graph, d, ao);
      if (verify.empty() && !outp.empty()) write_text_file(outp, dump(to_json(d)));
      BoundReport br = bound_report(li.points.size(), li.planes.size(), graph, d, parse_decimal(g.kappa));
      out << bound_report_csv_header() << '\n' << bound_report_csv_row(br) << '\n';
      if (!audit.passed()) {
        err << "audit failed:\n" << audit.summary();
        return 1;
      }
      return 0;
    }

    if (*crossratio) {
      std::vector<Rational> set = set_from_json(read_json_file(set_path));
      if (set.size() > max_size)
        throw InputError("set has " + std::to_string(set.size()) + " elements, above --max-size " +
                         std::to_string(max_size));
      RichTransformOptions o;
      o.k_min = kmin;
      o.list_min = list_min;
      o.include_affine = include_affine;
      o.workers = g.workers;
      RichTransformReport report = cross_ratio_report(set, o);
      emit(ngek_csv(report), outp, out);
      if (!json_out.empty()) write_text_file(json_out, dump(to_json(report, std::max(kmin, list_min))));
      err << "Q=" << report.q << " distinct_cross_ratios=" << report.distinct_cross_ratios << '\n';
      return 0;
    }

    if (*experiment) {
      std::vector<InstanceSpec> specs;
      if (!config.empty())
        specs = instance_specs_from_json(read_json_file(config));
      else if (sweep > 0)
        specs = sweep_specs(sweep, g.seed, min_size, max_sz);
      else
        throw InputError("experiment needs --config or --sweep");
      ExperimentOptions eo;
      eo.workers = g.workers;
      eo.audit.pseudo_circle = !no_pseudo;
      if (!failures.empty()) eo.failure_dir = failures;
      ExperimentReport report = run_experiment(specs, eo);
      emit(experiment_csv(report), outp, out);
      for (std::size_t i = 0; i < report.rows.size(); ++i)
        if (report.rows[i].error) err << "row " << i << ": " << *report.rows[i].error << '\n';
      err << "rows=" << report.rows.size() << " audit_failures=" << report.audit_failures()
          << " errors=" << report.errors() << " max_ratio=" << format_decimal(report.max_ratio(), 12) << '\n';
      return report.all_passed() ? 0 : 1;
    }

    if (*bounds) {
      if (bk > 0) {
        out << "n,k,bound_ngek\n" << bn << ',' << bk << ',' << format_decimal(eval_ngek_bound(bn, bk)) << '\n';
        return 0;
      }
      out << "m,n,bound_general,bound_weak,bound_small_m\n"
          << bm << ',' << bn << ',' << format_decimal(eval_bound_general(bm, bn, parse_decimal(g.beta))) << ','
          << format_decimal(eval_bound_weak(bm, bn, parse_decimal(g.kappa))) << ','
          << format_decimal(eval_bound_small_m(bn, products)) << '\n';
      return 0;
    }
  } catch (const AuditFailure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace quadinc
