// polyef: batch front end for the polyhedral extended-formulation toolkit.
//
// Exit codes: 0 = the queried property holds (or the command succeeded),
//             1 = it does not hold, 2 = usage, parse or dimension error.

#include "polyef/ef.hpp"
#include "polyef/error.hpp"
#include "polyef/fixtures.hpp"
#include "polyef/io.hpp"
#include "polyef/reduction.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using polyef::io::Json;
namespace fs = std::filesystem;

constexpr const char *kVersion = "polyef 0.1.0";

struct UsageError : polyef::Error {
  using polyef::Error::Error;
};

// A path to a JSON file, or the name of a bundled fixture ("fixture:NAME" or
// plain NAME when no such file exists).
std::string load_text(const std::string &source) {
  std::string name = source;
  if (name.rfind("fixture:", 0) == 0) {
    name = name.substr(8);
  } else if (fs::exists(source)) {
    std::ifstream in(source);
    if (!in)
      throw UsageError("cannot read '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (auto payload = polyef::find_fixture(name))
    return std::string(*payload);
  throw UsageError("no file or fixture named '" + source + "'");
}

Json load_json(const std::string &source) {
  return polyef::io::parse(load_text(source));
}

polyef::RVector parse_list(const std::vector<std::string> &items) {
  polyef::RVector out;
  for (const auto &s : items)
    out.push_back(polyef::parse_rational(s));
  return out;
}

class Output {
public:
  explicit Output(const std::string &path) : path_(path) {}

  void write(const std::string &text) const {
    if (path_.empty() || path_ == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path_);
    if (!out)
      throw UsageError("cannot write '" + path_ + "'");
    out << text;
  }
  void write(const Json &j) const { write(j.dump(2) + "\n"); }

private:
  std::string path_;
};

polyef::CoordinateSplit split_for(std::size_t dim,
                                  const std::vector<std::size_t> &keep) {
  try {
    return polyef::CoordinateSplit::keep_only(dim, keep);
  } catch (const std::logic_error &e) {
    throw UsageError(e.what());
  }
}

struct Options {
  std::string input;
  std::string output;
  bool quiet = false;

  std::string to;
  std::vector<std::size_t> keep;
  std::string map_file;
  std::string extension, target;
  std::vector<std::size_t> split_keep;
  bool all_definitions = false;
  bool affine = false;
  std::string query;
  std::vector<std::string> minimize, maximize, alpha;
  long long index = -1;
  std::string fixture_name;
  bool all_fixtures = false;
  std::string dir;
};

int cmd_convert(const Options &o) {
  auto p = polyef::io::polyhedron_from_json(load_json(o.input));
  if (o.to == "h") {
    polyef::HRep h = polyef::v_to_h(p.v());
    Output(o.output).write(polyef::io::polyhedron_json(p.ambient_dim(), &h, nullptr));
  } else {
    polyef::VRep v = polyef::h_to_v(p.h());
    Output(o.output).write(polyef::io::polyhedron_json(p.ambient_dim(), nullptr, &v));
  }
  return 0;
}

int cmd_project(const Options &o) {
  auto p = polyef::io::polyhedron_from_json(load_json(o.input));
  auto split = split_for(p.ambient_dim(), o.keep);
  polyef::HRep h = polyef::project_coords(p.h(), split);
  if (h.dim == 0)
    throw UsageError("--keep must name at least one coordinate");
  Output(o.output).write(polyef::io::polyhedron_json(h.dim, &h, nullptr));
  return 0;
}

int cmd_image(const Options &o) {
  auto p = polyef::io::polyhedron_from_json(load_json(o.input));
  auto map = polyef::io::affine_map_from_json(load_json(o.map_file));
  auto img = polyef::image(p, map);
  Output(o.output).write(
      polyef::io::polyhedron_json(img.ambient_dim(), &img.h(), &img.v()));
  return 0;
}

int cmd_check_ef(const Options &o) {
  auto ext = polyef::io::polyhedron_from_json(load_json(o.extension));
  auto target = polyef::io::polyhedron_from_json(load_json(o.target));
  const bool have_split = !o.split_keep.empty();
  const bool have_map = !o.map_file.empty();
  if (!have_split && !have_map)
    throw UsageError("check-ef needs --split-keep and/or --map");
  if (o.all_definitions && !have_split)
    throw UsageError("--all-definitions needs --split-keep");

  Json report{{"standard", nullptr}, {"iff", nullptr}, {"map", nullptr},
              {"sizes", nullptr}};
  std::optional<bool> standard, iff, map_holds;

  if (have_split) {
    auto split = split_for(ext.ambient_dim(), o.split_keep);
    auto s = polyef::check_ef_standard(ext.h(), target, split);
    auto i = polyef::check_ef_iff(ext.h(), target, split);
    report["standard"] = polyef::io::to_json(s);
    report["iff"] = polyef::io::to_json(i);
    standard = s.holds;
    iff = i.holds;
  }

  std::optional<polyef::AffineMap> map;
  std::string map_source;
  if (have_map) {
    map = polyef::io::affine_map_from_json(load_json(o.map_file));
    map_source = "given";
  } else if (o.all_definitions) {
    map = polyef::synthesize_linear_map(ext, target);
    map_source = map ? "synthesized" : "none found";
  }
  if (map) {
    auto m = polyef::check_ef_map(ext, target, *map, o.affine);
    Json mj = polyef::io::to_json(m);
    mj["source"] = map_source;
    mj["map"] = polyef::io::to_json(*map);
    report["map"] = std::move(mj);
    map_holds = m.holds;
  } else if (o.all_definitions) {
    report["map"] = Json{{"holds", nullptr}, {"source", map_source}};
    map_holds = false;
  }
  report["sizes"] =
      polyef::io::to_json(polyef::lemma9_size_report(ext.h(), target.h()));

  std::string query = o.query;
  if (query.empty())
    query = o.all_definitions ? "all" : (have_map ? "map" : "standard");
  std::optional<bool> verdict;
  if (query == "standard")
    verdict = standard;
  else if (query == "iff")
    verdict = iff;
  else if (query == "map")
    verdict = map_holds;
  else
    verdict = standard.value_or(true) && iff.value_or(true) &&
              map_holds.value_or(true);
  if (!verdict)
    throw UsageError("--query " + query + " was not computed");
  report["query"] = query;
  Output(o.output).write(report);
  return *verdict ? 0 : 1;
}

int cmd_lp(const Options &o) {
  auto p = polyef::io::polyhedron_from_json(load_json(o.input));
  if (o.minimize.empty() == o.maximize.empty())
    throw UsageError("lp needs exactly one of --min or --max");
  const bool maximize = !o.maximize.empty();
  polyef::RVector objective = parse_list(maximize ? o.maximize : o.minimize);
  if (objective.size() != p.ambient_dim())
    throw polyef::DimensionMismatch("objective length differs from dimension");
  auto out = polyef::solve({objective,
                            maximize ? polyef::Sense::maximize
                                     : polyef::Sense::minimize,
                            p.h()});
  Json j{{"sense", maximize ? "maximize" : "minimize"},
         {"objective", polyef::io::to_json(objective)}};
  j.update(polyef::io::to_json(out));
  Output(o.output).write(j);
  return out.status == polyef::LpStatus::optimal ? 0 : 1;
}

int cmd_reduce(const Options &o) {
  auto inst = polyef::io::reduction_instance_from_json(load_json(o.input));
  if (!o.alpha.empty()) {
    inst.alpha = parse_list(o.alpha);
    inst.validate();
  }
  Json report{{"alpha", polyef::io::to_json(inst.alpha)},
              {"graph", polyef::io::to_json(inst.graph)}};
  auto two = polyef::two_step_solve(inst.Y, inst.graph, inst.alpha);
  report["two_step"] = polyef::io::to_json(two);
  bool agree = true;
  if (inst.X) {
    auto eq = polyef::verify_equivalence(inst);
    report["equivalence"] = polyef::io::to_json(eq);
    auto corr = polyef::correspondence_report(*inst.X, inst.Y, inst.graph);
    report["redundancy"] = Json{{"holds", corr.redundant},
                                {"interpretation",
                                 polyef::kRedundancyInterpretation}};
    report["correspondence"] = polyef::io::to_json(corr);
    agree = eq.values_equal &&
            (eq.lp0.status != polyef::LpStatus::optimal || eq.retrieved_optimal);
  }
  report["legs_agree"] = agree;
  Output(o.output).write(report);
  return agree ? 0 : 1;
}

int cmd_redundancy(const Options &o) {
  auto p = polyef::io::polyhedron_from_json(load_json(o.input));
  const polyef::HRep &h = p.h();
  if (o.index >= 0) {
    auto idx = static_cast<std::size_t>(o.index);
    if (idx >= h.inequalities.size())
      throw UsageError("--index out of range");
    Output(o.output).write(
        Json{{"index", idx}, {"redundant", polyef::is_redundant(h, idx)}});
    return 0;
  }
  polyef::HRep r = polyef::remove_redundancy(h);
  Json j = polyef::io::polyhedron_json(r.dim, &r, nullptr);
  j["counts"] = Json{{"inequalities", r.inequalities.size()},
                     {"equalities", r.equalities.size()},
                     {"size", polyef::inequality_size(r)}};
  Output(o.output).write(j);
  return 0;
}

int cmd_dimension(const Options &o) {
  auto p = polyef::io::polyhedron_from_json(load_json(o.input));
  const int d = polyef::dimension(p);
  Output(o.output).write(Json{{"ambient_dim", p.ambient_dim()},
                              {"dimension", d},
                              {"empty", d < 0},
                              {"bounded", polyef::is_bounded(p)}});
  return 0;
}

int cmd_fixtures_list(const Options &o) {
  std::string text;
  for (const auto &f : polyef::fixtures())
    text += std::string(f.name) + "\n";
  Output(o.output).write(text);
  return 0;
}

int cmd_fixtures_export(const Options &o) {
  if (o.all_fixtures) {
    if (o.dir.empty())
      throw UsageError("export --all needs --dir");
    fs::create_directories(o.dir);
    for (const auto &f : polyef::fixtures())
      Output((fs::path(o.dir) / (std::string(f.name) + ".json")).string())
          .write(std::string(f.payload) + "\n");
    return 0;
  }
  auto payload = polyef::find_fixture(o.fixture_name);
  if (!payload)
    throw UsageError("unknown fixture '" + o.fixture_name + "'");
  Output(o.output).write(std::string(*payload) + "\n");
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact polyhedral toolkit for extended-formulation checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-i,--input", o.input, "Input JSON file or fixture name");
  app.add_option("-o,--output", o.output, "Output file (default: stdout)");
  app.add_flag("--quiet", o.quiet, "Suppress the version banner");
  app.set_version_flag("--version", kVersion);

  std::function<int()> action;

  auto *convert = app.add_subcommand("convert", "Convert between H- and V-representation");
  convert->add_option("--to", o.to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"h", "v"}));
  convert->callback([&] { action = [&] { return cmd_convert(o); }; });

  auto *project = app.add_subcommand("project", "Fourier-Motzkin projection onto coordinates");
  project->add_option("--keep", o.keep, "Kept coordinate indices (0-based)")
      ->required()
      ->delimiter(',');
  project->callback([&] { action = [&] { return cmd_project(o); }; });

  auto *img = app.add_subcommand("image", "Image under an affine map");
  img->add_option("--map", o.map_file, "Affine map JSON")->required();
  img->callback([&] { action = [&] { return cmd_image(o); }; });

  auto *check = app.add_subcommand("check-ef", "Decide the extended-formulation definitions");
  check->add_option("--extension", o.extension, "Extension polyhedron")->required();
  check->add_option("--target", o.target, "Target polyhedron")->required();
  check->add_option("--split-keep", o.split_keep,
                    "Extension coordinates forming the target space")
      ->delimiter(',');
  check->add_option("--map", o.map_file, "Linear map from extension to target space");
  check->add_flag("--affine", o.affine, "Allow a nonzero map offset");
  check->add_flag("--all-definitions", o.all_definitions,
                  "Decide every definition (synthesizing a map if none is given)");
  check->add_option("--query", o.query, "Definition deciding the exit code")
      ->check(CLI::IsMember({"standard", "iff", "map", "all"}));
  check->callback([&] { action = [&] { return cmd_check_ef(o); }; });

  auto *lp = app.add_subcommand("lp", "Exact linear program over a polyhedron");
  lp->add_option("--min", o.minimize, "Objective to minimize")->delimiter(',');
  lp->add_option("--max", o.maximize, "Objective to maximize")->delimiter(',');
  lp->callback([&] { action = [&] { return cmd_lp(o); }; });

  auto *reduce = app.add_subcommand("reduce", "Solve through an affine coupling graph");
  reduce->add_option("--alpha", o.alpha, "Override the objective")->delimiter(',');
  reduce->callback([&] { action = [&] { return cmd_reduce(o); }; });

  auto *red = app.add_subcommand("redundancy", "Irredundant form or single redundancy test");
  red->add_option("--index", o.index, "Test only this inequality");
  red->callback([&] { action = [&] { return cmd_redundancy(o); }; });

  auto *dim = app.add_subcommand("dimension", "Dimension and boundedness");
  dim->callback([&] { action = [&] { return cmd_dimension(o); }; });

  auto *fix = app.add_subcommand("fixtures", "Bundled example fixtures");
  fix->require_subcommand(1);
  auto *fix_list = fix->add_subcommand("list", "List fixture names");
  fix_list->callback([&] { action = [&] { return cmd_fixtures_list(o); }; });
  auto *fix_export = fix->add_subcommand("export", "Write fixture JSON");
  fix_export->add_option("name", o.fixture_name, "Fixture name");
  fix_export->add_flag("--all", o.all_fixtures, "Export every fixture");
  fix_export->add_option("--dir", o.dir, "Directory for --all");
  fix_export->callback([&] { action = [&] { return cmd_fixtures_export(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  if (!o.quiet)
    std::cerr << kVersion << "\n";
  if (o.input.empty() && !check->parsed() && !fix->parsed()) {
    std::cerr << "error: --input is required\n";
    return 2;
  }
  try {
    return action();
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
