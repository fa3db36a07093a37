// Command-line front door: ingest groupoid/graph/system descriptions, run
// checks, arithmetic, representations and verdicts; emit human-readable text
// or machine-readable result records.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "gpd/catalogue.hpp"
#include "gpd/check.hpp"
#include "gpd/io.hpp"
#include "gpd/rep.hpp"

namespace {

using namespace gpd;

struct Options {
  bool json = false;
  bool floats = false;
};

std::string render_coeff(const GaussianRational& c, const Options& opt) {
  if (!opt.floats) return c.str();
  std::ostringstream os;
  os << std::setprecision(12) << c.to_double_re();
  if (sgn(c.im) != 0) os << (c.to_double_im() < 0 ? "" : "+") << std::setprecision(12)
                         << c.to_double_im() << "i";
  return os.str();
}

void print_element(const AlgebraElement& f, const Options& opt, std::ostream& os) {
  auto support = f.support();
  if (support.empty()) {
    os << "0\n";
    return;
  }
  for (Mor m : support)
    os << f.groupoid()->label(m) << ": " << render_coeff(f.coeff(m), opt) << "\n";
}

void print_matrix(const QiMatrix& m, const Options& opt, std::ostream& os) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << render_coeff(m.at(i, j), opt);
    os << "]\n";
  }
}

struct RecordEmitter {
  ResultRecord record;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit RecordEmitter(std::string command) { record.command = std::move(command); }

  void finish(const Options& opt, const std::string& text) {
    record.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (opt.json)
      std::cout << serialize_result(record).dump(2) << "\n";
    else
      std::cout << text;
  }
};

GroupoidRef load_groupoid(const std::string& path) {
  return std::make_shared<const FiniteGroupoid>(parse_groupoid(load_json_file(path)));
}

GraphRef load_graph(const std::string& path) {
  return std::make_shared<const DirectedGraph>(parse_graph(load_json_file(path)));
}

std::string unit_set_text(const FiniteGroupoid& g, const UnitSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i)
    out += (i ? ", " : "") + g.label(g.unit_morphism(s.members[i]));
  return out + "}";
}

int run_check(const std::string& input, const std::string& property, const Options& opt) {
  RecordEmitter emit("check --input " + input + " --property " + property);
  GroupoidRef g = load_groupoid(input);
  std::ostringstream text;
  if (property == "effective") {
    auto r = is_effective(*g);
    emit.record.verdicts["effective"] = r.value;
    text << "effective: " << (r.value ? "true" : "false");
    if (r.witness) {
      emit.record.witnesses["isotropy"] = g->label(*r.witness);
      text << "  (non-unit isotropy at " << g->label(*r.witness) << ")";
    }
    text << "\n";
  } else if (property == "principal") {
    bool v = is_topologically_principal(*g);
    emit.record.verdicts["topologically_principal"] = v;
    text << "topologically principal: " << (v ? "true" : "false") << "\n";
  } else if (property == "minimal") {
    auto r = is_minimal(*g);
    emit.record.verdicts["minimal"] = r.value;
    text << "minimal: " << (r.value ? "true" : "false");
    if (r.witness) {
      emit.record.witnesses["invariant_set"] = unit_set_text(*g, *r.witness);
      text << "  (invariant unit set " << unit_set_text(*g, *r.witness) << ")";
    }
    text << "\n";
  } else if (property == "simple") {
    auto s = is_simple_algebra(g);
    auto report = criterion_report(*g);
    emit.record.verdicts["simple"] = s.simple;
    emit.record.verdicts["effective"] = report.effective;
    emit.record.verdicts["minimal"] = report.minimal;
    emit.record.verdicts["center_dimension"] =
        static_cast<long>(s.evidence.center_dimension);
    emit.record.verdicts["radical_dimension"] =
        static_cast<long>(s.evidence.radical_dimension);
    text << "simple: " << (s.simple ? "true" : "false") << "\n";
    text << "  center dimension: " << s.evidence.center_dimension
         << ", radical dimension: " << s.evidence.radical_dimension << "\n";
    if (report.isotropy_witness) {
      emit.record.witnesses["isotropy"] = g->label(*report.isotropy_witness);
      text << "  non-unit isotropy at " << g->label(*report.isotropy_witness) << "\n";
    }
    if (report.invariant_witness) {
      emit.record.witnesses["invariant_set"] = unit_set_text(*g, *report.invariant_witness);
      text << "  invariant unit set " << unit_set_text(*g, *report.invariant_witness) << "\n";
    }
    if (s.evidence.proper_ideal) {
      emit.record.witnesses["proper_ideal_dimension"] =
          std::to_string(s.evidence.proper_ideal->dimension());
      text << "  proper ideal of dimension " << s.evidence.proper_ideal->dimension() << "\n";
    }
  } else {
    throw CLI::ValidationError("--property must be effective|principal|minimal|simple");
  }
  emit.finish(opt, text.str());
  return 0;
}

int run_mul(const std::string& input, const std::string& lhs, const std::string& rhs,
            const Options& opt) {
  RecordEmitter emit("mul --input " + input + " --lhs " + lhs + " --rhs " + rhs);
  GroupoidRef g = load_groupoid(input);
  AlgebraElement a = parse_element(load_json_file(lhs), g);
  AlgebraElement b = parse_element(load_json_file(rhs), g);
  AlgebraElement c = convolve(a, b);
  emit.record.verdicts["product"] = serialize_element(c);
  std::ostringstream text;
  print_element(c, opt, text);
  emit.finish(opt, text.str());
  return 0;
}

int run_star(const std::string& input, const std::string& lhs, const Options& opt) {
  RecordEmitter emit("star --input " + input + " --lhs " + lhs);
  GroupoidRef g = load_groupoid(input);
  AlgebraElement a = parse_element(load_json_file(lhs), g);
  AlgebraElement c = involute(a);
  emit.record.verdicts["involution"] = serialize_element(c);
  std::ostringstream text;
  print_element(c, opt, text);
  emit.finish(opt, text.str());
  return 0;
}

int run_ideal(const std::string& input, const std::vector<std::string>& gen_paths,
              const Options& opt) {
  std::string cmd = "ideal --input " + input;
  for (const auto& p : gen_paths) cmd += " --gen " + p;
  RecordEmitter emit(cmd);
  GroupoidRef g = load_groupoid(input);
  std::vector<AlgebraElement> gens;
  for (const auto& p : gen_paths) gens.push_back(parse_element(load_json_file(p), g));
  IdealBasis ideal = ideal_generated_by(gens);
  emit.record.verdicts["dimension"] = static_cast<long>(ideal.dimension());
  emit.record.verdicts["full"] = ideal.dimension() == g->size();
  std::ostringstream text;
  text << "ideal dimension: " << ideal.dimension() << " of " << g->size() << "\n";
  if (g->unit_count() <= 16) {
    auto v = contains_unit_indicator(ideal);
    emit.record.verdicts["contains_unit_indicator"] = v.has_value();
    if (v) {
      emit.record.witnesses["unit_set"] = unit_set_text(*g, *v);
      text << "contains unit indicator on " << unit_set_text(*g, *v) << "\n";
    } else {
      text << "contains no unit indicator\n";
    }
  }
  emit.finish(opt, text.str());
  return 0;
}

int run_rep(const std::string& input, const std::string& kind, int unit,
            const std::string& element_path, const Options& opt) {
  RecordEmitter emit("rep --input " + input + " --kind " + kind);
  GroupoidRef g = load_groupoid(input);
  Representation rep;
  if (kind == "free") {
    std::vector<int> all_units(g->unit_count());
    for (std::size_t u = 0; u < g->unit_count(); ++u) all_units[u] = static_cast<int>(u);
    rep = rep_free_module(g, unit_set(all_units));
  } else if (kind == "orbit") {
    rep = rep_orbit(g, unit);
  } else if (kind == "regular") {
    rep = rep_regular(g, unit);
  } else if (kind == "augmentation") {
    rep = rep_augmentation(g);
  } else {
    throw CLI::ValidationError("--kind must be free|orbit|regular|augmentation");
  }
  std::ostringstream text;
  text << "dimension: " << rep.dimension << "\nbasis:";
  for (const auto& l : rep.basis_labels) text << " " << l;
  text << "\n";
  emit.record.verdicts["dimension"] = static_cast<long>(rep.dimension);
  std::size_t kdim = kernel_dimension(rep);
  emit.record.verdicts["kernel_dimension"] = static_cast<long>(kdim);
  if (!element_path.empty()) {
    AlgebraElement f = parse_element(load_json_file(element_path), g);
    text << "image of element:\n";
    print_matrix(rep.apply(f), opt, text);
  } else {
    for (Mor m = 0; m < static_cast<Mor>(g->size()); ++m) {
      text << "image of " << g->label(m) << ":\n";
      print_matrix(rep.apply_delta(m), opt, text);
    }
  }
  text << "kernel dimension: " << kdim << "\n";
  emit.finish(opt, text.str());
  return 0;
}

int run_graph(const std::string& input, const std::string& action, const std::string& lhs,
              const std::string& rhs, const Options& opt) {
  RecordEmitter emit("graph --input " + input + " --action " + action);
  GraphRef g = load_graph(input);
  std::ostringstream text;
  if (action == "check") {
    auto l = condition_L(*g);
    auto c = is_cofinal(*g);
    emit.record.verdicts["every_cycle_has_exit"] = l.value;
    emit.record.verdicts["cofinal"] = c.value;
    text << "every cycle has an exit: " << (l.value ? "true" : "false") << "\n";
    if (l.witness) {
      std::string cyc;
      for (int e : l.witness->edges) cyc += (cyc.empty() ? "" : ".") + g->edge(e).name;
      emit.record.witnesses["exitless_cycle"] = cyc;
      text << "  exitless cycle: " << cyc << "\n";
    }
    text << "cofinal: " << (c.value ? "true" : "false") << "\n";
    if (c.witness) {
      emit.record.witnesses["unreachable"] = g->vertex_name(c.witness->first) +
                                             " cannot reach " +
                                             g->vertex_name(c.witness->second);
      text << "  " << g->vertex_name(c.witness->first) << " cannot reach "
           << g->vertex_name(c.witness->second) << "\n";
    }
  } else if (action == "verdict") {
    auto r = graph_simplicity_verdict(*g);
    emit.record.verdicts["simple"] = r.simple;
    emit.record.verdicts["every_cycle_has_exit"] = r.condition_l.value;
    emit.record.verdicts["cofinal"] = r.cofinal.value;
    text << (r.simple ? "Simple" : "NotSimple") << "\n";
    if (r.condition_l.witness) {
      std::string cyc;
      for (int e : r.condition_l.witness->edges)
        cyc += (cyc.empty() ? "" : ".") + g->edge(e).name;
      emit.record.witnesses["exitless_cycle"] = cyc;
      text << "  exitless cycle: " << cyc << "\n";
    }
    if (r.cofinal.witness) {
      emit.record.witnesses["unreachable"] = g->vertex_name(r.cofinal.witness->first) +
                                             " cannot reach " +
                                             g->vertex_name(r.cofinal.witness->second);
      text << "  " << g->vertex_name(r.cofinal.witness->first) << " cannot reach "
           << g->vertex_name(r.cofinal.witness->second) << "\n";
    }
  } else if (action == "mul") {
    if (lhs.empty() || rhs.empty())
      throw CLI::ValidationError("graph mul needs --lhs and --rhs element files");
    GraphAlgebraElement a = parse_graph_element(load_json_file(lhs), g);
    GraphAlgebraElement b = parse_graph_element(load_json_file(rhs), g);
    GraphAlgebraElement c = multiply(a, b);
    emit.record.verdicts["product"] = serialize_graph_element(c);
    if (c.has_no_terms()) text << "0\n";
    for (const auto& [coeff, t] : c.terms()) {
      text << render_coeff(coeff, opt) << " * Z(" << t.mu.str(*g) << ", " << t.nu.str(*g)
           << ")\n";
    }
  } else {
    throw CLI::ValidationError("--action must be check|mul|verdict");
  }
  emit.finish(opt, text.str());
  return 0;
}

int run_ev(const std::string& input, const std::string& action, const Options& opt) {
  RecordEmitter emit("ev --input " + input + " --action " + action);
  DynamicalSystem s = parse_system(load_json_file(input));
  std::ostringstream text;
  if (action == "ore") {
    if (s.shift_graph) {
      emit.record.verdicts["ore"] = true;
      text << "ore: true (the naturals embed in the integers)\n";
    } else {
      auto r = is_ore(s.action->monoid);
      emit.record.verdicts["ore"] = r.value;
      text << "ore: " << (r.value ? "true" : "false") << "\n";
      if (!r.value) {
        emit.record.witnesses["failure"] = r.witness;
        text << "  " << r.witness << "\n";
      }
    }
  } else if (action == "groupoid") {
    if (!s.action)
      throw PreconditionError("only group actions materialize as finite groupoids");
    FiniteGroupoid g = transformation_groupoid(*s.action);
    emit.record.verdicts["groupoid"] = serialize_groupoid(g);
    text << serialize_groupoid(g).dump(2) << "\n";
  } else if (action == "crosscheck") {
    auto r = freeness_principality_crosscheck(s);
    emit.record.verdicts["dynamical_side"] = r.dynamical_side;
    emit.record.verdicts["groupoid_side"] = r.groupoid_side;
    emit.record.verdicts["agree"] = r.agree;
    text << "dynamically free: " << (r.dynamical_side ? "true" : "false") << "\n"
         << "groupoid topologically principal: " << (r.groupoid_side ? "true" : "false")
         << "\n"
         << (r.agree ? "AGREE" : "FAILURE") << " (" << r.detail << ")\n";
  } else {
    throw CLI::ValidationError("--action must be ore|groupoid|crosscheck");
  }
  emit.finish(opt, text.str());
  return 0;
}

int run_catalogue(const std::string& emit_dir, const Options& opt) {
  RecordEmitter emit("catalogue");
  std::ostringstream text;
  text << "groupoids (" << groupoid_catalogue().size() << "):\n";
  Json names = Json::array();
  for (const auto& e : groupoid_catalogue()) {
    text << "  " << e.name << "  [" << e.family << "]  morphisms=" << e.groupoid->size()
         << " effective=" << (e.expect_effective ? "yes" : "no")
         << " minimal=" << (e.expect_minimal ? "yes" : "no")
         << " simple=" << (e.expect_simple ? "yes" : "no") << "\n";
    names.push_back(e.name);
  }
  emit.record.verdicts["groupoids"] = names;
  text << "graphs (" << graph_catalogue().size() << "):\n";
  Json gnames = Json::array();
  for (const auto& e : graph_catalogue()) {
    text << "  " << e.name << "  vertices=" << e.graph->vertex_count()
         << " edges=" << e.graph->edge_count()
         << " exit-condition=" << (e.expect_condition_l ? "yes" : "no")
         << " cofinal=" << (e.expect_cofinal ? "yes" : "no")
         << " simple=" << (e.expect_simple ? "yes" : "no") << "\n";
    gnames.push_back(e.name);
  }
  emit.record.verdicts["graphs"] = gnames;
  text << "systems (" << action_catalogue().size() << " actions + "
       << graph_catalogue().size() << " shifts)\n";

  if (!emit_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(emit_dir);
    int written = 0;
    for (const auto& e : groupoid_catalogue()) {
      std::ofstream out(fs::path(emit_dir) / ("groupoid-" + e.name + ".json"));
      out << serialize_groupoid(*e.groupoid).dump(2) << "\n";
      ++written;
    }
    for (const auto& e : graph_catalogue()) {
      std::ofstream out(fs::path(emit_dir) / ("graph-" + e.name + ".json"));
      out << serialize_graph(*e.graph).dump(2) << "\n";
      ++written;
      DynamicalSystem s = deaconu_renault(*e.graph);
      std::ofstream sout(fs::path(emit_dir) / ("system-shift-" + e.name + ".json"));
      sout << serialize_system(s).dump(2) << "\n";
      ++written;
    }
    for (const auto& e : action_catalogue()) {
      DynamicalSystem s;
      s.action = e.action;
      std::ofstream out(fs::path(emit_dir) / ("system-" + e.name + ".json"));
      out << serialize_system(s).dump(2) << "\n";
      ++written;
    }
    text << "wrote " << written << " files to " << emit_dir << "\n";
    emit.record.verdicts["files_written"] = written;
  }
  emit.finish(opt, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the convolution algebras of finite groupoids,"
               " boundary-path graph algebras, and their simplicity checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit a machine-readable result record");
  app.add_flag("--float", opt.floats, "render numbers as 12-digit decimals");

  std::string input, property = "simple", lhs, rhs, kind = "free", element, action = "check";
  std::vector<std::string> gens;
  int unit = 0;
  const char* env_dir = std::getenv("GPD_OUTPUT_DIR");
  std::string emit_dir = env_dir ? env_dir : "";

  auto* check = app.add_subcommand("check", "structural criteria and simplicity");
  check->add_option("--input", input)->required();
  check->add_option("--property", property, "effective|principal|minimal|simple");

  auto* mul = app.add_subcommand("mul", "convolution product of two elements");
  mul->add_option("--input", input)->required();
  mul->add_option("--lhs", lhs)->required();
  mul->add_option("--rhs", rhs)->required();

  auto* star = app.add_subcommand("star", "involution of an element");
  star->add_option("--input", input)->required();
  star->add_option("--lhs", lhs)->required();

  auto* ideal = app.add_subcommand("ideal", "two-sided ideal generated by elements");
  ideal->add_option("--input", input)->required();
  ideal->add_option("--gen", gens, "generator element file (repeatable)")->required();

  auto* rep = app.add_subcommand("rep", "matrix representations");
  rep->add_option("--input", input)->required();
  rep->add_option("--kind", kind, "free|orbit|regular|augmentation");
  rep->add_option("--unit", unit, "base unit index for orbit/regular");
  rep->add_option("--element", element, "apply to this element instead of every delta");

  auto* graph = app.add_subcommand("graph", "boundary-path graph algebra");
  graph->add_option("--input", input)->required();
  graph->add_option("--action", action, "check|mul|verdict");
  graph->add_option("--lhs", lhs);
  graph->add_option("--rhs", rhs);

  auto* ev = app.add_subcommand("ev", "dynamical systems");
  ev->add_option("--input", input)->required();
  ev->add_option("--action", action, "ore|groupoid|crosscheck");

  auto* cat = app.add_subcommand("catalogue", "list or emit the built-in examples");
  cat->add_option("--emit", emit_dir, "write every catalogue file to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return static_cast<int>(gpd::ExitCode::usage);
  }

  try {
    if (check->parsed()) return run_check(input, property, opt);
    if (mul->parsed()) return run_mul(input, lhs, rhs, opt);
    if (star->parsed()) return run_star(input, lhs, opt);
    if (ideal->parsed()) return run_ideal(input, gens, opt);
    if (rep->parsed()) return run_rep(input, kind, unit, element, opt);
    if (graph->parsed()) return run_graph(input, action, lhs, rhs, opt);
    if (ev->parsed()) return run_ev(input, action, opt);
    if (cat->parsed()) return run_catalogue(emit_dir, opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(gpd::ExitCode::usage);
  } catch (const gpd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gpd::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(gpd::ExitCode::io_error);
  }
  return static_cast<int>(gpd::ExitCode::usage);
}
