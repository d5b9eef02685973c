#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "openmarkov/blackbox.hpp"
#include "openmarkov/coarse.hpp"
#include "openmarkov/dsl.hpp"
#include "openmarkov/dynamics.hpp"
#include "openmarkov/error.hpp"
#include "openmarkov/laws.hpp"

namespace openmarkov::cli {

namespace {

using nlohmann::json;


/// Bad command-line value: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProcessDoc load_process(const std::string& path) { return parse_process(read_file(path)); }

std::string stem(const ProcessDoc& doc) { return doc.name; }

std::string join(const FinSet& set) {
  std::string out;
  for (std::size_t k = 0; k < set.size(); ++k) out += (k ? ", " : "") + set[k];
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + text + "' for " + what);
  }
}

/// label=value pairs over `set`; unnamed labels are zero.
Eigen::VectorXd assignments(const std::vector<std::string>& items, const FinSet& set,
                            const std::string& what) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(set.size()));
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError(what + " entries look like label=value");
    const auto index = set.find(item.substr(0, eq));
    if (!index) throw UsageError("unknown label '" + item.substr(0, eq) + "' in " + what);
    v(static_cast<Eigen::Index>(*index)) = parse_double(item.substr(eq + 1), what);
  }
  return v;
}

Schedule schedule_from_json(const json& node, const FinSet& set) {
  if (node.is_object() && node.contains("values")) {
    std::vector<double> breakpoints = node.value("breakpoints", std::vector<double>{});
    std::vector<Eigen::VectorXd> values;
    for (const auto& entry : node.at("values")) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(set.size()));
      for (const auto& [label, value] : entry.items()) {
        const auto index = set.find(label);
        if (!index) throw UsageError("unknown label '" + label + "' in flow schedule");
        v(static_cast<Eigen::Index>(*index)) = value.get<double>();
      }
      values.push_back(std::move(v));
    }
    return Schedule(std::move(breakpoints), std::move(values));
  }
  throw UsageError("flow schedule needs a \"values\" array");
}

StochasticSection parse_section(const std::string& choice, const FinMap& p) {
  if (choice == "uniform") return uniform_section(p);
  if (choice.rfind("random:", 0) == 0) {
    return random_section(p, static_cast<std::uint64_t>(parse_double(choice.substr(7), "--section")));
  }
  if (choice.rfind("file:", 0) == 0) {
    const json rows = json::parse(read_file(choice.substr(5)));
    RatMatrix s(p.dom().size(), p.cod().size());
    if (!rows.is_array() || rows.size() != s.rows()) {
      throw UsageError("section file must hold a " + std::to_string(s.rows()) + "-row matrix");
    }
    for (std::size_t r = 0; r < s.rows(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != s.cols()) {
        throw UsageError("section row " + std::to_string(r) + " has the wrong length");
      }
      for (std::size_t c = 0; c < s.cols(); ++c) {
        const json& cell = rows[r][c];
        s(r, c) = cell.is_string() ? parse_rational(cell.get<std::string>())
                                   : parse_rational(cell.dump());
      }
    }
    return StochasticSection(p, std::move(s));
  }
  throw UsageError("--section expects uniform, random:SEED or file:PATH");
}

json relation_json(const LinRel& rel) {
  json basis = json::array();
  for (std::size_t r = 0; r < rel.graph().dim(); ++r) {
    json row = json::array();
    for (const auto& x : rel.graph().basis().row(r)) row.push_back(to_string(x));
    basis.push_back(std::move(row));
  }
  return json{{"basis", basis}, {"src_dim", rel.src_dim()}, {"tgt_dim", rel.tgt_dim()}};
}

std::string dot(const ProcessDoc& doc) {
  std::ostringstream out;
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  out << "digraph " << quote(doc.name) << " {\n  rankdir=LR;\n";
  for (const auto& s : doc.states) out << "  " << quote(s) << " [shape=circle];\n";
  for (const auto& e : doc.edges) {
    out << "  " << quote(e.src) << " -> " << quote(e.dst) << " [label=" << quote(to_string(e.rate))
        << "];\n";
  }
  for (const auto& [label, state] : doc.inputs) {
    out << "  " << quote("in:" + label) << " [shape=plaintext,label=" << quote(label) << "];\n  "
        << quote("in:" + label) << " -> " << quote(state) << " [style=dashed];\n";
  }
  for (const auto& [label, state] : doc.outputs) {
    out << "  " << quote("out:" + label) << " [shape=plaintext,label=" << quote(label) << "];\n  "
        << quote(state) << " -> " << quote("out:" + label) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open Markov processes: composition, coarse-graining and black-boxing", "openmarkov"};
  app.require_subcommand(1);

  std::string file_a, file_b, map_file, section = "uniform", source_file, target_file, flows_file;
  std::string output_file;
  double t_end = 1.0, dt = 1e-3;
  std::size_t every = 1;
  std::vector<std::string> init, inflow, outflow;
  std::uint64_t seed = 7;
  std::size_t iters = 100;
  std::string what;

  auto* validate = app.add_subcommand("validate", "Parse a process and check its generator");
  validate->add_option("file", file_a, ".omp process file")->required();

  auto* compose = app.add_subcommand("compose", "Compose two open processes along T");
  compose->add_option("first", file_a)->required();
  compose->add_option("second", file_b)->required();
  compose->add_option("-o,--output", output_file, "Write the result here instead of stdout");

  auto* tensor = app.add_subcommand("tensor", "Disjoint union of two open processes");
  tensor->add_option("first", file_a)->required();
  tensor->add_option("second", file_b)->required();
  tensor->add_option("-o,--output", output_file, "Write the result here instead of stdout");

  auto* coarsen = app.add_subcommand("coarsen", "Coarse-grain a generator along p");
  coarsen->add_option("file", file_a)->required();
  coarsen->add_option("--map", map_file, ".map file with a p table")->required();
  coarsen->add_option("--section", section, "uniform | random:SEED | file:PATH");

  auto* lumpable = app.add_subcommand("lumpable", "Decide lumpability along p");
  lumpable->add_option("file", file_a)->required();
  lumpable->add_option("--map", map_file, ".map file with a p table")->required();

  auto* blackbox = app.add_subcommand("blackbox", "Steady-state boundary relation as JSON");
  blackbox->add_option("file", file_a)->required();

  auto* simulate = app.add_subcommand("simulate", "Integrate the open master equation (CSV)");
  simulate->add_option("file", file_a)->required();
  simulate->add_option("--t-end", t_end, "Final time")->check(CLI::NonNegativeNumber);
  simulate->add_option("--dt", dt, "Step size")->check(CLI::PositiveNumber);
  simulate->add_option("--every", every, "Print every k-th step")->check(CLI::PositiveNumber);
  simulate->add_option("--init", init, "state=probability (default: uniform)");
  simulate->add_option("--inflow", inflow, "input=rate, constant in time");
  simulate->add_option("--outflow", outflow, "output=rate, constant in time");
  simulate->add_option("--flows", flows_file, "JSON piecewise-constant schedules");

  auto* morph = app.add_subcommand("morphism-check", "Check a morphism of open processes");
  morph->add_option("map", map_file)->required();
  morph->add_option("--source", source_file)->required();
  morph->add_option("--target", target_file)->required();

  auto* check = app.add_subcommand("check", "Run the seeded law suites");
  check->add_option("what", what, "Only 'laws' is available")->required()->check(
      CLI::IsMember({"laws"}));
  check->add_option("--seed", seed);
  check->add_option("--iters", iters)->check(CLI::PositiveNumber);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering of a process");
  dot_cmd->add_option("file", file_a)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  auto emit = [&](const std::string& text) {
    if (output_file.empty()) {
      out << text;
      return;
    }
    std::ofstream file(output_file, std::ios::binary);
    if (!file) throw UsageError("cannot write " + output_file);
    file << text;
  };

  try {
    if (*validate) {
      const ProcessDoc doc = load_process(file_a);
      const OpenMarkov m = to_open_markov(doc);
      out << "process " << doc.name << ": " << m.states().size() << " states, "
          << m.inputs().size() << " inputs, " << m.outputs().size() << " outputs, "
          << doc.edges.size() << " edges\n";
      const bool ok = validate_infinitesimal_stochastic(m.generator());
      out << "infinitesimal stochastic: " << yes(ok) << "\n";
      return ok ? 0 : 1;
    }
    if (*compose || *tensor) {
      const ProcessDoc a = load_process(file_a);
      const ProcessDoc b = load_process(file_b);
      const OpenMarkov m = to_open_markov(a);
      const OpenMarkov n = to_open_markov(b);
      const OpenMarkov result = *compose ? compose_open(m, n) : tensor_open(m, n);
      emit(print(to_process_doc(stem(a) + (*compose ? "_" : "_x_") + stem(b), result)));
      return 0;
    }
    if (*coarsen || *lumpable) {
      const OpenMarkov m = to_open_markov(load_process(file_a));
      const MorphismDoc md = parse_morphism(read_file(map_file));
      const FinMap p = table_map(md.p, m.states(), table_image(md.p));
      if (*lumpable) {
        const bool ok = is_lumpable(m.generator(), p);
        out << "lumpable: " << yes(ok) << "\n";
        if (!ok) return 1;
        out << "states: " << join(p.cod()) << "\n";
        out << "generator: " << to_string(lumped_generator(m.generator(), p)) << "\n";
        return 0;
      }
      const StochasticSection s = parse_section(section, p);
      out << "states: " << join(p.cod()) << "\n";
      out << "section: " << to_string(s.matrix()) << "\n";
      out << "generator: " << to_string(coarse_grain(m.generator(), s)) << "\n";
      return 0;
    }
    if (*blackbox) {
      out << relation_json(black_box(to_open_markov(load_process(file_a)))).dump(2) << "\n";
      return 0;
    }
    if (*simulate) {
      const OpenMarkov m = to_open_markov(load_process(file_a));
      const auto nx = static_cast<Eigen::Index>(m.states().size());
      Eigen::VectorXd v0 = nx > 0 ? Eigen::VectorXd::Constant(nx, 1.0 / static_cast<double>(nx))
                                  : Eigen::VectorXd(0);
      if (!init.empty()) v0 = assignments(init, m.states(), "--init");
      FlowSpec flows{Schedule::constant(assignments(inflow, m.inputs(), "--inflow")),
                     Schedule::constant(assignments(outflow, m.outputs(), "--outflow"))};
      if (!flows_file.empty()) {
        if (!inflow.empty() || !outflow.empty()) {
          throw UsageError("--flows cannot be combined with --inflow/--outflow");
        }
        const json doc = json::parse(read_file(flows_file));
        if (doc.contains("inflow")) flows.inflow = schedule_from_json(doc["inflow"], m.inputs());
        if (doc.contains("outflow")) flows.outflow = schedule_from_json(doc["outflow"], m.outputs());
      }
      const Trajectory traj = integrate_master(m, flows, v0, t_end, dt);
      std::ostringstream csv;
      csv << std::setprecision(12) << "t";
      for (const auto& s : m.states()) csv << "," << s;
      csv << "\n";
      for (std::size_t k = 0; k < traj.times.size(); ++k) {
        if (k % every != 0 && k + 1 != traj.times.size()) continue;
        csv << traj.times[k];
        for (Eigen::Index i = 0; i < nx; ++i) csv << "," << traj.states[k](i);
        csv << "\n";
      }
      out << csv.str();
      return 0;
    }
    if (*morph) {
      const OpenMarkov source = to_open_markov(load_process(source_file));
      const OpenMarkov target = to_open_markov(load_process(target_file));
      const OpenMarkovMorphism m = to_morphism(parse_morphism(read_file(map_file)), source, target);
      const bool inputs = check_pullback_square(m.f, source.input_leg(), m.p, target.input_leg());
      const bool outputs = check_pullback_square(m.g, source.output_leg(), m.p, target.output_leg());
      const RatMatrix push = pushforward_matrix(m.p);
      const bool intertwines = push * source.generator() == target.generator() * push;
      out << "input square is a pullback: " << yes(inputs) << "\n";
      out << "output square is a pullback: " << yes(outputs) << "\n";
      out << "p_* H = H' p_*: " << yes(intertwines) << "\n";
      if (!(inputs && outputs && intertwines)) {
        out << "valid morphism: false\n";
        return 1;
      }
      out << "valid morphism: true\n";
      out << "black-box square: " << yes(check_blackbox_2morphism(m)) << "\n";
      return 0;
    }
    if (*check) {
      bool all = true;
      for (const LawResult& r : run_all_laws(seed, iters)) {
        out << (r.holds ? "PASS " : "FAIL ") << r.name << " (" << r.passed << "/" << r.total
            << ")\n";
        all = all && r.holds;
      }
      return all ? 0 : 1;
    }
    if (*dot_cmd) {
      out << dot(load_process(file_a));
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool parse_level = e.code() == ErrorCode::SyntaxError ||
                             e.code() == ErrorCode::SemanticError;
    return parse_level ? 2 : 1;
  }
  return 2;
}

}  // namespace openmarkov::cli
