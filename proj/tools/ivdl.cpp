#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ivc/dlogbuild.hpp"
#include "ivc/oracle.hpp"
#include "ivc/program.hpp"
#include "ivc/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitResourceLimit = 4;

ivc::BigInt parse_big(const std::string& text) {
  if (text.empty()) throw CLI::ValidationError("expected a non-negative integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw CLI::ValidationError("expected a non-negative integer, got '" + text + "'");
  }
  return ivc::BigInt{text};
}

ivc::ComputationSequence load_program(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ivc::Error("cannot open " + path);
  ivc::ComputationSequence seq = ivc::parse_program(in);
  auto violations = ivc::validate(seq);
  if (!violations.empty()) {
    throw ivc::ValidationError("instruction " + std::to_string(violations.front().index) + ": " +
                               violations.front().reason);
  }
  return seq;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ivc::Error("cannot write " + path);
  out << content;
}

std::string describe(const ivc::Instruction& ins) {
  std::string s{ivc::mnemonic(ins.op)};
  if (ivc::arity(ins.op) >= 1) s += " " + std::to_string(ins.j);
  if (ivc::arity(ins.op) == 2) s += " " + std::to_string(ins.k);
  return s;
}

// "1-4,9,12-13" -> sorted index list, 1-based, clamped to [1, limit].
std::vector<std::uint32_t> parse_range(const std::string& text, std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw ivc::Error("bad range '" + text + "'");
    std::size_t dash = part.find('-');
    std::uint32_t lo = 0, hi = 0;
    try {
      if (dash == std::string::npos) {
        lo = hi = static_cast<std::uint32_t>(std::stoul(part));
      } else {
        lo = static_cast<std::uint32_t>(std::stoul(part.substr(0, dash)));
        hi = static_cast<std::uint32_t>(std::stoul(part.substr(dash + 1)));
      }
    } catch (const std::exception&) {
      throw ivc::Error("bad range '" + text + "'");
    }
    if (lo < 1 || hi < lo || lo > limit) throw ivc::Error("bad range '" + text + "'");
    for (std::uint32_t i = lo; i <= hi && i <= limit; ++i) out.push_back(i);
  }
  if (out.empty()) throw ivc::Error("bad range '" + text + "'");
  return out;
}

std::map<std::uint32_t, std::string> load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ivc::Error("cannot open " + path);
  std::map<std::uint32_t, std::string> by_index;
  std::string name;
  std::uint32_t index = 0;
  while (in >> name >> index) {
    auto [it, fresh] = by_index.emplace(index, name);
    if (!fresh) it->second += "," + name;
  }
  return by_index;
}

struct SolveArgs {
  std::string a, b, p;
  std::string emit_path, labels_path;
  bool trace = false;
  bool json = false;
};

int cmd_solve(const SolveArgs& args) {
  ivc::DlogInstance inst = ivc::DlogInstance::make(parse_big(args.a), parse_big(args.b), parse_big(args.p));
  ivc::BuildPlan plan = ivc::build(inst);
  ivc::EvalResult result = ivc::evaluate(plan.sequence());
  if (!args.emit_path.empty()) {
    write_file(args.emit_path, ivc::serialize_program(plan.sequence()));
    std::string labels = args.labels_path.empty() ? args.emit_path + ".labels" : args.labels_path;
    write_file(labels, plan.sidecar_text());
  }
  if (args.trace) {
    for (std::uint32_t i = 1; i <= plan.sequence().length(); ++i) {
      std::cout << i << ": " << describe(plan.sequence().instructions[i - 1]) << " = "
                << result.value(i).to_string() << "\n";
    }
  }
  ivc::BigInt x = 0;
  for (char c : result.output) x = (x << 1) + (c == '1' ? 1 : 0);
  bool verified = ivc::pow_mod(inst.a, x, inst.p) == inst.b;
  const ivc::EvalMetrics& m = result.metrics;
  if (args.json) {
    nlohmann::json report{
        {"schema", 1},
        {"a", args.a},
        {"b", args.b},
        {"p", args.p},
        {"n", inst.n},
        {"x", verified ? nlohmann::json(x.str()) : nlohmann::json(nullptr)},
        {"output", result.output},
        {"verified", verified},
        {"length", m.length},
        {"bit_height", m.max_bit_height},
        {"max_components", m.max_components},
    };
    std::cout << report.dump() << "\n";
  } else if (verified) {
    std::cout << "x=" << x.str() << " output=" << result.output << " verified=true"
              << " length=" << m.length << " bit_height=" << m.max_bit_height
              << " max_components=" << m.max_components << "\n";
  } else {
    std::cout << "no solution output=" << result.output << " length=" << m.length
              << " bit_height=" << m.max_bit_height << " max_components=" << m.max_components
              << "\n";
  }
  return verified ? kExitOk : kExitNoSolution;
}

int cmd_build(const std::string& a, const std::string& b, const std::string& p,
              const std::string& out, std::string labels) {
  ivc::DlogInstance inst = ivc::DlogInstance::make(parse_big(a), parse_big(b), parse_big(p));
  ivc::BuildPlan plan = ivc::build(inst);
  write_file(out, ivc::serialize_program(plan.sequence()));
  if (labels.empty()) labels = out + ".labels";
  write_file(labels, plan.sidecar_text());
  std::cout << "wrote " << out << " (" << plan.sequence().length() << " instructions, n="
            << plan.n() << ")\n";
  return kExitOk;
}

int cmd_run(const std::string& path, bool dump_values, const std::string& render_path,
            std::uint64_t limit) {
  ivc::ComputationSequence seq = load_program(path);
  ivc::EvalLimits limits;
  if (limit != 0) limits.max_components = limit;
  ivc::EvalResult result = ivc::evaluate(seq, limits);
  if (dump_values) {
    for (std::uint32_t i = 1; i <= seq.length(); ++i) {
      std::cout << i << ": " << result.value(i).to_string() << "\n";
    }
  }
  if (!render_path.empty()) {
    std::vector<ivc::RenderRow> rows;
    for (std::uint32_t i = 1; i <= seq.length(); ++i) {
      rows.push_back({std::to_string(i) + " " + describe(seq.instructions[i - 1]), result.value(i)});
    }
    bool svg = render_path.size() > 4 && render_path.substr(render_path.size() - 4) == ".svg";
    write_file(render_path, svg ? ivc::render_svg(rows) : ivc::render_text(rows));
  }
  std::cout << result.output << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& a, const std::string& b, const std::string& p,
               unsigned n_override) {
  ivc::BigInt pa = parse_big(a), pb = parse_big(b), pp = parse_big(p);
  unsigned n = n_override;
  if (n == 0) {
    ivc::DlogInstance inst = ivc::DlogInstance::make(pa, pb, pp);
    n = inst.n;
  }
  auto solutions = ivc::brute_dlog(pa, pb, pp, n);
  if (solutions.empty()) return kExitNoSolution;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << solutions[i].str();
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& path) {
  ivc::ComputationSequence seq = load_program(path);
  ivc::EvalMetrics m = ivc::stats(seq);
  std::cout << "length " << m.length << "\n";
  std::cout << "output_length " << m.output_length << "\n";
  std::cout << "bit_height " << m.max_bit_height << "\n";
  std::cout << "max_components " << m.max_components << "\n";
  for (std::size_t op = 0; op < ivc::kOpcodeCount; ++op) {
    std::cout << ivc::mnemonic(static_cast<ivc::Opcode>(op)) << " " << m.op_counts[op] << "\n";
  }
  return kExitOk;
}

struct RenderArgs {
  std::string path;
  std::vector<std::string> values;
  std::string indices, format = "txt", out_path, labels_path;
  unsigned grid = 0;
};

int cmd_render(const RenderArgs& args) {
  if (args.format != "txt" && args.format != "svg")
    throw ivc::Error("format must be txt or svg");
  std::vector<ivc::RenderRow> rows;
  if (!args.values.empty()) {
    for (std::size_t i = 0; i < args.values.size(); ++i) {
      rows.push_back({"v" + std::to_string(i + 1), ivc::IntervalValue::parse(args.values[i])});
    }
  } else if (!args.path.empty()) {
    ivc::ComputationSequence seq = load_program(args.path);
    ivc::EvalResult result = ivc::evaluate(seq);
    std::map<std::uint32_t, std::string> names;
    if (!args.labels_path.empty()) names = load_labels(args.labels_path);
    std::vector<std::uint32_t> indices;
    if (args.indices.empty()) {
      for (std::uint32_t i = 1; i <= seq.length(); ++i) indices.push_back(i);
    } else {
      indices = parse_range(args.indices, static_cast<std::uint32_t>(seq.length()));
    }
    for (std::uint32_t i : indices) {
      std::string label = std::to_string(i) + " " + describe(seq.instructions[i - 1]);
      if (auto it = names.find(i); it != names.end()) label += " [" + it->second + "]";
      rows.push_back({std::move(label), result.value(i)});
    }
  } else {
    throw ivc::Error("nothing to render: give a program file or --value");
  }
  std::string rendered;
  if (args.format == "svg") {
    rendered = ivc::render_svg(rows);
  } else {
    unsigned grid = args.grid;
    if (grid == 0) {
      std::uint64_t h = 3;
      for (const auto& r : rows) h = std::max(h, ivc::bit_height(r.value));
      grid = static_cast<unsigned>(h);
    }
    rendered = ivc::render_text(rows, grid);
  }
  if (args.out_path.empty()) {
    std::cout << rendered;
  } else {
    write_file(args.out_path, rendered);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval-valued computing engine and discrete-logarithm program builder"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "compile (a,b,p), evaluate, decode and verify x");
  solve->add_option("a", solve_args.a, "base")->required();
  solve->add_option("b", solve_args.b, "target")->required();
  solve->add_option("p", solve_args.p, "modulus (>= 2)")->required();
  solve->add_option("--emit", solve_args.emit_path, "write the generated program to this path");
  solve->add_option("--labels", solve_args.labels_path, "sidecar label map path (with --emit)");
  solve->add_flag("--trace", solve_args.trace, "print every instruction with its value");
  solve->add_flag("--json", solve_args.json, "machine-readable report");

  std::string build_a, build_b, build_p, build_out, build_labels;
  CLI::App* build = app.add_subcommand("build", "compile (a,b,p) to a program file");
  build->add_option("a", build_a, "base")->required();
  build->add_option("b", build_b, "target")->required();
  build->add_option("p", build_p, "modulus (>= 2)")->required();
  build->add_option("--out", build_out, "program output path")->required();
  build->add_option("--labels", build_labels, "sidecar label map path");

  std::string run_path, run_render;
  bool run_dump = false;
  std::uint64_t run_limit = 0;
  CLI::App* run = app.add_subcommand("run", "evaluate a program file and print its output tape");
  run->add_option("path", run_path, "program file")->required();
  run->add_flag("--dump-values", run_dump, "print every index's value");
  run->add_option("--render", run_render, "write a rendering of all values (.svg for SVG)");
  run->add_option("--limit", run_limit, "override the per-value component cap");

  std::string oracle_a, oracle_b, oracle_p;
  unsigned oracle_n = 0;
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force all exponents x < 2^n");
  oracle->add_option("a", oracle_a, "base")->required();
  oracle->add_option("b", oracle_b, "target")->required();
  oracle->add_option("p", oracle_p, "modulus (>= 2)")->required();
  oracle->add_option("--n", oracle_n, "search width in bits (default: the instance width)");

  std::string stats_path;
  CLI::App* stats = app.add_subcommand("stats", "evaluate a program file and print metrics");
  stats->add_option("path", stats_path, "program file")->required();

  RenderArgs render_args;
  CLI::App* render = app.add_subcommand("render", "draw program values as cell strips or SVG");
  render->add_option("path", render_args.path, "program file");
  render->add_option("--value", render_args.values, "inline value text (repeatable)");
  render->add_option("--indices", render_args.indices, "indices to draw, e.g. 1-5,9");
  render->add_option("--format", render_args.format, "txt or svg");
  render->add_option("--out", render_args.out_path, "output path (default stdout)");
  render->add_option("--grid", render_args.grid, "force 2^grid cells per strip");
  render->add_option("--labels", render_args.labels_path, "sidecar label map for row names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (build->parsed()) return cmd_build(build_a, build_b, build_p, build_out, build_labels);
    if (run->parsed()) return cmd_run(run_path, run_dump, run_render, run_limit);
    if (oracle->parsed()) return cmd_oracle(oracle_a, oracle_b, oracle_p, oracle_n);
    if (stats->parsed()) return cmd_stats(stats_path);
    if (render->parsed()) return cmd_render(render_args);
  } catch (const ivc::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ivc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
