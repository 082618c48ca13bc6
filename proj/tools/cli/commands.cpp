#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cdc/relation_ops.hpp"
#include "cdc/solver.hpp"
#include "cli/network_io.hpp"
#include "cli/render.hpp"

namespace cdc::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw InputError(0, "cannot write '" + path.string() + "'");
  f << content;
}

void emit_solution(const std::vector<PixelRegion>& regions, const OutputOptions& opts,
                   std::ostream& out) {
  const Frame f = regions.front().frame();
  out << "frame " << f.nx << 'x' << f.ny << '\n';
  for (std::size_t i = 0; i < regions.size(); ++i)
    out << "mbr " << i + 1 << ' ' << mbr_of(regions[i]).to_string() << '\n';
  out << render_ascii(regions);
  if (!opts.out_dir) return;
  const fs::path dir(*opts.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (opts.format == "pbm") {
    for (std::size_t i = 0; i < regions.size(); ++i)
      write_file(dir / ("region_" + std::to_string(i + 1) + ".pbm"), to_pbm(regions[i]));
  } else {
    write_file(dir / "solution.txt", render_ascii(regions));
  }
}

// Maps exceptions to exit codes for every command.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace

int cmd_check(const std::string& file, std::optional<Model> model, const OutputOptions& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto nf = read_network_file(file, model);
    const auto net = to_basic(nf);
    const auto res = solve_basic(net, nf.model);
    if (!res.consistent) {
      out << "inconsistent: " << res.failure->to_string() << '\n';
      return int{kInconsistent};
    }
    out << "consistent\n";
    emit_solution(res.solution, opts, out);
    return int{kOk};
  });
}

int cmd_solve(const std::string& file, std::optional<Model> model, const OutputOptions& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto nf = read_network_file(file, model);
    const auto res = solve_disjunctive(to_disjunctive(nf), nf.model);
    if (!res.satisfiable) {
      out << "unsatisfiable (" << res.leaves << " refinements tried)\n";
      return int{kInconsistent};
    }
    out << "satisfiable\n" << format_network(*res.refinement, nf.model);
    emit_solution(res.outcome.solution, opts, out);
    return int{kOk};
  });
}

int cmd_simplify(const std::string& file, std::optional<Model> model, const OutputOptions& opts,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto nf = read_network_file(file, model);
    if (nf.model == Model::CdcD) throw InputError(0, "simplify needs a cdc or cdc-s network");
    const auto res = solve_basic(to_basic(nf), nf.model);
    if (!res.consistent) {
      out << "inconsistent: " << res.failure->to_string() << '\n';
      return int{kInconsistent};
    }
    out << "consistent\n";
    emit_solution(simplify_solution(res), opts, out);
    return int{kOk};
  });
}

int cmd_tables_converses(std::optional<Model> model, const std::optional<std::string>& csv,
                         std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto& table = converse_table(model.value_or(Model::Cdc));
    if (csv) {
      std::ostringstream os;
      os << "delta,converse\n";
      for (const auto& [d, cs] : table.entries())
        for (auto c : cs) os << d.to_string(false) << ',' << c.to_string(false) << '\n';
      write_file(*csv, os.str());
    }
    out << "relations=" << table.entries().size() << '\n';
    out << "pairs=" << table.pair_count() << '\n';
    out << "sizes";
    for (const auto& [size, count] : table.size_distribution()) out << ' ' << size << ':' << count;
    out << '\n';
    return int{kOk};
  });
}

int cmd_tables_compose(const std::string& alpha, const std::string& beta,
                       std::optional<Model> model, const std::optional<std::string>& csv,
                       std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Model m = model.value_or(Model::Cdc);
    const auto a = DirectionMatrix::parse(alpha);
    const auto b = DirectionMatrix::parse(beta);
    if (!is_valid_matrix(a, m) || !is_valid_matrix(b, m))
      throw InputError(0, "operands must be valid " + std::string(model_name(m)) + " relations");
    const auto res = weak_composition(a, b, m);
    std::ostringstream rows;
    rows << "alpha,beta,gamma\n";
    for (auto g : res.gammas) {
      out << g.to_string() << '\n';
      rows << a.to_string(false) << ',' << b.to_string(false) << ',' << g.to_string(false) << '\n';
    }
    if (csv) write_file(*csv, rows.str());
    out << "gammas=" << res.gammas.size() << '\n';
    return int{kOk};
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cardinal direction constraint solver"};
  app.require_subcommand(1);

  std::string file;
  std::string model_text;
  OutputOptions opts;
  std::string out_dir;

  auto add_network_command = [&](const std::string& name, const std::string& help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file", file, "Network file")->required();
    sc->add_option("--model", model_text, "Override the file's model")
        ->check(CLI::IsMember({"cdc", "cdc-d", "cdc-s"}));
    sc->add_option("--out", out_dir, "Directory for the rendered solution");
    sc->add_option("--format", opts.format, "Rendering written to --out")
        ->check(CLI::IsMember({"ascii", "pbm"}));
    return sc;
  };
  auto* check = add_network_command("check", "Decide a basic network and print its solution");
  auto* solve = add_network_command("solve", "Search a disjunctive network for a solution");
  auto* simplify = add_network_command("simplify", "Solve with simple (hole-free) regions");

  auto* tables = app.add_subcommand("tables", "Relation tables");
  std::string which;
  std::vector<std::string> operands;
  std::string csv;
  tables->add_option("--which", which, "converses, or compose with two relations")
      ->required()
      ->check(CLI::IsMember({"converses", "compose"}));
  tables->add_option("relations", operands, "alpha beta (compose only)");
  tables->add_option("--model", model_text)->check(CLI::IsMember({"cdc", "cdc-d", "cdc-s"}));
  tables->add_option("--out", csv, "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto model = model_text.empty() ? std::nullopt : model_from_name(model_text);
  if (!out_dir.empty()) opts.out_dir = out_dir;
  const std::optional<std::string> csv_path =
      csv.empty() ? std::nullopt : std::optional<std::string>(csv);

  if (*check) return cmd_check(file, model, opts, out, err);
  if (*solve) return cmd_solve(file, model, opts, out, err);
  if (*simplify) return cmd_simplify(file, model, opts, out, err);
  if (which == "converses") {
    if (!operands.empty()) {
      err << "error: converses takes no relations\n";
      return kInputError;
    }
    return cmd_tables_converses(model, csv_path, out, err);
  }
  if (operands.size() != 2) {
    err << "error: compose needs exactly two relations\n";
    return kInputError;
  }
  return cmd_tables_compose(operands[0], operands[1], model, csv_path, out, err);
}

}  // namespace cdc::cli
