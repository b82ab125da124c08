#include "prymlat/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prymlat/cover.hpp"
#include "prymlat/cover_io.hpp"
#include "prymlat/errors.hpp"
#include "prymlat/homology.hpp"
#include "prymlat/prym.hpp"

namespace prymlat::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string input;
  std::string dir;
  bool json = false;
  bool quiet = false;
  long long n = 1;
  std::optional<long long> end_rank;
};

long long to_i64(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x < lo || x > hi)
    throw InvariantViolation("matrix entry exceeds machine-readable range");
  return static_cast<long long>(x);
}

ordered_json matrix_to_json(const IntegerMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_i64(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::SumNotZero:
      return "SumNotZero";
    case ViolationKind::TrivialMonodromy:
      return "TrivialMonodromy";
    case ViolationKind::NotGenerating:
      return "NotGenerating";
    case ViolationKind::WrongGroup:
      return "WrongGroup";
  }
  return "Unknown";
}

ordered_json violations_to_json(const std::vector<Violation>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs) {
    ordered_json item;
    item["kind"] = kind_name(v.kind);
    if (v.index) item["index"] = *v.index;
    item["message"] = v.describe();
    arr.push_back(std::move(item));
  }
  return arr;
}

std::string exponents_string(const Character& chi) {
  std::string s = "(";
  for (std::size_t i = 0; i < chi.exponents().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(chi.exponents()[i]);
  }
  return s + ")";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// 1 = input/validation error, 2 = internal invariant violation.
int classify(const std::exception& e) {
  if (dynamic_cast<const std::invalid_argument*>(&e)) return 1;
  return 2;
}

struct FileResult {
  int code = 0;
  ordered_json report;
  std::vector<std::string> lines;  // human-readable output
};

struct CommandOutput {
  int code = 0;
  ordered_json result;
  std::vector<std::string> lines;
  std::string error;  // nonempty on exit-2 certificate failure
};

CommandOutput run_command(const Options& opt, const BranchData& b) {
  CommandOutput out;
  out.result = ordered_json();

  if (opt.command == "validate") {
    out.result["valid"] = true;
    out.lines.push_back("valid");
    return out;
  }

  if (opt.command == "genus") {
    long long g = genus(b);
    out.result["group"] = b.group.describe();
    out.result["group_order"] = b.group.order();
    out.result["branch_points"] = b.monodromy.size();
    out.result["genus"] = g;
    out.lines.push_back("genus " + std::to_string(g));
    return out;
  }

  if (opt.command == "eigenspaces") {
    EigenspaceTable table = chevalley_weil_dims(b);
    long long g = genus(b);
    out.result["genus"] = g;
    out.result["characters"] = ordered_json::array();
    for (std::size_t i = 0; i < table.characters.size(); ++i) {
      ordered_json row;
      row["exponents"] = table.characters[i].exponents();
      row["dim"] = table.dims[i];
      out.result["characters"].push_back(std::move(row));
      out.lines.push_back("chi=" + exponents_string(table.characters[i]) +
                          ": d=" + std::to_string(table.dims[i]));
    }
    out.result["total"] = table.total;
    out.lines.push_back("total " + std::to_string(table.total) + " (genus " +
                        std::to_string(g) + ")");
    return out;
  }

  CoverComplex complex = build_cover_complex(b);
  EquivariantLattice lattice = h1_with_action(complex);

  if (opt.command == "homology") {
    out.result["vertices"] = complex.vertex_count;
    out.result["edges"] = complex.edge_count;
    out.result["faces"] = complex.face_count();
    out.result["euler_characteristic"] = complex.euler_characteristic();
    out.result["rank"] = lattice.rank;
    out.result["genus"] = genus(b);
    ordered_json actions = ordered_json::array();
    for (const auto& m : lattice.generator_action)
      actions.push_back(matrix_to_json(m));
    out.result["generator_action"] = std::move(actions);
    std::ostringstream line;
    line << "vertices " << complex.vertex_count << ", edges "
         << complex.edge_count << ", faces " << complex.face_count()
         << ", euler " << complex.euler_characteristic();
    out.lines.push_back(line.str());
    out.lines.push_back("H1 rank " + std::to_string(lattice.rank) +
                        " (genus " + std::to_string(genus(b)) + ")");
    return out;
  }

  if (opt.command == "prym") {
    Sublattice fixed = fixed_sublattice(lattice);
    PrymLattice prym = prym_lattice(lattice);
    out.result["ambient_rank"] = lattice.rank;
    out.result["fixed_rank"] = fixed.rank();
    out.result["prym_rank"] = prym.rank;
    out.result["prym_dimension"] = prym.dimension;
    out.lines.push_back("fixed rank " + std::to_string(fixed.rank()));
    out.lines.push_back("Prym rank " + std::to_string(prym.rank) +
                        ", dimension " + std::to_string(prym.dimension));
    return out;
  }

  if (opt.command == "verify") {
    DecompositionReport rep = verify_decomposition(lattice);
    out.result["ambient_rank"] = rep.ambient_rank;
    out.result["fixed_rank"] = rep.fixed_rank;
    out.result["prym_rank"] = rep.prym_rank;
    out.result["image_saturation_equals_fixed"] =
        rep.image_saturation_equals_fixed;
    out.result["intersection_rank"] = rep.intersection_rank;
    out.result["torsion_exponent"] = rep.torsion_exponent;
    out.result["n_times_ambient_in_sum"] = rep.n_times_ambient_in_sum;
    out.result["group_order"] = rep.group_order;
    out.result["passed"] = rep.passed();
    std::ostringstream ranks;
    ranks << "ambient rank " << rep.ambient_rank << ", fixed rank "
          << rep.fixed_rank << ", prym rank " << rep.prym_rank;
    out.lines.push_back(ranks.str());
    out.lines.push_back(std::string("image saturation equals fixed: ") +
                        yesno(rep.image_saturation_equals_fixed));
    out.lines.push_back("intersection rank " +
                        std::to_string(rep.intersection_rank));
    out.lines.push_back("torsion exponent " +
                        std::to_string(rep.torsion_exponent) +
                        " (group order " + std::to_string(rep.group_order) +
                        ")");
    out.lines.push_back(std::string("n*ambient contained in fixed + prym: ") +
                        yesno(rep.n_times_ambient_in_sum));
    if (rep.passed()) {
      out.lines.push_back("decomposition: PASS");
    } else {
      out.lines.push_back("decomposition: FAIL");
      out.code = 2;
      out.error = "decomposition certificate failed";
    }
    return out;
  }

  if (opt.command == "product") {
    ProductReport rep = verify_product(lattice, opt.n);
    out.result["n"] = rep.n_copies;
    out.result["factor_prym_rank"] = rep.factor_prym_rank;
    out.result["product_prym_rank"] = rep.product_prym_rank;
    out.result["rank_matches"] = rep.rank_matches;
    out.result["basis_matches"] = rep.basis_matches;
    out.result["passed"] = rep.passed();
    std::ostringstream line;
    line << "factor Prym rank " << rep.factor_prym_rank
         << ", product Prym rank " << rep.product_prym_rank << " (n = "
         << rep.n_copies << ")";
    out.lines.push_back(line.str());
    out.lines.push_back(std::string("rank matches: ") +
                        yesno(rep.rank_matches) + "; basis matches: " +
                        yesno(rep.basis_matches));
    if (rep.passed()) {
      out.lines.push_back("product: PASS");
    } else {
      out.lines.push_back("product: FAIL");
      out.code = 2;
      out.error = "product certificate failed";
    }
    return out;
  }

  if (opt.command == "rank-bound") {
    RankBoundReport rep = rank_bound(b, opt.n, opt.end_rank);
    out.result["group"] = rep.group.describe();
    out.result["label"] = rep.branch_label;
    out.result["group_order"] = rep.group_order;
    out.result["n"] = rep.n_copies;
    out.result["genus"] = rep.genus;
    out.result["prym_product_rank"] = rep.prym_product_rank;
    out.result["end_rank_lower"] = rep.end_rank_lower;
    out.result["end_rank_upper"] = rep.end_rank_upper;
    out.result["end_rank_used"] = rep.end_rank_used;
    out.result["bound"] = rep.bound;
    out.result["torsion_note"] = rep.torsion_note;
    out.result["assumptions"] = rep.assumptions;
    std::ostringstream line1;
    line1 << "n = " << rep.n_copies << ", genus " << rep.genus
          << ", prym product rank " << rep.prym_product_rank;
    out.lines.push_back(line1.str());
    std::ostringstream line2;
    line2 << "end rank: lower " << rep.end_rank_lower
          << " (group ring), upper " << rep.end_rank_upper
          << " (commutant), used " << rep.end_rank_used;
    out.lines.push_back(line2.str());
    out.lines.push_back("bound >= " + std::to_string(rep.bound));
    if (!opt.quiet) {
      out.lines.push_back("note: " + rep.torsion_note);
      out.lines.push_back("assumptions: " + rep.assumptions);
    }
    return out;
  }

  throw InvariantViolation("unhandled command: " + opt.command);
}

FileResult process_one(const Options& opt, const std::string& path,
                       const std::string& display_name, bool batch) {
  FileResult fr;
  fr.report["command"] = opt.command;
  if (batch) fr.report["file"] = display_name;
  fr.report["status"] = "ok";
  fr.report["exit_code"] = 0;
  fr.report["violations"] = ordered_json::array();
  fr.report["result"] = nullptr;

  CoverDocument doc;
  try {
    doc = load_cover_document(path);
  } catch (const std::exception& e) {
    fr.code = classify(e);
    fr.report["status"] = "error";
    fr.report["exit_code"] = fr.code;
    fr.report["error"] = e.what();
    fr.lines.push_back(std::string("error: ") + e.what());
    return fr;
  }
  fr.report["input"] = document_to_json(doc);

  try {
    BranchData b = to_branch_data(doc);
    std::vector<Violation> violations = validate(b);
    fr.report["violations"] = violations_to_json(violations);
    if (!violations.empty()) {
      fr.code = 1;
      fr.report["status"] = "invalid";
      fr.report["exit_code"] = 1;
      if (opt.command == "validate") fr.report["result"] = {{"valid", false}};
      for (const auto& v : violations)
        fr.lines.push_back("violation: " + v.describe());
      fr.lines.push_back("invalid");
      return fr;
    }

    if (!opt.quiet) {
      std::string header = "cover";
      if (!b.label.empty()) header += " '" + b.label + "'";
      header += ": group " + b.group.describe() + ", " +
                std::to_string(b.monodromy.size()) + " branch points";
      fr.lines.push_back(header);
    }

    CommandOutput cmd = run_command(opt, b);
    fr.code = cmd.code;
    fr.report["exit_code"] = cmd.code;
    fr.report["result"] = std::move(cmd.result);
    if (!cmd.error.empty()) {
      fr.report["status"] = "error";
      fr.report["error"] = cmd.error;
    }
    for (auto& line : cmd.lines) fr.lines.push_back(std::move(line));
  } catch (const std::exception& e) {
    fr.code = classify(e);
    fr.report["status"] = "error";
    fr.report["exit_code"] = fr.code;
    fr.report["error"] = e.what();
    fr.lines.push_back(std::string("error: ") + e.what());
  }
  return fr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Prym lattices of abelian covers of the projective line"};
  app.name("prymlat");
  app.require_subcommand(1);

  Options opt;
  long long end_rank_value = 0;
  CLI::Option* end_rank_opt = nullptr;

  auto add_common = [&](CLI::App* s) {
    auto* in =
        s->add_option("--input", opt.input, "cover document (JSON file)");
    auto* dir = s->add_option(
        "--dir", opt.dir,
        "directory of cover documents, processed in filename order");
    in->excludes(dir);
    dir->excludes(in);
    s->add_flag("--json", opt.json, "machine-readable output");
    s->add_flag("--quiet", opt.quiet, "suppress informational lines");
    return s;
  };

  add_common(app.add_subcommand("validate", "check branch data invariants"));
  add_common(app.add_subcommand("genus", "Riemann-Hurwitz genus of the cover"));
  add_common(
      app.add_subcommand("eigenspaces", "Chevalley-Weil eigenspace table"));
  add_common(app.add_subcommand(
      "homology", "H1 of the cover with the group action"));
  add_common(
      app.add_subcommand("prym", "rank and dimension of the Prym lattice"));
  add_common(app.add_subcommand(
      "verify", "norm-kernel decomposition certificate"));
  auto* product = add_common(app.add_subcommand(
      "product", "compare Prym of the diagonal n-fold product"));
  product->add_option("--n", opt.n, "number of copies")->required();
  auto* rank_bound_cmd = add_common(app.add_subcommand(
      "rank-bound", "Mordell-Weil rank lower bound for the twisted family"));
  rank_bound_cmd->add_option("--n", opt.n, "number of copies")->required();
  end_rank_opt = rank_bound_cmd->add_option(
      "--end-rank", end_rank_value,
      "assumed endomorphism rank (must be >= the certified lower bound)");

  std::vector<const char*> argv;
  argv.push_back("prymlat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  for (const auto* s : app.get_subcommands()) opt.command = s->get_name();
  if (end_rank_opt->count() > 0) opt.end_rank = end_rank_value;

  if (opt.input.empty() && opt.dir.empty()) {
    err << "error: one of --input or --dir is required\n";
    return 1;
  }

  std::vector<std::pair<std::string, std::string>> files;  // (path, name)
  if (!opt.input.empty()) {
    files.emplace_back(opt.input,
                       std::filesystem::path(opt.input).filename().string());
  } else {
    std::error_code ec;
    std::filesystem::directory_iterator it(opt.dir, ec);
    if (ec) {
      err << "error: cannot read directory " << opt.dir << ": "
          << ec.message() << "\n";
      return 1;
    }
    for (const auto& entry : it) {
      if (!entry.is_regular_file()) continue;
      if (entry.path().extension() != ".json") continue;
      files.emplace_back(entry.path().string(),
                         entry.path().filename().string());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    if (files.empty()) {
      err << "error: no cover documents (*.json) in " << opt.dir << "\n";
      return 1;
    }
  }

  bool batch = !opt.dir.empty();
  int worst = 0;
  ordered_json reports = ordered_json::array();
  bool first_block = true;
  for (const auto& [path, name] : files) {
    FileResult fr = process_one(opt, path, name, batch);
    worst = std::max(worst, fr.code);
    if (opt.json) {
      reports.push_back(std::move(fr.report));
      continue;
    }
    if (batch && !opt.quiet) {
      if (!first_block) out << "\n";
      out << "== " << name << " ==\n";
    }
    first_block = false;
    for (const auto& line : fr.lines) {
      if (fr.code != 0 && opt.command != "validate" &&
          (line.rfind("error: ", 0) == 0 || line.rfind("violation: ", 0) == 0 ||
           line == "invalid")) {
        err << (batch ? name + ": " : std::string{}) << line << "\n";
      } else {
        out << line << "\n";
      }
    }
  }

  if (opt.json) {
    if (batch)
      out << reports.dump(2) << "\n";
    else
      out << reports.at(0).dump(2) << "\n";
  }
  return worst;
}

}  // namespace prymlat::cli
