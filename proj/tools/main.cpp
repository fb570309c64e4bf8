#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nilrep/errors.hpp"
#include "nilrep/families.hpp"
#include "nilrep/io.hpp"
#include "nilrep/report.hpp"
#include "nilrep/reproduction.hpp"

using namespace nilrep;

namespace {

void emit(const Json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << dump(j);
  } else {
    write_json_file(output, j);
  }
}

std::vector<std::int64_t> parse_dims(const std::string& text) {
  std::vector<std::int64_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError("malformed --dims entry '" + item + "'");
    dims.push_back(v);
  }
  if (dims.empty()) throw InputError("--dims is empty");
  return dims;
}

std::shared_ptr<const LieAlgebra> load_algebra(const std::string& path) {
  const Json j = read_json_file(path);
  // A representation file carries its algebra inline.
  if (j.is_object() && j.contains("algebra") && j.contains("matrices"))
    return std::make_shared<const LieAlgebra>(algebra_from_json(j.at("algebra")));
  return std::make_shared<const LieAlgebra>(algebra_from_json(j));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for faithful nilrepresentations of nilpotent Lie algebras"};
  app.require_subcommand(1);
  std::string output;
  std::uint64_t seed = 0;

  auto* family = app.add_subcommand("family", "Write a family's algebra and defining representation");
  std::string tag;
  std::int64_t fa = 0, fb = 0, fc = 0, fp = 0, fm = 0, fn = 0;
  family->add_option("tag", tag, "nap | nabc | heisenberg | abelian")->required()
      ->check(CLI::IsMember({"nap", "nabc", "heisenberg", "abelian"}));
  family->add_option("--a", fa);
  family->add_option("--b", fb);
  family->add_option("--c", fc);
  family->add_option("--p", fp);
  family->add_option("--m", fm);
  family->add_option("--n", fn);
  family->add_option("-o,--output", output, "Prefix; writes PREFIX.algebra.json and PREFIX.rep.json");

  auto* analyze = app.add_subcommand("analyze", "Structure summary of an algebra file");
  std::string algebra_path;
  analyze->add_option("algebra", algebra_path)->required();
  analyze->add_option("-o,--output", output);

  auto* solve = app.add_subcommand("solve", "Solve the integer bound problem directly");
  std::size_t sp = 0, sp0 = 0;
  std::string dims_text;
  bool brute = false;
  solve->add_option("--p", sp)->required();
  solve->add_option("--p0", sp0)->required();
  solve->add_option("--dims", dims_text, "n_1,...,n_p")->required();
  solve->add_flag("--brute", brute, "Use exhaustive enumeration");
  solve->add_option("-o,--output", output);

  auto* bound = app.add_subcommand("bound", "Lower bound report for an algebra file");
  std::string filtration_path;
  bound->add_option("algebra", algebra_path)->required();
  bound->add_option("--filtration", filtration_path);
  bound->add_option("-o,--output", output);

  auto* decompose = app.add_subcommand("decompose", "Chain decomposition of a representation file");
  std::string rep_path;
  decompose->add_option("representation", rep_path)->required();
  decompose->add_option("--filtration", filtration_path);
  decompose->add_option("--seed", seed);
  decompose->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify-paper", "Reproduce the family bounds");
  bool quick = false, inject_fault = false;
  verify->add_flag("--quick", quick, "Small nap/nabc rows only");
  verify->add_flag("--inject-fault", inject_fault, "Perturb every problem (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*family) {
      const std::string name = tag == "nap"          ? "nap(a=" + std::to_string(fa) + ",p=" + std::to_string(fp) + ")"
                               : tag == "nabc"       ? "nabc(a=" + std::to_string(fa) + ",b=" + std::to_string(fb) +
                                                           ",c=" + std::to_string(fc) + ")"
                               : tag == "heisenberg" ? "heisenberg(m=" + std::to_string(fm) + ")"
                                                     : "abelian(n=" + std::to_string(fn) + ")";
      const auto spec = parse_family_name(name);
      if (!spec) throw InputError("bad family parameters for " + tag);
      const FamilyInstance inst = make_family(*spec);
      if (output.empty()) {
        std::cout << dump({{"algebra", algebra_to_json(*inst.algebra)},
                           {"representation", representation_to_json(inst.representation)}});
      } else {
        write_json_file(output + ".algebra.json", algebra_to_json(*inst.algebra));
        write_json_file(output + ".rep.json", representation_to_json(inst.representation));
      }
    } else if (*analyze) {
      const Json j = read_json_file(algebra_path);
      const Json& a = j.is_object() && j.contains("matrices") ? j.at("algebra") : j;
      emit(analysis_to_json(std::make_shared<const LieAlgebra>(algebra_from_json(a, false))), output);
    } else if (*solve) {
      auto dims = parse_dims(dims_text);
      if (dims.size() != sp) throw InputError("--dims must list exactly p = " + std::to_string(sp) + " values");
      for (auto d : dims) {
        if (d < 1) throw InputError("--dims entries must be positive");
      }
      const BoundProblem prob = make_bound_problem(sp0, dims);
      const BoundSolution sol = brute ? solve_bruteforce(prob) : solve_exact(prob);
      emit(solution_to_json(prob, sol, brute ? "bruteforce" : "exact"), output);
    } else if (*bound) {
      auto alg = load_algebra(algebra_path);
      std::optional<Filtration> filt;
      if (!filtration_path.empty()) filt = filtration_from_json(read_json_file(filtration_path), alg);
      emit(report_to_json(lower_bound_report(alg, filt)), output);
    } else if (*decompose) {
      const Representation rep = representation_from_json(read_json_file(rep_path));
      const Filtration filt = filtration_path.empty()
                                  ? default_filtration(rep.algebra_ptr())
                                  : filtration_from_json(read_json_file(filtration_path), rep.algebra_ptr());
      const DecompositionRun run = run_decomposition(rep, filt, seed);
      emit(decomposition_to_json(run, filt.p0()), output);
      if (!run.ok()) {
        std::cerr << "verification failed" << (run.failure.empty() ? "" : ": " + run.failure) << "\n";
        return 2;
      }
    } else if (*verify) {
      const auto rows = run_reproduction({quick, inject_fault});
      print_reproduction(std::cout, rows);
      const bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed; });
      std::cout << (all ? "all rows PASS" : "some rows FAIL") << "\n";
      return all ? 0 : 2;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
