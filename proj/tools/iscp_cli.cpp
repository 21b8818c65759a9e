// Command line front end: every subcommand reads one JSON document and
// prints one JSON report with sorted keys.  Exit codes: 0 when the run
// completed (predicate values are data), 1 when a verified assertion
// failed, 2 for malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "iscp/api.hpp"

namespace {

nlohmann::json read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return nlohmann::json::parse(buf.str());
  }
  std::ifstream f(path);
  if (!f) throw iscp::structural_error("cannot open input file: " + path);
  return nlohmann::json::parse(f);
}

void write_output(const nlohmann::json& out, const std::string& path) {
  if (path.empty()) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(path);
    if (!f) throw iscp::structural_error("cannot open output file: " + path);
    f << out.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for inverse semigroup actions and their crossed products"};
  app.require_subcommand(1);
  app.fallthrough();

  iscp::api::Options opt;
  std::string input_path = "-", output_path;
  bool seed_given = false;

  app.add_option("--tol", opt.tol, "exact-side tolerance")->capture_default_str();
  app.add_option("--tol-spec", opt.tol_spec, "spectral-side tolerance")->capture_default_str();
  app.add_option("--cap", opt.cap, "closure size cap")->capture_default_str();
  app.add_option("--order", opt.order, "normal-form order: index or lex")->capture_default_str();
  app.add_option("--out", output_path, "write the report to a file instead of stdout");
  auto* seed_opt = app.add_option("--seed", opt.seed, "seed for randomised checks");

  std::string command;
  for (auto& name : iscp::api::commands()) {
    auto* sub = app.add_subcommand(name, "");
    if (name == "corpus-run") {
      sub->callback([&, name] {
        command = name;
        seed_given = seed_opt->count() > 0;
      });
    } else if (name == "corpus-dump") {
      static std::string dir;
      sub->add_option("dir", dir, "output directory")->required();
      sub->callback([&, name] {
        command = name;
        input_path = "";
      });
      continue;
    } else {
      sub->add_option("input", input_path, "input JSON file (- for stdin)");
      sub->callback([&, name] { command = name; });
      continue;
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json input;
    if (command == "corpus-run") {
      if (!seed_given) {
        std::cerr << "corpus-run requires an explicit --seed\n";
        return 2;
      }
      input = nlohmann::json::object();
    } else if (command == "corpus-dump") {
      std::string dir = app.get_subcommand("corpus-dump")->get_option("dir")->as<std::string>();
      input = {{"dir", dir}};
    } else {
      input = read_input(input_path);
    }

    auto out = iscp::api::run(command, input, opt);
    write_output(out, output_path);
    if (out.contains("assertions_hold") && !out["assertions_hold"].get<bool>()) return 1;
    return 0;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "input is not valid JSON: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input document malformed: " << e.what() << "\n";
    return 2;
  } catch (const iscp::internal_check_error& e) {
    std::cerr << "internal cross-check failed: " << e.what() << "\n";
    return 1;
  } catch (const iscp::conditioning_error& e) {
    std::cerr << "instance rejected: " << e.what() << "\n";
    return 1;
  } catch (const iscp::structural_error& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 2;
  } catch (const iscp::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const iscp::axiom_error& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    return 2;
  } catch (const iscp::resource_error& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return 2;
  }
}
