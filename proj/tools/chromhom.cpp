#include <iostream>

#include <CLI11.hpp>

#include "chromhom/cli.hpp"
#include "chromhom/errors.hpp"

int main(int argc, char** argv) {
  using namespace chromhom;
  CLI::App app{"Chromatic homology over broken-circuit-free states"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string model = "both";
  std::string format = "json";
  std::string verify = "fast";
  bool no_timing = false;

  struct Command {
    const char* name;
    const char* help;
    bool algebra;
  };
  const Command commands[] = {
      {"info", "Graph summary and state counts", false},
      {"nbc", "List NBC states", false},
      {"matching", "Matched pairs and the certified linear extension", false},
      {"homology", "Bigraded homology of the full and/or NBC complex", true},
      {"chromatic", "Chromatic polynomial by three routes", false},
      {"csf", "Chromatic symmetric function in the power-sum basis", false},
      {"verify", "Run the invariant suite", true},
      {"bench", "Compare the full and NBC pipelines", true},
  };
  for (const Command& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--graph", cfg.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_flag("--no-timing", no_timing, "Omit wall-clock fields");
    if (s.algebra) {
      sub->add_option("--algebra", cfg.algebra, "am:<m> or a JSON algebra file");
      sub->add_option("--threads", cfg.threads, "Worker cap (default NBC_THREADS or hardware)");
    }
    if (std::string(s.name) == "homology") {
      sub->add_option("--model", model, "full, nbc or both")->check(CLI::IsMember({"full", "nbc", "both"}));
      sub->add_option("--dump-complex", cfg.dump_complex, "Write the based complex as JSON");
    }
    if (std::string(s.name) == "verify")
      sub->add_option("--verify", verify, "fast or paranoid")->check(CLI::IsMember({"fast", "paranoid"}));
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.model = cli::parse_model_choice(model);
    cfg.format = cli::parse_format(format);
    cfg.verify = cli::parse_verify_level(verify);
    cfg.timing = !no_timing;
    cli::CommandResult result = cli::run(cfg);
    std::cout << result.output;
    return result.exit_code;
  } catch (const ParseError& e) {
    std::cerr << cfg.graph.string() << ": " << e.what() << '\n';
  } catch (const EngineError& e) {
    std::cerr << "engine failure: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
