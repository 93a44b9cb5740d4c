#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "extword/session.hpp"

int main(int argc, char** argv) {
  using namespace extword;
  CLI::App app{
      "extword: computation in group extensions by non-Archimedean infinite words.\n"
      "Commands (one per line from a script, stdin, or -c):\n"
      "  wp EXPR | eq EXPR ; EXPR | deg EXPR | rdeg EXPR | eval EXPR at [a0,a1,..]\n"
      "  periods EXPR | order EXPR --max N | cdr EXPR | normalize EXPR\n"
      "  freduced EXPR | greduced EXPR | let NAME = EXPR | demo NAME\n"
      "  table-export FILE EXPR | table-import FILE"};

  SessionOptions opts;
  std::vector<std::string> inline_cmds;
  std::string script;
  app.add_option("--group", opts.group_spec, "base group: free:a,b | abelian:k | cyclic | table:FILE")
      ->capture_default_str();
  app.add_option("--dmax", opts.dmax, "exponent degree cap (A = Z^{dmax+1})")->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized harnesses")->capture_default_str();
  app.add_option("--max-steps", opts.max_steps, "rewriting step cap")->capture_default_str();
  app.add_option("--window", opts.window, "finite scan window")->capture_default_str();
  app.add_flag("--json", opts.json, "structured output, one JSON object per command");
  app.add_option("-c,--command", inline_cmds, "run this command (repeatable)");
  app.add_option("script", script, "command script ('-' or omitted: stdin when piped)");

  CLI11_PARSE(app, argc, argv);

  int rc = 0;
  try {
    Session session(opts);
    auto feed = [&](std::istream& in) {
      std::string line;
      while (std::getline(in, line)) rc = std::max(rc, session.run_line(line, std::cout, std::cerr));
    };
    if (!inline_cmds.empty()) {
      for (const auto& c : inline_cmds) rc = std::max(rc, session.run_line(c, std::cout, std::cerr));
    } else if (!script.empty() && script != "-") {
      std::ifstream in(script);
      if (!in) {
        std::cerr << "error: cannot open script " << script << "\n";
        return 2;
      }
      feed(in);
    } else {
      feed(std::cin);
    }
  } catch (const invalid_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cap_exceeded_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
