#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hott/driver.hpp"

#ifndef HOTT_DEFAULT_STDLIB
#define HOTT_DEFAULT_STDLIB ""
#endif

int main(int argc, char** argv) {
  CLI::App app{"hott - a small proof checker"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "type-check .hott files");
  std::vector<std::string> paths;
  std::string stdlibDir;
  bool noStdlib = false;
  hott::DriverOptions opts;
  check->add_option("paths", paths, "files to check")->required();
  check->add_option("--stdlib", stdlibDir, "stdlib directory for imports");
  check->add_flag("--no-stdlib", noStdlib, "do not search the stdlib");
  check->add_flag("--dump-elaborated", opts.dumpElaborated,
                  "print every checked declaration, including generated ones");
  check->add_flag("--summary", opts.summary, "print a one-line summary");
  check->add_option("--jobs", opts.jobs, "worker count (results identical)");

  CLI11_PARSE(app, argc, argv);

  if (noStdlib) {
    opts.stdlibDir.clear();
  } else if (!stdlibDir.empty()) {
    opts.stdlibDir = stdlibDir;
  } else if (const char* env = std::getenv("HOTT_STDLIB")) {
    opts.stdlibDir = env;
  } else {
    opts.stdlibDir = HOTT_DEFAULT_STDLIB;
  }

  return hott::runCheck(paths, opts, std::cout);
}
