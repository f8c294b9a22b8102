#include <iostream>

#include "entailkit/cli.hpp"

int main(int argc, char** argv) {
  entailkit::RunConfig cfg;
  try {
    cfg = entailkit::parse_args(argc, argv);
  } catch (const entailkit::CliExit& e) {
    (e.code() == 0 ? std::cout : std::cerr) << e.text();
    return e.code();
  }
  return entailkit::run(cfg, std::cout, std::cerr);
}
