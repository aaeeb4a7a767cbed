// Command-line entry point. Subcommands are registered in cli.hpp so the
// orchestration logic stays testable as a library.
#include "spoilkit/exp/cli.hpp"

int main(int argc, char** argv) { return spoilkit::cli_main(argc, argv); }
