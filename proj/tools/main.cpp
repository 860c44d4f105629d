#include "gupspec/cli/commands.hpp"

int main(int argc, char** argv) { return gup::cli::run(argc, argv); }
