#include "hn3/cli.hpp"

int main(int argc, char** argv) { return hn3::run_subcommand(argc, argv); }
