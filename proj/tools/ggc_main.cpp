#include "ggc/cli.hpp"

int main(int argc, char **argv) { return ggc::cli::main_entry(argc, argv); }
