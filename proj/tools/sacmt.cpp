#include "sacmt/cli.hpp"

int main(int argc, char** argv) { return sacmt::cli::run(argc, argv); }
