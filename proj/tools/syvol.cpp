#include "syvol/cli.hpp"

int main(int argc, char** argv) { return syvol::cli::run(argc, argv); }
