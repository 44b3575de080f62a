#include "cjac/cli.hpp"

int main(int argc, char** argv) { return cjac::cli::run(argc, argv); }
