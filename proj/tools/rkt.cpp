#include "rkt/cli/run.hpp"

int main(int argc, char** argv) { return rkt::cli::run(argc, argv); }
