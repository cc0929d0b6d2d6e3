#include "ksector/cli.hpp"

int main(int argc, char** argv) { return ksector::cli::run_main(argc, argv); }
