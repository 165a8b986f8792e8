#include "qsd/cli.hpp"

int main(int argc, char** argv) { return qsd::run_cli(argc, argv); }
