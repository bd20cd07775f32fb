#include "framecomp/cli.hpp"

int main(int argc, char** argv) { return framecomp::run_cli(argc, argv); }
