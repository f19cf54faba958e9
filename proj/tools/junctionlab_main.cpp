#include "junctionlab/cli.hpp"

int main(int argc, char** argv) { return junctionlab::run_cli(argc, argv); }
