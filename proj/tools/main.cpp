#include "prefatt/cli.hpp"

int main(int argc, char** argv) { return prefatt::run_cli(argc, argv); }
