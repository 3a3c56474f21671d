#include "cli.hpp"

int main(int argc, char** argv) { return mcs::run_cli(argc, argv); }
