#include "vhx/cli.hpp"

int main(int argc, char** argv) { return vhx::run(argc, argv); }
