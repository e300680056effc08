#include "updag/cli.hpp"
int main(int argc, char** argv) { return updag::cli_main(argc, argv); }
