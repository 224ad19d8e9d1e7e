#include "qg/cli.hpp"

int main(int argc, char** argv) { return qg::cli_main(argc, argv); }
