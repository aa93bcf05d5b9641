#include "lzs/cli.hpp"

int main(int argc, char** argv) { return lzs::cli_main(argc, argv); }
