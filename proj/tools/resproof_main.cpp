#include "resproof/cli.hpp"

int main(int argc, char** argv) { return resproof::run_cli(argc, argv); }
