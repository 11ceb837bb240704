#include "cli.hpp"

int main(int argc, char** argv) { return mpt::cli::run(argc, argv); }
