#include "autoconv/cli.hpp"

int main(int argc, char** argv) { return autoconv::cli::run(argc, argv); }
