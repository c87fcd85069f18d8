#include "cli.hpp"

int main(int argc, char** argv) { return gqchar::cli::run(argc, argv); }
