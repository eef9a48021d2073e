#include "tollgrid/cli.hpp"

int main(int argc, char** argv) { return tollgrid::cli::run(argc, argv); }
