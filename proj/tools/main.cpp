#include "cdgl/cli.hpp"

int main(int argc, char** argv) { return cdgl::cli::run(argc, argv); }
