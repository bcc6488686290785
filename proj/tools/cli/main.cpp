#include "commands.hpp"

int main(int argc, char** argv) { return cohesion::cli::run(argc, argv); }
