#include "noncontact/cli.hpp"

int main(int argc, char** argv) { return noncontact::cli::run(argc, argv); }
