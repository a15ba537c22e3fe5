#include "ncrs/cli.hpp"

int main(int argc, char** argv) { return ncrs::run(argc, argv); }
