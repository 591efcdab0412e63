#include <iostream>

#include "qformff/cli.hpp"

int main(int argc, char** argv) { return qff::cli::main(argc, argv, std::cout, std::cerr); }
