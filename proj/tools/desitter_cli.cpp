#include <iostream>

#include "desitter/app.hpp"

int main(int argc, char** argv) { return desitter::app::main_entry(argc, argv, std::cout, std::cerr); }
