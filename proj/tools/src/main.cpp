#include <iostream>

#include "amspace/app/app.hpp"

int main(int argc, char** argv) { return amspace::app::run_cli(argc, argv, std::cout, std::cerr); }
