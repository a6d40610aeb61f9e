// dar_main.cpp — Entry point of the `dar` command-line tool

#include <iostream>

#include "dar/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return dar::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
