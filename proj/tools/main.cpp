#include <iostream>
#include <string>
#include <vector>

#include "zstr_cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zstr::cli::run(args, std::cout, std::cerr, zstr::cli::process_environment());
}
