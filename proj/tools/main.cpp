#include <vector>

#include "sl4zeta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sl4::cli_run(args);
}
