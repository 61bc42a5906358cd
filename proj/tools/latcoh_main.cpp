#include "latcoh/cli.hpp"

int main(int argc, char** argv) {
    return latcoh::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
