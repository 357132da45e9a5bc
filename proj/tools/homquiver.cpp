#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "homquiver/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json = std::find(args.begin(), args.end(), "--json") != args.end();
    homquiver::Report rep = homquiver::run_command(args);
    if (json) std::cout << homquiver::render_machine(rep);
    else std::cout << homquiver::render_human(rep);
    return rep.exit_code;
}
