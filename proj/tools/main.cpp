#include "cli_front.hpp"

int main(int argc, char** argv) {
    return switchsim::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
