#include "commands.hpp"

int main(int argc, char** argv) { return vbcli::run_command(argc, argv); }
