#include "qss/cli.hpp"

int main(int argc, char** argv) { return qss::run_cli(argc, argv); }
