#include "koiter/tools/cli.hpp"

int main(int argc, char** argv) { return koiter::tools::run(argc, argv); }
