#include "pps/harness.hpp"

int main(int argc, char** argv) { return pps::cli_main(argc, argv); }
