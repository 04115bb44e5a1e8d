#include "sec/io.hpp"

int main(int argc, char** argv) { return sec::run_cli(argc, argv); }
