#include "hahnosc/cli.hpp"

int main(int argc, char** argv) { return hahnosc::run_cli(argc, argv); }
