#include "wonderkit/cli.hpp"

int main(int argc, char** argv) { return wonderkit::run_cli(argc, argv); }
