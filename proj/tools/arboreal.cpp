#include "cli_app.hpp"

int main(int argc, char** argv) { return arboreal::cli::run_command(argc, argv); }
