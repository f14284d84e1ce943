#include "cli_app.hpp"

int main(int argc, char** argv) { return negwit::cli::run_cli(argc, argv); }
