#include <zinbiel/cli.hpp>

int main(int argc, char** argv) { return zinbiel::cli::run_command(argc, argv); }
