#include <oitrd/cli.hpp>

int main(int argc, char** argv) { return oitrd::cli::run_main(argc, argv); }
