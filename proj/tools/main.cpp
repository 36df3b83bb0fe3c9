#include "cli_app.hpp"

int main(int argc, char** argv) { return bentkit::cli::run(argc, argv); }
