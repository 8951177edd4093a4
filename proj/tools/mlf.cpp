#include "mlf/cli/app.hpp"

int main(int argc, char** argv) { return mlf::cli::run(argc, argv); }
