#include <iostream>

#include "oseq_app.hpp"

int main(int argc, char** argv) { return oseq::cli::run_app(argc, argv, std::cout, std::cerr); }
