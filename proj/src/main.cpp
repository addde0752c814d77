/**
 * @file main.cpp
 * @brief Entry point for the s3surf command-line tool.
 */

#include "s3surf/cli.hpp"

int main(int argc, char** argv) { return s3surf::cli::run_main(argc, argv); }
