/*******************************************************************************
 * @file:   shmpart_main.cc
 ******************************************************************************/
#include <iostream>

#include "shmpart/cli/cli.h"

int main(int argc, char *argv[]) {
  return shmpart::cli::run(argc, argv, std::cout, std::cerr);
}
