#include <fstream>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  try {
    const auto config = dyadisc::cli::parse_args(argc, argv, std::cout);
    if (!config) {
      return 0;
    }
    if (config->out_path.empty()) {
      return dyadisc::cli::run(*config, std::cout);
    }
    std::ofstream file(config->out_path, std::ios::binary);
    if (!file) {
      std::cerr << "dyadisc: cannot open " << config->out_path << " for writing\n";
      return 2;
    }
    const int status = dyadisc::cli::run(*config, file);
    file.flush();
    if (!file) {
      std::cerr << "dyadisc: write to " << config->out_path << " failed\n";
      return 2;
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "dyadisc: " << e.what() << '\n';
    return 2;
  }
}
