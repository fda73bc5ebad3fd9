// Writes the bundled encodings as json files into the directory given as
// argv[1] (default "data").
#include <fstream>
#include <iostream>
#include <string>

#include "nambuflow/bundled.hpp"
#include "nambuflow/graphs_io.hpp"

using namespace nambu;

static void put(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  f << body << "\n";
  if (!f) {
    std::cerr << "cannot write " << path << "\n";
    exit(1);
  }
  std::cout << "wrote " << path << "\n";
}

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  put(dir + "/gamma3.json", gs_to_json(bundled_gamma3()));
  put(dir + "/gamma5.json", gs_to_json(bundled_gamma5()));
  put(dir + "/sunflower_2d.json", ks_to_json(bundled_sunflower_2d()));
  put(dir + "/ham_gamma3.json", ks_to_json(bundled_ham_gamma3()));
  put(dir + "/ham_gamma5.json", ks_to_json(bundled_ham_gamma5()));
  return 0;
}
