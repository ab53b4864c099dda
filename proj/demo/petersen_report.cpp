// Classify the Petersen graph and print the report as JSON.
#include <iostream>

#include "walkreg/walkreg.hpp"

int main() {
  const walkreg::Graph g = walkreg::petersen_graph();
  std::cout << walkreg::to_json(walkreg::classify(g)).dump(2) << '\n';
}
