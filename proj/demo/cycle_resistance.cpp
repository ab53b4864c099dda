#include <cstdlib>
#include <iostream>

#include "walkreg/walkreg.hpp"

// Prints R_pi(C_n) for n = 3..N next to R_pi/n.
int main(int argc, char** argv) {
  const int upto = argc > 1 ? std::atoi(argv[1]) : 16;
  for (int n = 3; n <= upto; ++n) {
    const walkreg::Rational r = walkreg::r_pi(walkreg::cycle_graph(n));
    std::cout << "C_" << n << "  " << r << "  " << (r / walkreg::Rational(n)).to_double() << '\n';
  }
}
