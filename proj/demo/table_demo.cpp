// Prints H^2 and H^4 of SL2(Z[1/p]) for the first few primes and checks the
// N(p) oracle where enumeration is cheap.

#include <iostream>

#include "sl2coh/sl2coh.hpp"

int main() {
  for (auto p : sl2coh::primes_in(2, 40)) {
    std::cout << "p = " << p.value() << ": H^2 = " << sl2coh::sl2zp_entry(p, 2).to_string()
              << ", H^4 = " << sl2coh::sl2zp_entry(p, 4).to_string();
    if (p.value() > 3 && p.value() <= 31) {
      std::cout << ", N(p) = " << sl2coh::n_of_p(p)
                << " (orbit count gives " << sl2coh::n_of_p_oracle(p) << ")";
    }
    std::cout << "\n";
  }
}
