// Certify z*(x^2 - y^2*z) with one tensor and print the certificate.

#include <iostream>

#include <freediv/freediv.hpp>

using namespace freediv;

int main() {
  auto R = parse_ring("x:4,y:2,z:4");
  auto f = parse_poly("z*(x^2 - y^2*z)", R);
  auto rep = wme_freeness(f, {parse_derivation("2*x; 2*y; 0", R)});
  if (!rep.free) {
    std::cerr << rep.failed << ": " << rep.message << "\n";
    return 1;
  }
  std::cout << serialize(*rep.certificate) << "\n";
  return verify_certificate(*rep.certificate).ok ? 0 : 1;
}
