#include "jack_fixture.hpp"

namespace stanleychar::cli {

const char* jack_fixture_text() {
  return "p1^3*q1 - 3*p1^2*q1^2 + p1*q1^3 + 3*p1^2*p2*q2 + 3*p1*p2^2*q2 + p2^3*q2"
         " - 3*p1*p2*q1*q2 - 3*p1*p2*q2^2 - 3*p2^2*q2^2 + p2*q2^3"
         " - 3*p1^2*q1*gamma + 3*p1*q1^2*gamma - 6*p1*p2*q2*gamma - 3*p2^2*q2*gamma + 3*p2*q2^2*gamma"
         " + 2*p1*q1*gamma^2 + 2*p2*q2*gamma^2 + p1*q1 + p2*q2";
}

Polynomial jack_fixture() { return parse_polynomial(jack_fixture_text()); }

}  // namespace stanleychar::cli
