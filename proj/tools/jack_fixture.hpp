#pragma once

#include "stanleychar/exactpoly.hpp"

namespace stanleychar::cli {

/// The two-rectangle Jack deformation of Ch_3 (19 terms) in p1, p2, q1, q2,
/// gamma, stored as data. At gamma = 0 it reduces to
/// the ordinary Stanley polynomial of Ch_3.
Polynomial jack_fixture();

/// The same polynomial in the text grammar.
const char* jack_fixture_text();

}  // namespace stanleychar::cli
