#pragma once

#include "error.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "gcd.hpp"
#include "weights.hpp"
#include "derivation.hpp"
#include "parse.hpp"
#include "matrix.hpp"
#include "saito.hpp"
#include "groebner.hpp"
#include "wme.hpp"
#include "families.hpp"
#include "certificate_json.hpp"
