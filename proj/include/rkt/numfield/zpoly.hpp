#pragma once

#include "rkt/core/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rkt::numfield {

// Integer polynomial, coefficients low degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);
// Exact division by a monic g over Z; nullopt-like false if g does not divide f.
bool divide_monic(const ZPoly& f, const ZPoly& g, ZPoly& quotient);

Poly to_poly(const ZPoly& f);
// Scales a nonzero rational polynomial to a primitive integer one with positive leading coefficient.
ZPoly primitive_integer(const Poly& f);

Integer resultant(const ZPoly& f, const ZPoly& g);  // Sylvester determinant
Integer discriminant(const ZPoly& f);               // monic f

// Irreducible monic factors of a monic integer polynomial, with multiplicities,
// sorted by degree then coefficients.
std::vector<std::pair<ZPoly, unsigned>> factor_monic(const ZPoly& f);
bool is_irreducible(const ZPoly& f);
// Number of irreducible factors (with multiplicity) of a monic polynomial.
std::size_t count_irreducible_factors(const ZPoly& f);

// Degrees of the irreducible factors of f mod p; f must be squarefree mod p
// and p an odd prime not dividing the leading coefficient.
std::vector<unsigned> factor_degrees_mod_p(const ZPoly& f, std::uint64_t p);

}  // namespace rkt::numfield
