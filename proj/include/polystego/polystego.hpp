#pragma once

// Syndrome-coding LSB steganography in the polynomial domain: the hidden
// message is the remainder of the cover's LSB polynomial modulo a generator
// polynomial, so embedding needs the generator (n-k+1 bits) instead of an
// (n-k) x n parity matrix.

#include "polystego/bench.hpp"
#include "polystego/codec.hpp"
#include "polystego/errors.hpp"
#include "polystego/gf2poly.hpp"
#include "polystego/lcdm.hpp"
#include "polystego/matrix_baseline.hpp"
#include "polystego/oracle.hpp"
#include "polystego/stego_io.hpp"
#include "polystego/types.hpp"
