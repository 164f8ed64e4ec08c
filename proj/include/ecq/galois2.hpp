#pragma once

#include <string>

#include "ecq/curves.hpp"
#include "ecq/fermat.hpp"

namespace ecq {

/// Image of the mod-2 Galois representation inside GL2(F2) = S3.
enum class Mod2Image { Id, C2, C3, S3 };

std::string to_string(Mod2Image im);

/// 1 + #{rational roots of X^3 + AX + B}, one of 1, 2, 4.
int two_torsion_order(const ShortModel& e);

/// Classification by discriminant squareness and rational 2-torsion:
///   square,    order 1  -> C3      nonsquare, order 1  -> S3
///   square,    order >1 -> Id      nonsquare, order >1 -> C2
Mod2Image mod2_image(const ShortModel& e);

/// Psi_2 of the generic square-discriminant curve at p splits into three
/// integer-rooted linear factors. The integer-root requirement is literal,
/// but vacuous here: rational roots of a monic integer cubic are integers.
bool in_S2(const FermatParams& p);

/// Some rational alpha has Psi_3(alpha) = 0 with Psi_2(alpha) a rational
/// square (equivalently, the curve has a rational 3-torsion point).
bool in_S3(const FermatParams& p);

}  // namespace ecq
