#include "ecq/galois2.hpp"

#include "ecq/families.hpp"

namespace ecq {

std::string to_string(Mod2Image im) {
    switch (im) {
        case Mod2Image::Id: return "Id";
        case Mod2Image::C2: return "C2";
        case Mod2Image::C3: return "C3";
        case Mod2Image::S3: return "S3";
    }
    return "?";
}

int two_torsion_order(const ShortModel& e) {
    std::vector<Int> cubic{e.B, e.A, Int(0), Int(1)};
    return 1 + static_cast<int>(integer_roots(cubic).size());
}

Mod2Image mod2_image(const ShortModel& e) {
    bool square = is_perfect_square(e.discriminant()).has_value();
    bool trivial_two_torsion = two_torsion_order(e) == 1;
    if (square) return trivial_two_torsion ? Mod2Image::C3 : Mod2Image::Id;
    return trivial_two_torsion ? Mod2Image::S3 : Mod2Image::C2;
}

bool in_S2(const FermatParams& p) {
    ShortModel e = e_alt(p);  // throws on singular input
    std::vector<Int> cubic{e.B, e.A, Int(0), Int(1)};
    return integer_roots(cubic).size() == 3;
}

bool in_S3(const FermatParams& p) {
    ShortModel e = e_alt(p);
    Poly psi3 = division_polynomial(e, 3);
    Poly psi2 = division_polynomial(e, 2);
    for (const Rat& alpha : rational_roots(psi3))
        if (rational_is_square(psi2.eval(alpha))) return true;
    return false;
}

}  // namespace ecq
