// Walks one degree-8 lambda from its polynomial to a witness tree, printing
// each intermediate object.

#include "arboreal/arboreal.hpp"

#include <iostream>

using namespace arboreal;

namespace {

void show(const WeightVector& w) {
    std::cout << "  " << to_string(w.set.side) << " {";
    for (std::size_t i = 0; i < w.set.ks.size(); ++i) std::cout << (i ? ", " : "") << w.set.ks[i];
    std::cout << "}  v = (";
    for (std::size_t i = 0; i < w.v.size(); ++i) std::cout << (i ? ", " : "") << w.v[i];
    std::cout << ")  delta = " << w.delta << "\n";
}

}  // namespace

int main() {
    const IntPolynomial f = parse_polynomial("x^8 - 44x^6 + 567x^4 - 2660x^2 + 3564");
    const IntPolynomial F = squares_min_poly(f);
    std::cout << "f = " << format_polynomial(f) << "\nF = " << format_polynomial(F) << "\n";

    const SquaresSpectrum spec = squared_spectrum(F);
    for (std::size_t i = 0; i < spec.degree(); ++i) {
        const auto iv = refine_interval(F, spec.root(i), Rational(1, 1000));
        std::cout << "  root " << i + 1 << " in (" << iv.lo.get_d() << ", " << iv.hi.get_d() << ")\n";
    }

    const auto left = weight_vector(F, *find_interlacing(spec, Side::left));
    const auto right = weight_vector(F, *find_interlacing(spec, Side::right));
    show(left);
    show(right);

    const GammaElement pos = signed_delta(F, left);
    const GammaElement neg = signed_delta(F, right);
    const Certificate cert = certificate_from_pair(F, pos, neg);
    std::cout << "certificate " << format_coefficient_map(cert.a) << " verified=" << cert.verified << "\n";

    const RootedStarTree tree = build_tree(cert.a);
    std::cout << "tree " << format_tree_name(tree.branches()) << " has " << tree.vertex_count() << " vertices\n";

    if (auto small = search_min_tree(F, 110, 30, 1))
        std::cout << "smallest found: " << format_tree_name(small->certificate.a) << " on "
                  << small->tree.vertex_count() << " vertices\n";
}
