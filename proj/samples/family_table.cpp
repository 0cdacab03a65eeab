// Prints truncation diagnostics for every built-in family.

#include <framekit/framekit.hpp>

#include <cstdio>

int main() {
    const std::vector<framekit::FamilySpec> families{
        framekit::ShiftWeighted{framekit::Complex(2.0)}, framekit::EvenOdd{}, framekit::SumSpike{},
        framekit::DifferenceChain{}, framekit::GeometricKernel{}};
    const std::vector<framekit::Index> sizes{4, 8, 16, 32, 64};

    for (const auto& spec : families) {
        std::printf("%s\n  %5s %14s %14s %14s %6s %14s\n", framekit::family_name(spec).c_str(), "size",
                    "|I-|F||_2", "|P-|F||_2", "|F|", "ker", "|I-F*F|_2");
        for (const auto& d : framekit::diagnostics(spec, sizes)) {
            std::printf("  %5ld %14.9f %14.9f %14.9f %6ld %14.9f\n", static_cast<long>(d.size), d.hs_I_minus_absF,
                        d.hs_P_minus_absF, d.operator_norm, static_cast<long>(d.kernel_dim), d.hs_I_minus_gram);
        }
    }
    return 0;
}
