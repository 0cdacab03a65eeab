// Reads a frame (default: three complex vectors in C^2), prints its bounds,
// its nearest normalized tight frame and, when one exists, its symmetric
// orthogonalization.
//
//   basic_usage [frame.json]

#include <framekit/framekit.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

framekit::Frame load(int argc, char** argv) {
    if (argc < 2) {
        framekit::ComplexMatrix f(2, 3);
        f << framekit::Complex(1.0, 0.0), framekit::Complex(0.0, -1.0), framekit::Complex(0.5, 0.5),
            framekit::Complex(0.0, 0.5), framekit::Complex(2.0, 0.0), framekit::Complex(-0.5, 0.5);
        return framekit::Frame(f, "built-in");
    }
    std::ifstream in(argv[1]);
    std::stringstream text;
    text << in.rdbuf();
    return framekit::parse_frame(text.str());
}

} // namespace

int main(int argc, char** argv) {
    try {
        const framekit::Frame frame = load(argc, argv);
        const framekit::FrameClass c = framekit::classify(frame);
        std::cout << "frame '" << frame.label() << "': " << frame.size() << " vectors in C^" << frame.ambient_dim()
                  << ", rank " << c.rank << ", kernel dimension " << c.kernel_dim << "\n";
        std::cout << "bounds C = " << c.bounds.lower << ", D = " << c.bounds.upper
                  << (c.is_tight ? " (tight)" : "") << "\n";

        const framekit::ApproximationResult a = framekit::symmetric_approximation(frame);
        std::cout << "\nnearest normalized tight frame, squared distance " << a.distance << ":\n"
                  << a.nu.columns() << "\n";

        const framekit::OrthogonalizationResult o = framekit::loewdin_orthogonalization(frame);
        if (o.exists) {
            std::cout << "\nsymmetric orthogonalization" << (o.unique ? "" : " (one of many)")
                      << ", squared distance " << o.distance << ":\n"
                      << o.nu->columns() << "\n";
        } else {
            std::cout << "\nno orthonormal system of " << frame.size() << " vectors fits in C^"
                      << frame.ambient_dim() << "\n";
        }
    } catch (const framekit::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
