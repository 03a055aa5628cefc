// spectrum.hpp — synthetic primitive-geodesic length spectra: the data
// substrate for the zeta and counting layers. The generator places primitive
// norms at li^{-1}(k/constant) so the primitive count below x is exactly
// ⌊constant·li(x)⌋, with angles drawn per law and χ₁ ≡ 1. Persistence is
// JSON-lines, one class per line, with a meta header.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl4zeta/euler_char.hpp"

namespace sl4 {

struct PrimitiveClass {
    double l0 = 0.0;  // primitive length, N(γ0) = e^{l0}
    AnglePair angles;
    Chi1Table chi;
};

struct SpectrumMeta {
    std::string generator = "manual";
    std::uint64_t seed = 0;
    double constant = 0.0;
};

struct Spectrum {
    std::vector<PrimitiveClass> classes;  // sorted ascending by l0
    SpectrumMeta meta;
};

enum class AngleLawKind { WeylMeasure, Uniform, Fixed };

struct AngleLaw {
    AngleLawKind kind = AngleLawKind::WeylMeasure;
    Angle fixed_theta, fixed_phi;  // Fixed only

    static AngleLaw weyl_measure() { return {AngleLawKind::WeylMeasure, {}, {}}; }
    static AngleLaw uniform() { return {AngleLawKind::Uniform, {}, {}}; }
    static AngleLaw fixed(const Angle& th, const Angle& ph) {
        return {AngleLawKind::Fixed, th, ph};
    }
};

// Deterministic in seed: byte-identical spectra for identical arguments.
Spectrum generate_pnt_like(double x_max, std::uint64_t seed, double constant,
                           const AngleLaw& law);

// Throws with the offending class index and field on invariant violations:
// positive sorted lengths, positive χ₁ entries, presence pattern matching the
// rationality of the angles, equal values at colliding exponents.
void validate(const Spectrum& s);

void save(const Spectrum& s, const std::string& path);
Spectrum load(const std::string& path);  // errors name line number and field

std::string to_jsonl(const Spectrum& s);
Spectrum from_jsonl(const std::string& text);

}  // namespace sl4
