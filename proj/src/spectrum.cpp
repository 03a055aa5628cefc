#include "sl4zeta/spectrum.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sl4zeta/numerics.hpp"
#include <json.hpp>

namespace sl4 {

namespace {

using nlohmann::json;

// Uniform double in [0,1) from the top 53 bits; fixed across platforms,
// unlike std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Rejection sampling from density ∝ sin²θ on [0, 2π).
double sample_weyl_angle(std::mt19937_64& rng) {
    for (;;) {
        double th = 2.0 * std::numbers::pi * next_unit(rng);
        double s = std::sin(th);
        if (next_unit(rng) <= s * s) return th;
    }
}

Angle draw_angle(std::mt19937_64& rng, const AngleLaw& law, bool second) {
    switch (law.kind) {
        case AngleLawKind::WeylMeasure:
            return Angle::irrational(sample_weyl_angle(rng));
        case AngleLawKind::Uniform:
            return Angle::irrational(2.0 * std::numbers::pi * next_unit(rng));
        case AngleLawKind::Fixed:
            return second ? law.fixed_phi : law.fixed_theta;
    }
    throw std::logic_error("draw_angle: unknown law");
}

Chi1Table unit_table(const AnglePair& a) {
    Chi1Table t;
    t.chi1_1 = 1.0;
    if (a.theta.is_rational) t.chi1_r1 = 1.0;
    if (a.phi.is_rational) t.chi1_r2 = 1.0;
    if (a.theta.is_rational && a.phi.is_rational) t.chi1_lcm = 1.0;
    return t;
}

}  // namespace

Spectrum generate_pnt_like(double x_max, std::uint64_t seed, double constant,
                           const AngleLaw& law) {
    if (!(constant > 0.0)) throw std::invalid_argument("generate_pnt_like: constant must be > 0");
    if (!(x_max > 2.0)) throw std::invalid_argument("generate_pnt_like: x_max must be > 2");

    Spectrum s;
    s.meta.generator = "pnt-like";
    s.meta.seed = seed;
    s.meta.constant = constant;

    std::mt19937_64 rng(seed);
    // Successive norms solve li(N_k) = k/constant. Each step is a Newton
    // solve on the local quadrature increment from the previous norm, with a
    // periodic re-anchor to the one-shot li to stop drift.
    static const std::function<double(double)> inv_log = [](double t) {
        return 1.0 / std::log(t);
    };
    double prev = 2.0, li_prev = 0.0;
    for (std::uint64_t k = 1;; ++k) {
        double target = static_cast<double>(k) / constant;
        double x = prev + (target - li_prev) * std::log(std::max(prev, 2.2));
        for (int it = 0; it < 40; ++it) {
            double r = li_prev + adaptive_simpson(inv_log, prev, x, 1e-13) - target;
            if (std::abs(r) < 1e-12) break;
            double xn = x - r * std::log(x);
            x = xn > prev ? xn : 0.5 * (x + prev);
        }
        if (x > x_max) break;
        li_prev = (k % 4096 == 0) ? li(x) : target;
        prev = x;
        PrimitiveClass c;
        c.l0 = std::log(x);
        c.angles.theta = draw_angle(rng, law, false);
        c.angles.phi = draw_angle(rng, law, true);
        c.chi = unit_table(c.angles);
        s.classes.push_back(c);
    }
    if (s.classes.empty())
        throw std::invalid_argument("generate_pnt_like: x_max too small to contain one class");
    return s;
}

namespace {

void validate_class(const PrimitiveClass& c, std::size_t idx, double prev_l0) {
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "spectrum validation: class " << idx << ": " << what;
        throw std::invalid_argument(os.str());
    };
    if (!(c.l0 > 0.0)) fail("l0 must be positive");
    if (c.l0 < prev_l0) fail("classes must be sorted ascending by l0");
    if (!(c.chi.chi1_1 > 0.0)) fail("chi1 must be positive");
    bool rt = c.angles.theta.is_rational, rp = c.angles.phi.is_rational;
    if (rt != c.chi.chi1_r1.has_value())
        fail(rt ? "chi1_r1 required for rational theta" : "chi1_r1 present without rational theta");
    if (rp != c.chi.chi1_r2.has_value())
        fail(rp ? "chi1_r2 required for rational phi" : "chi1_r2 present without rational phi");
    if ((rt && rp) != c.chi.chi1_lcm.has_value())
        fail((rt && rp) ? "chi1_lcm required when both angles are rational"
                        : "chi1_lcm present without two rational angles");
    for (const auto& v : {c.chi.chi1_r1, c.chi.chi1_r2, c.chi.chi1_lcm})
        if (v && !(*v > 0.0)) fail("chi1 entries must be positive");
    if (rt && rp) {
        long long q1 = c.angles.theta.q, q2 = c.angles.phi.q;
        if (q1 == q2 && *c.chi.chi1_r1 != *c.chi.chi1_r2)
            fail("chi1_r1 and chi1_r2 must agree when the minimal orders coincide");
        long long l = std::lcm(q1, q2);
        if (l == q1 && *c.chi.chi1_lcm != *c.chi.chi1_r1)
            fail("chi1_lcm must agree with chi1_r1 when lcm equals the theta order");
        if (l == q2 && *c.chi.chi1_lcm != *c.chi.chi1_r2)
            fail("chi1_lcm must agree with chi1_r2 when lcm equals the phi order");
    }
}

json angle_to_json(const Angle& a) {
    if (a.is_rational) return json::array({a.p, a.q});
    return json{{"irr", a.irr}};
}

Angle angle_from_json(const json& j, int line, const char* field) {
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "spectrum parse: line " << line << ": field '" << field << "': " << what;
        throw std::invalid_argument(os.str());
    };
    if (j.is_array()) {
        if (j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
            fail("rational angle must be [p, q] with integers");
        return Angle::rational(j[0].get<long long>(), j[1].get<long long>());
    }
    if (j.is_object() && j.contains("irr") && j["irr"].is_number())
        return Angle::irrational(j["irr"].get<double>());
    fail("expected [p, q] or {\"irr\": value}");
    return {};
}

}  // namespace

void validate(const Spectrum& s) {
    double prev = 0.0;
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
        validate_class(s.classes[i], i, prev);
        prev = s.classes[i].l0;
    }
}

std::string to_jsonl(const Spectrum& s) {
    std::ostringstream os;
    json hdr = {{"meta",
                 {{"generator", s.meta.generator},
                  {"seed", s.meta.seed},
                  {"constant", s.meta.constant}}}};
    os << hdr.dump() << '\n';
    for (const auto& c : s.classes) {
        json row;
        row["l0"] = c.l0;
        row["theta"] = angle_to_json(c.angles.theta);
        row["phi"] = angle_to_json(c.angles.phi);
        row["chi1"] = c.chi.chi1_1;
        if (c.chi.chi1_r1) row["chi1_r1"] = *c.chi.chi1_r1;
        if (c.chi.chi1_r2) row["chi1_r2"] = *c.chi.chi1_r2;
        if (c.chi.chi1_lcm) row["chi1_lcm"] = *c.chi.chi1_lcm;
        os << row.dump() << '\n';
    }
    return os.str();
}

Spectrum from_jsonl(const std::string& text) {
    Spectrum s;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "spectrum parse: line " << lineno << ": " << what;
        throw std::invalid_argument(os.str());
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(std::string("malformed JSON: ") + e.what());
        }
        if (!have_header) {
            if (!j.contains("meta")) fail("first record must carry the 'meta' field");
            const json& m = j["meta"];
            if (!m.contains("generator") || !m["generator"].is_string())
                fail("field 'meta.generator' missing or not a string");
            if (!m.contains("seed") || !m["seed"].is_number())
                fail("field 'meta.seed' missing or not a number");
            if (!m.contains("constant") || !m["constant"].is_number())
                fail("field 'meta.constant' missing or not a number");
            s.meta.generator = m["generator"].get<std::string>();
            s.meta.seed = m["seed"].get<std::uint64_t>();
            s.meta.constant = m["constant"].get<double>();
            have_header = true;
            continue;
        }
        PrimitiveClass c;
        if (!j.contains("l0") || !j["l0"].is_number()) fail("field 'l0' missing or not a number");
        c.l0 = j["l0"].get<double>();
        if (!j.contains("theta")) fail("field 'theta' missing");
        c.angles.theta = angle_from_json(j["theta"], lineno, "theta");
        if (!j.contains("phi")) fail("field 'phi' missing");
        c.angles.phi = angle_from_json(j["phi"], lineno, "phi");
        if (!j.contains("chi1") || !j["chi1"].is_number())
            fail("field 'chi1' missing or not a number");
        c.chi.chi1_1 = j["chi1"].get<double>();
        if (j.contains("chi1_r1")) c.chi.chi1_r1 = j["chi1_r1"].get<double>();
        if (j.contains("chi1_r2")) c.chi.chi1_r2 = j["chi1_r2"].get<double>();
        if (j.contains("chi1_lcm")) c.chi.chi1_lcm = j["chi1_lcm"].get<double>();
        s.classes.push_back(c);
    }
    if (!have_header) fail("empty input: missing meta header");
    validate(s);
    return s;
}

void save(const Spectrum& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("save: cannot open " + path);
    f << to_jsonl(s);
}

Spectrum load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load: cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return from_jsonl(os.str());
}

}  // namespace sl4
