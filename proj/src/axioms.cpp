#include "exactla/axioms.hpp"

#include <functional>
#include <string>

#include "exactla/error.hpp"
#include "exactla/json_io.hpp"

namespace exactla {

VerificationReport axiom_spotcheck(const Ring& ring, std::span<const std::array<RingElement, 3>> samples)
{
    VerificationReport report;
    report.identity = "ring_axioms";
    report.inputs["ring"] = ring_to_json(ring);
    report.inputs["samples"] = nlohmann::json::array();
    for (const auto& s : samples) {
        for (const auto& x : s)
            require_same_ring(ring, x.ring, "axiom_spotcheck");
        report.inputs["samples"].push_back({to_json(s[0]), to_json(s[1]), to_json(s[2])});
    }
    report.residual = element_to_json(ring, ring.zero());

    const auto zero = int_embed(ring, 0);
    const auto one = int_embed(ring, 1);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [a, b, c] = samples[i];
        const std::pair<const char*, std::pair<RingElement, RingElement>> laws[] = {
            {"add_commutative", {a + b, b + a}},
            {"mul_commutative", {a * b, b * a}},
            {"add_associative", {(a + b) + c, a + (b + c)}},
            {"mul_associative", {(a * b) * c, a * (b * c)}},
            {"distributive", {a * (b + c), a * b + a * c}},
            {"add_identity", {a + zero, a}},
            {"mul_identity", {a * one, a}},
            {"mul_zero", {a * zero, zero}},
            {"add_inverse", {a + (-a), zero}},
        };
        for (const auto& [name, sides] : laws) {
            if (!(sides.first == sides.second)) {
                report.outcome = Outcome::failed;
                report.note = std::string(name) + " violated by sample " + std::to_string(i);
                report.residual = to_json(sides.first - sides.second);
                return report;
            }
        }
    }
    return report;
}

} // namespace exactla
