#pragma once

#include <string>
#include <vector>

#include "perron/report.hpp"

namespace perron {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool ok() const;
};

// Recomputes every claim in a certificate from the certificate and matrix
// JSON alone, with exact arithmetic.
VerifyReport verify_certificate(const Json& certificate, const Json& matrix);

Json verify_json(const VerifyReport& report);

}  // namespace perron
