#pragma once

#include <string>
#include <vector>

#include "pathft/lattice.hpp"

namespace pathft {

// One checked identity: deviations aggregated over all trials.
struct IdentityRecord {
    std::string name;
    double max_abs_dev{0.0};
    double max_rel_dev{0.0};
    bool pass{false};
    bool informational{false};  // reported but never fails the suite
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<IdentityRecord> records;

    bool pass() const {
        for (const IdentityRecord& r : records) {
            if (!r.informational && !r.pass) return false;
        }
        return true;
    }

    const IdentityRecord* find(const std::string& name) const {
        for (const IdentityRecord& r : records) {
            if (r.name == name) return &r;
        }
        return nullptr;
    }
};

}  // namespace pathft
