#pragma once

#include <string>
#include <vector>

#include "gencon/reductions.hpp"
#include "gencon/solver.hpp"

namespace gencon {

/// One source instance pushed through its reduction and the kappa solver.
struct RoundtripOutcome {
    bool source_yes = false;              // oracle verdict on the source problem
    Decision decision = Decision::unknown;  // solver verdict on the reduced instance
    bool forward_witness_ok = true;       // oracle witness -> trees passes verification
    bool reverse_witness_ok = true;       // solver trees -> source witness is valid
    std::string error;

    bool unknown() const { return decision == Decision::unknown; }
    bool agrees() const { return !unknown() && (decision == Decision::certificate) == source_yes; }
};

struct RoundtripReport {
    std::vector<RoundtripOutcome> outcomes;
    int yes = 0;        // both sides yes
    int no = 0;         // both sides no
    int disagree = 0;
    int unknown = 0;           // budget exhausted
    int errors = 0;            // construction or oracle raised
    int witness_failures = 0;

    int total() const { return static_cast<int>(outcomes.size()); }
    int agree() const { return yes + no; }
    bool ok() const { return disagree == 0 && errors == 0 && witness_failures == 0; }
};

RoundtripOutcome roundtrip_one(const ThreeDMInstance& inst, Budget budget);
RoundtripOutcome roundtrip_one(const CnfFormula& phi, Budget budget);

/// Instances run in parallel; the report is identical to the serial one.
RoundtripReport roundtrip_3dm(const std::vector<ThreeDMInstance>& batch, Budget budget);
RoundtripReport roundtrip_3dm_serial(const std::vector<ThreeDMInstance>& batch, Budget budget);
RoundtripReport roundtrip_3sat(const std::vector<CnfFormula>& batch, Budget budget);
RoundtripReport roundtrip_3sat_serial(const std::vector<CnfFormula>& batch, Budget budget);

}  // namespace gencon
