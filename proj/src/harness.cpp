#include "gencon/harness.hpp"

namespace gencon {

RoundtripOutcome roundtrip_one(const ThreeDMInstance& inst, Budget budget) {
    RoundtripOutcome out;
    try {
        auto matching = solve_3dm_brute(inst);
        out.source_yes = matching.has_value();
        ReducedInstance red = reduce_3dm(inst);
        if (matching) {
            auto cert = matching_to_trees(inst, *matching);
            out.forward_witness_ok = cert.size() == static_cast<std::size_t>(red.threshold) &&
                                     verify_certificate(red.graph, red.terminals, cert).valid;
        }
        DecideResult dec = decide_kappa_at_least(red.graph, red.terminals, red.threshold, budget);
        out.decision = dec.decision;
        if (dec.decision == Decision::certificate) {
            try {
                out.reverse_witness_ok = is_perfect_matching(inst, trees_to_matching(inst, dec.certificate));
            } catch (const Error& e) {
                out.reverse_witness_ok = false;
                out.error = e.what();
            }
        }
    } catch (const Error& e) {
        out.error = e.what();
        out.decision = Decision::unknown;
    }
    return out;
}

RoundtripOutcome roundtrip_one(const CnfFormula& phi, Budget budget) {
    RoundtripOutcome out;
    try {
        auto assignment = solve_sat_brute(phi);
        out.source_yes = assignment.has_value();
        ReducedInstance red = reduce_3sat(phi);
        if (assignment) {
            auto cert = assignment_to_trees(phi, *assignment);
            out.forward_witness_ok = cert.size() == 2 && verify_certificate(red.graph, red.terminals, cert).valid;
        }
        DecideResult dec = decide_kappa_at_least(red.graph, red.terminals, red.threshold, budget);
        out.decision = dec.decision;
        if (dec.decision == Decision::certificate) {
            try {
                out.reverse_witness_ok = satisfies(phi, trees_to_assignment(phi, dec.certificate));
            } catch (const Error& e) {
                out.reverse_witness_ok = false;
                out.error = e.what();
            }
        }
    } catch (const Error& e) {
        out.error = e.what();
        out.decision = Decision::unknown;
    }
    return out;
}

namespace {

RoundtripReport summarize(std::vector<RoundtripOutcome> outcomes) {
    RoundtripReport r;
    for (const auto& o : outcomes) {
        if (o.unknown() && !o.error.empty())
            ++r.errors;
        else if (o.unknown())
            ++r.unknown;
        else if (!o.agrees())
            ++r.disagree;
        else if (o.source_yes)
            ++r.yes;
        else
            ++r.no;
        if (!o.forward_witness_ok || !o.reverse_witness_ok) ++r.witness_failures;
    }
    r.outcomes = std::move(outcomes);
    return r;
}

template <class Instance>
RoundtripReport run_serial(const std::vector<Instance>& batch, Budget budget) {
    std::vector<RoundtripOutcome> outcomes;
    outcomes.reserve(batch.size());
    for (const auto& inst : batch) outcomes.push_back(roundtrip_one(inst, budget));
    return summarize(std::move(outcomes));
}

template <class Instance>
RoundtripReport run_parallel(const std::vector<Instance>& batch, Budget budget) {
    std::vector<RoundtripOutcome> outcomes(batch.size());
    const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) outcomes[i] = roundtrip_one(batch[i], budget);
    return summarize(std::move(outcomes));
}

}  // namespace

RoundtripReport roundtrip_3dm(const std::vector<ThreeDMInstance>& batch, Budget budget) {
    return run_parallel(batch, budget);
}
RoundtripReport roundtrip_3dm_serial(const std::vector<ThreeDMInstance>& batch, Budget budget) {
    return run_serial(batch, budget);
}
RoundtripReport roundtrip_3sat(const std::vector<CnfFormula>& batch, Budget budget) {
    return run_parallel(batch, budget);
}
RoundtripReport roundtrip_3sat_serial(const std::vector<CnfFormula>& batch, Budget budget) {
    return run_serial(batch, budget);
}

}  // namespace gencon
