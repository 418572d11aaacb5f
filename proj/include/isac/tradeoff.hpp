#pragma once

#include <vector>

#include "isac/analytic.hpp"
#include "isac/montecarlo.hpp"

namespace isac {

enum class BudgetKind { power, bandwidth };
enum class EngineKind { analytic, montecarlo };

// A shared resource swept with equality: the sensing side gets rho * total,
// the communication side (1 - rho) * total, over a uniform rho grid that
// includes both endpoints.
struct Budget {
    BudgetKind kind = BudgetKind::power;
    double total = 0.0;  // W or Hz
    int steps = 101;

    void validate() const;
};

struct FrontierPoint {
    double rho = 0.0;      // allocation fraction to sensing
    double share_s = 0.0;  // p_s or b_s, linear units
    double share_c = 0.0;  // p_c or b_c, linear units
    double p_d = 0.0;
    double p_c = 0.0;
    bool dominated = false;
    EngineKind source = EngineKind::analytic;
    bool eval_ok = true;  // false when an engine failed at this grid point
};

struct Frontier {
    Budget budget;
    std::vector<FrontierPoint> points;  // ordered by rho, exactly budget.steps entries
};

struct SweepEngine {
    EngineKind kind = EngineKind::analytic;
    QuadratureSpec quad;
    McRunSpec mc;  // used when kind == montecarlo; stream offsets advance per grid point
};

// Applies the allocation to copies of the base parameters. A bandwidth
// budget re-derives both noise powers and both SINR thresholds downstream,
// since b_s enters gamma_s as well as n0.
void apply_allocation(const Budget& budget, double rho, SensingParams& sp, CommParams& cp);

Frontier sweep(const Budget& budget, const SensingParams& base_sp, const CommParams& base_cp,
               const Geometry& geo, const PhysicalConstants& consts, const SweepEngine& engine);

// Marks dominated points in place and returns the non-dominated subset
// ordered by p_d ascending. A point is dominated when another point is at
// least as good in both metrics and strictly better in one.
std::vector<FrontierPoint> pareto_filter(std::vector<FrontierPoint>& points);

} // namespace isac
