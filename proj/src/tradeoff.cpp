#include "isac/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isac {

void Budget::validate() const {
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw std::invalid_argument("budget.total must be > 0 and finite");
    }
    if (steps < 2) throw std::invalid_argument("budget.steps must be >= 2");
}

void apply_allocation(const Budget& budget, double rho, SensingParams& sp, CommParams& cp) {
    const double share_s = rho * budget.total;
    const double share_c = (1.0 - rho) * budget.total;
    if (budget.kind == BudgetKind::power) {
        sp.p_s = share_s;
        cp.p_c = share_c;
    } else {
        sp.b_s = share_s;
        cp.b_c = share_c;
    }
}

Frontier sweep(const Budget& budget, const SensingParams& base_sp, const CommParams& base_cp,
               const Geometry& geo, const PhysicalConstants& consts, const SweepEngine& engine) {
    budget.validate();

    Frontier frontier;
    frontier.budget = budget;
    frontier.points.reserve(static_cast<std::size_t>(budget.steps));

    for (int i = 0; i < budget.steps; ++i) {
        const double rho = static_cast<double>(i) / static_cast<double>(budget.steps - 1);
        SensingParams sp = base_sp;
        CommParams cp = base_cp;
        apply_allocation(budget, rho, sp, cp);

        FrontierPoint point;
        point.rho = rho;
        point.share_s = budget.kind == BudgetKind::power ? sp.p_s : sp.b_s;
        point.share_c = budget.kind == BudgetKind::power ? cp.p_c : cp.b_c;
        point.source = engine.kind;

        try {
            if (engine.kind == EngineKind::analytic) {
                point.p_d = pd_analytic(sp, geo, consts, engine.quad).value;
                point.p_c = pc_analytic(cp, geo, consts, engine.quad).value;
            } else {
                McRunSpec mc = engine.mc;
                mc.stream_offset = engine.mc.stream_offset +
                                   static_cast<std::uint64_t>(i) * engine.mc.n_trials;
                point.p_d = run_detection(sp, geo, consts, mc).p_hat;
                point.p_c = run_coverage(cp, geo, consts, mc).p_hat;
            }
        } catch (const std::exception&) {
            point.eval_ok = false;
            point.p_d = std::numeric_limits<double>::quiet_NaN();
            point.p_c = std::numeric_limits<double>::quiet_NaN();
        }
        frontier.points.push_back(point);
    }

    pareto_filter(frontier.points);
    return frontier;
}

std::vector<FrontierPoint> pareto_filter(std::vector<FrontierPoint>& points) {
    for (auto& p : points) {
        p.dominated = false;
        if (!p.eval_ok) continue;
        for (const auto& other : points) {
            if (&other == &p || !other.eval_ok) continue;
            const bool no_worse = other.p_d >= p.p_d && other.p_c >= p.p_c;
            const bool strictly_better = other.p_d > p.p_d || other.p_c > p.p_c;
            if (no_worse && strictly_better) {
                p.dominated = true;
                break;
            }
        }
    }

    std::vector<FrontierPoint> front;
    for (const auto& p : points) {
        if (p.eval_ok && !p.dominated) front.push_back(p);
    }
    // Tie-break on p_c and rho so the output order is independent of the
    // input permutation.
    std::sort(front.begin(), front.end(), [](const FrontierPoint& a, const FrontierPoint& b) {
        if (a.p_d != b.p_d) return a.p_d < b.p_d;
        if (a.p_c != b.p_c) return a.p_c < b.p_c;
        return a.rho < b.rho;
    });
    return front;
}

} // namespace isac
