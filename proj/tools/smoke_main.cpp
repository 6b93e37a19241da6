// Temporary smoke check: cross-validate the engine against known values.
#include <cstdio>

#include "catgate/config.hpp"
#include "catgate/experiment.hpp"
#include "catgate/serialize.hpp"

using namespace catgate;

int main() {
    Config cfg = default_config();
    cfg.sim.n_a = cfg.sim.n_b = 5;
    cfg.sim.tail_epsilon = 1e-3;
    GateSettings st = make_gate_settings(cfg);
    const DerivedParams d = derive(cfg.system);
    std::printf("lambda/2pi=%.6f chi/2pi=%.6f t1=%.6f residual=%.3e\n",
                rad_us_to_mhz(d.lambda), rad_us_to_mhz(d.chi), d.t1, d.stark_residual());

    const InitialStateSpec pi4(two_pi / 8, two_pi / 8);
    GateResult green = run_gate(ModelTier::green, pi4, cfg.system, cfg.noise, st);
    std::printf("green: F=%.9f (%.3f s)\n", green.fidelity, green.runtime_s);

    NoiseParams off{};
    GateResult red_coh = run_gate(ModelTier::red, pi4, cfg.system, off, st);
    std::printf("red coherent-only: F=%.6f (%.1f s)\n", red_coh.fidelity, red_coh.runtime_s);

    GateResult blue = run_gate(ModelTier::blue, pi4, cfg.system, cfg.noise, st);
    std::printf("blue: F=%.6f trace_drift=%.2e (%.1f s)\n", blue.fidelity,
                blue.diag.trace_drift, blue.runtime_s);

    GateResult red = run_gate(ModelTier::red, pi4, cfg.system, cfg.noise, st);
    std::printf("red: F=%.6f trace_drift=%.2e leak=%.2e (%.1f s)\n", red.fidelity,
                red.diag.trace_drift, red.diag.leakage_ef, red.runtime_s);
    return 0;
}
