// Ground state of two light particles bound to a static third particle of
// charge Z = 1, and the critical charge above which binding is guaranteed.

#include <cstdio>

#include "skeleton/skeleton.hpp"

int main() {
    using namespace skeleton;

    const Geometry geometry = derive_geometry({kInfiniteMass, 1.0});
    const auto grid = share(build_grid(QuadratureConfig{200}));
    const auto states = solve_bound_states(build_sector(geometry, SectorId::PP, grid));
    for (const auto& s : states) {
        std::printf("PP state: k* = %.15f  E = %.15f\n", s.k_star, s.energy_dimensionless);
    }

    const CriticalPoint cp = z_critical_ub(kInfiniteMass);
    std::printf("Z_c^ub(static) = %.16f\n", cp.z_c_ub);
    std::printf("K(0,0) at Z = 0.5: %.6f\n", k00(derive_geometry({kInfiniteMass, 0.5})).value);
    return 0;
}
