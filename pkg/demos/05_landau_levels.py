"""Landau levels: the magnetic Schroedinger operator behind the space.

The operator L = -d^2/(dz dzbar) + nu * zbar * d/dzbar acts on quasi-periodic
functions on the cylinder and factorizes as L = A* A with
A = d/dzbar (annihilation) and A* = -d/dz + nu*zbar (creation).  Its spectrum
is the ladder nu*m, m = 0, 1, 2, ..., each level spanned by explicit
Hermite-times-exponential eigenfunctions psi_{m,n}.  The ground level m = 0
is exactly the quasi-periodic Fock space of demos 02-04.

Everything here is checked two ways: exact coefficient bookkeeping on one
side, finite-difference differential operators on the other.
"""

import numpy as np

from thetafock import (
    LandauElement,
    SpaceParams,
    StripScheme,
    annihilation_apply,
    basis_psi,
    basis_psi_mn,
    creation_apply,
    eigen_residual,
    landau_apply,
    quasiperiod_residual,
    strip_inner_product,
)

POINTS = (0.2 + 0.1j, 0.6 - 0.4j, 0.35 + 0.5j)


def main():
    params = SpaceParams(nu=np.pi, alpha=0.3)
    scheme = StripScheme()

    print("=" * 72)
    print("1. Eigenfunctions: L psi_mn = nu m psi_mn  (finite differences)")
    print("=" * 72)
    for m in range(4):
        res = eigen_residual(m, 0, params, POINTS)
        print(f"level m={m}: eigenvalue {params.nu * m:8.5f},"
              f"  max FD residual {res:.3e}")

    print()
    print("=" * 72)
    print("2. The ground level is the Fock space")
    print("=" * 72)
    worst = 0.0
    for z in POINTS:
        worst = max(worst, abs(basis_psi_mn(0, 1, z, params) - basis_psi(1, z, params)))
    print(f"max |psi_(0,n) - psi_n| = {worst:.3e}")
    f0 = lambda z: basis_psi_mn(0, -1, z, params)
    print(f"annihilation kills it: max |A psi_(0,-1)| = "
          f"{max(abs(annihilation_apply(f0, z)) for z in POINTS):.3e}")
    print(f"functional equation residual: "
          f"{max(quasiperiod_residual(f0, z, 1, params) for z in (0.1+0.2j, 0.25j)):.3e}")

    print()
    print("=" * 72)
    print("3. Ladder operators, exact vs finite differences")
    print("=" * 72)
    # A* raises with coefficient -i sqrt(nu (m+1)); A lowers with i sqrt(nu m).
    m, n = 2, 1
    f = lambda z: basis_psi_mn(m, n, z, params)
    up_exact = lambda z: -1j * np.sqrt(params.nu * (m + 1)) * basis_psi_mn(m + 1, n, z, params)
    down_exact = lambda z: 1j * np.sqrt(params.nu * m) * basis_psi_mn(m - 1, n, z, params)
    up_err = max(abs(creation_apply(f, z, params) - up_exact(z)) for z in POINTS)
    down_err = max(abs(annihilation_apply(f, z) - down_exact(z)) for z in POINTS)
    print(f"raise  m={m}->{m+1}: max |FD - exact| = {up_err:.3e}")
    print(f"lower  m={m}->{m-1}: max |FD - exact| = {down_err:.3e}")

    # Coefficient-level ladders on a mixed element.
    elem = LandauElement(params, {(0, 0): 1.0, (1, 1): 0.5j, (2, -1): -0.3})
    up = {k: f"{v:.3f}" for k, v in elem.raised().coeff_dict().items()}
    down = {k: f"{v:.3f}" for k, v in elem.lowered().coeff_dict().items()}
    print(f"raised coefficients:  {up}")
    print(f"lowered coefficients: {down}")
    print("(lowering dropped the m=0 part, as A must)")

    print()
    print("=" * 72)
    print("4. Levels are orthogonal; projection picks one out")
    print("=" * 72)
    ip = strip_inner_product(
        lambda z: basis_psi_mn(0, 0, z, params),
        lambda z: basis_psi_mn(2, 0, z, params),
        params.nu,
        scheme,
    )
    print(f"<psi_(0,0), psi_(2,0)> = {abs(ip):.3e}")
    ground = elem.project_level(0)
    print(f"project_level(0) keeps: { {k: f'{v:.3f}' for k, v in ground.coeff_dict().items()} }")
    print(f"L f vs nu*m f on the m=1 slice: "
          f"{max(abs(landau_apply(lambda z: basis_psi_mn(1, 1, z, params), z, params) - params.nu * basis_psi_mn(1, 1, z, params)) for z in POINTS):.3e}")


if __name__ == "__main__":
    main()
