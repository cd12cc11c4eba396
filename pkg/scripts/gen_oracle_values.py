#!/usr/bin/env python3
"""Regenerate the frozen 30-digit reference values used in the tests.

Run and compare against the constants in tests/test_special.py,
tests/test_hardy.py, tests/test_arith.py, tests/test_mellin.py.
Requires mpmath (dev-time only; the package itself never imports it).
"""

import mpmath as mp

mp.mp.dps = 30


def main() -> None:
    rows = [
        ("SQRT_PI = gamma(1/2)", mp.gamma(mp.mpf(1) / 2)),
        ("GAMMA_2P5_3J", mp.gamma(mp.mpc(2.5, 3))),
        ("GAMMA_M1P5_0P5J", mp.gamma(mp.mpc(-1.5, 0.5))),
        ("ZETA_2", mp.zeta(2)),
        ("ZETA_HALF", mp.zeta(mp.mpf(1) / 2)),
        ("ZETA_HALF_25J", mp.zeta(mp.mpc(0.5, 25))),
        ("CHI_2 = -2 pi^2", mp.pi ** mp.mpf("1.5") * mp.gamma(mp.mpf(-1) / 2)),
        ("FIRST_ZERO", mp.im(mp.zetazero(1))),
        ("THETA_ZERO", mp.findroot(mp.siegeltheta, 17.8)),
        ("Z_10", mp.siegelz(10)),
        ("Z_100", mp.siegelz(100)),
        ("TWO_GAMMA_MINUS_LOG_2PI", 2 * mp.euler - mp.log(2 * mp.pi)),
        ("ZETA_3", mp.zeta(3)),
    ]
    for name, value in rows:
        print(f"{name:28s} = {value}")


if __name__ == "__main__":
    main()
