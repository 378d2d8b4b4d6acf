"""Compare solver membership with the direct-definition oracle on random systems.

    python scripts/oracle_sweep.py --systems 500 --points 200 --max-n 6
"""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from fls.oracle import direct_possibility, random_system
from fls.solver import membership, solve


@dataclass
class SweepConfig:
    systems: int = 200
    points: int = 100
    max_n: int = 4
    seed: int = 0
    spread: float = 2.0


def sweep(cfg: SweepConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    worst, disagreements, rejected, total = 0.0, 0, 0, 0
    for k in range(cfg.systems):
        n = 1 + k % cfg.max_n
        sys = random_system(rng, n)
        sol = solve(sys)
        reach = np.abs(sol.inverse).sum(axis=1) * cfg.spread
        for x in sol.x_cr + rng.uniform(-1, 1, size=(cfg.points, n)) * reach:
            got = membership(sol, x).possibility
            want = direct_possibility(sys, x)
            total += 1
            if (got is None) != (want is None):
                disagreements += 1
            elif got is None:
                rejected += 1
            else:
                worst = max(worst, abs(got - want))
    return {"points": total, "not_a_solution": rejected, "disagreements": disagreements, "max_abs_diff": worst}


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    for name, default in vars(SweepConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = SweepConfig(**vars(parser.parse_args()))
    t0 = time.perf_counter()
    result = sweep(cfg)
    print(cfg)
    for key, value in result.items():
        print(f"{key:>16}: {value}")
    print(f"{'seconds':>16}: {time.perf_counter() - t0:.2f}")
