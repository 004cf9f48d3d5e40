"""Worst-case residuals of the cost identities as the grid widens.

    python scripts/cost_residuals.py --grid 100
"""
import argparse
from dataclasses import dataclass, field

from ledgerkernel.cost import calibration_ratio, check_grid


@dataclass
class Config:
    grid: int = 100
    spans: list = field(default_factory=lambda: [1e1, 1e3, 1e6, 1e9])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, default=Config.grid)
    cfg = Config(grid=ap.parse_args().grid)
    print("span\treciprocity\tcomposition\tmin_cost")
    for s in cfg.spans:
        r = check_grid(cfg.grid, 1 / s, s)
        print(f"{s:g}\t{r.reciprocity:.3e}\t{r.composition:.3e}\t{r.min_cost:.3e}")
    print("t\t|ratio-1|\tt^2/12")
    for k in range(1, 9):
        t = 10.0 ** -k
        print(f"{t:g}\t{abs(calibration_ratio(t) - 1):.3e}\t{t * t / 12:.3e}")


if __name__ == "__main__":
    main()
