#!/usr/bin/env python3
"""Walkthrough of the pydiscretejordan library.

Builds the reference complexes, classifies points, checks separation on a
grid and a torus, and runs the bounded contraction search.

Usage:
    python example.py
"""
# ruff: noqa: T201

import logging

from pydiscretejordan import (
    Budget,
    SeparationMode,
    Verdict,
    check_contractible,
    contract_to_point,
    generate,
    is_simple_surface_point,
    separation_check,
)
from pydiscretejordan.exceptions import DiscreteTopologyError

RING = ["r1c1", "r1c2", "r1c3", "r2c3", "r3c3", "r3c2", "r3c1", "r2c1"]
MERIDIAN = ["r0c0", "r0c1", "r0c2", "r0c3"]


def show_points() -> None:
    """Classify a few points of the reference complexes."""
    for kind, point in [("grid", "r1c1"), ("grid", "r0c0"), ("bowtie", "p")]:
        cx = generate(kind).build()
        simple = is_simple_surface_point(cx.region(), point)
        print(f"  {kind:8} {point:6} simple surface point: {simple}")


def show_separation() -> None:
    """Separate a grid and fail to separate a torus."""
    grid = generate("grid", n=5).build()
    for mode in SeparationMode:
        report = separation_check(grid.region(), RING, mode)
        print(f"  grid ring ({mode}): {report.count} components")

    torus = generate("torus-grid", n=4).build()
    report = separation_check(torus.region(), MERIDIAN)
    print(f"  torus meridian: {report.count} component, holds={report.holds}")


def show_contraction() -> None:
    """Contract a ring on the grid and look for refutations on the torus."""
    grid = generate("grid", n=5).build()
    region = grid.region()
    result = contract_to_point(region, region.graph.cycle(RING), "r1c1")
    if result.verdict is Verdict.VERIFIED and result.certificate is not None:
        print(f"  ring contracts in {len(result.certificate)} steps")
    else:
        print(f"  ring contraction: {result.verdict} ({result.reason})")

    torus = generate("torus-grid", n=4).build()
    report = check_contractible(torus.region(), Budget(max_cycle_len=4))
    print(f"  torus: {report.verdict}, {len(report.witnesses)} witnesses")


def main() -> None:
    """Run every walkthrough section."""
    logging.basicConfig(level=logging.WARNING)
    try:
        print("Points:")
        show_points()
        print("Separation:")
        show_separation()
        print("Contraction:")
        show_contraction()
    except DiscreteTopologyError as err:
        print(f"Error: {err}")


if __name__ == "__main__":
    main()
