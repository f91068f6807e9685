"""Shared test helpers."""

from __future__ import annotations

import random

from allones import BitVec, Instance, SwitchType


def random_instance(rnd: random.Random, max_n: int = 64) -> Instance:
    """Random instance: edge density ~1/2, mixed switches, random states."""
    n = rnd.randint(1, max_n)
    edges = []
    for i in range(n - 1):
        row = rnd.getrandbits(n - i - 1)
        while row:
            low = row & -row
            edges.append((i, i + low.bit_length()))
            row ^= low
    switches = tuple(
        SwitchType.SIGMA if rnd.getrandbits(1) else SwitchType.SIGMA_PLUS
        for _ in range(n)
    )
    return Instance(n, edges, switches, BitVec(n, rnd.getrandbits(n)))
