"""Random small algebras inside upper-triangular matrices.

Instances are built from a seeded ``random.Random`` so that a single integer
reproduces them; the hypothesis strategies only draw that seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from hypothesis import strategies as st

from relhom.algebra import (Algebra, SubalgebraEmbedding, generated_subalgebra, left_ideal,
                            right_ideal)
from relhom.exactla import QQ, solve_linear
from relhom.fixtures import upper_triangular
from relhom.module import (ModuleRep, character_module, quotient_module, regular_left,
                           regular_right)

# closed sets of strictly upper matrix units (with all diagonal units: dim <= 5)
_CLOSED = {2: [[], [(1, 2)]],
           3: [[], [(1, 2)], [(1, 3)], [(2, 3)], [(1, 2), (1, 3)], [(1, 3), (2, 3)]]}


@dataclass
class Instance:
    seed: int
    a: Algebra
    s: SubalgebraEmbedding
    # a -> a_ii for each diagonal position of the ambient matrices
    chars: list[list]

    def __repr__(self):
        return f"Instance(seed={self.seed}, dim A={self.a.dim}, dim S={self.s.sub.dim})"


def _element(rng: random.Random, a: Algebra, density: float) -> dict:
    vec = {}
    for k in range(a.dim):
        if rng.random() < density:
            c = rng.randint(-2, 2)
            if c:
                vec[k] = QQ(c)
    return vec


def _incidence_gens(rng: random.Random, ut: Algebra, n: int) -> list[dict]:
    """Matrix units of a random incidence algebra, conjugated by a random
    unipotent matrix so the basis is not the obvious one."""
    units = rng.choice(_CLOSED[n])
    p = {ut.index(f"E{i}{i}"): QQ(1) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = rng.randint(-2, 2)
            if c:
                p[ut.index(f"E{i}{j}")] = QQ(c)
    p_inv = {k: c for k, c in enumerate(solve_linear(ut.left_mult(p), dict(ut.unit))) if c}
    return [ut.mul(ut.mul(p, {ut.index(f"E{i}{j}"): QQ(1)}), p_inv)
            for i, j in [(i, i) for i in range(1, n + 1)] + units]


def random_instance(seed: int, max_dim: int = 5, max_sub: int = 3) -> Instance:
    """``A`` with ``2 <= dim A <= max_dim`` and ``S`` (generated by one random
    element of ``A``, or by an idempotent of ``A``) with ``dim S <= max_sub``."""
    rng = random.Random(seed)
    while True:
        n = rng.choice((2, 3))
        ut = upper_triangular(n)
        if rng.random() < 0.5:
            gens = [_element(rng, ut, rng.choice((0.4, 0.8))) for _ in range(rng.randint(1, 2))]
        else:
            gens = _incidence_gens(rng, ut, n)
        amb = generated_subalgebra(ut, gens)
        if 2 <= amb.sub.dim <= max_dim:
            break
    a = amb.sub
    idems = [v for v in (_element(rng, a, 0.7) for _ in range(30))
             if v and a.mul(v, v) == v and v != a.unit]
    while True:
        if idems and rng.random() < 0.4:
            gens = [rng.choice(idems)]
        elif rng.random() < 0.2:
            gens = []
        else:
            gens = [_element(rng, a, rng.choice((0.4, 0.9)))]
        emb = generated_subalgebra(a, gens)
        if emb.sub.dim <= max_sub:
            break
    diag = [ut.index(f"E{i}{i}") for i in range(1, n + 1)]
    chars = [[amb.incl.col(b).get(d, 0) for b in range(a.dim)] for d in diag]
    return Instance(seed, a, emb, chars)


def random_left_module(rng: random.Random, inst: Instance) -> ModuleRep:
    a = inst.a
    kind = rng.choice(["regular", "cyclic", "character"])
    if kind == "character":
        return character_module(a, rng.choice(inst.chars), "left")
    if kind == "cyclic":
        q, _ = quotient_module(regular_left(a), left_ideal(a, [_element(rng, a, 0.6)]))
        if q.dim:
            return q
    return regular_left(a)


def random_right_module(rng: random.Random, inst: Instance) -> ModuleRep:
    a = inst.a
    kind = rng.choice(["regular", "cyclic", "character"])
    if kind == "character":
        return character_module(a, rng.choice(inst.chars), "right")
    if kind == "cyclic":
        q, _ = quotient_module(regular_right(a), right_ideal(a, [_element(rng, a, 0.6)]))
        if q.dim:
            return q
    return regular_right(a)


seeds = st.integers(min_value=0, max_value=2**32 - 1)
instances = seeds.map(random_instance)
