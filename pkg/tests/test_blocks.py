"""Pair axioms are blocks of the bialgebra axioms on A (+) H.

For arbitrary (antisymmetric) data the residual of LB, L2 and CL2 on the
double bicrosssum splits along the direct-sum decomposition, and each block
is, up to a fixed sign, the residual of one of the pair axioms.  This ties
every transcribed pair axiom to the three single-object axioms.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidlie import graded
from braidlie.constructions import DoubleBicrosssumSpec, build_double_bicrosssum
from braidlie.graded import compose_all, tensor
from braidlie.structures import MAP_NAMES, ActionData, BraidedLieBialgebra, PairBundle, check_axiom, map_signature

from strategies import SYMMETRIC_GROUPS, graded_objects, morphisms

# (pair axiom, axiom on D, summand indices in, summand indices out, sign); 0 = A, 1 = H
BLOCKS = [
    ("SLB", "LB", (0, 0), (0, 0), 1),
    ("SLB-R", "LB", (1, 1), (1, 1), 1),
    ("B1", "LB", (1, 0), (0, 0), 1),
    ("B2", "LB", (1, 0), (1, 1), 1),
    ("B3", "LB", (0, 0), (1, 0), 1),
    ("B4", "LB", (1, 1), (1, 0), 1),
    ("B5", "LB", (1, 0), (1, 0), 1),
    ("M1", "L2", (1, 0, 0), (0,), -1),
    ("M2", "L2", (1, 1, 0), (1,), 1),
    ("MOD", "L2", (1, 1, 0), (0,), 1),
    ("MOD-R", "L2", (1, 0, 0), (1,), -1),
    ("CM1", "CL2", (0,), (1, 0, 0), -1),
    ("CM2", "CL2", (1,), (1, 1, 0), 1),
    ("COMOD", "CL2", (0,), (1, 1, 0), 1),
    ("COMOD-R", "CL2", (1,), (1, 0, 0), -1),
]


@st.composite
def bundles(draw):
    group = draw(st.sampled_from(SYMMETRIC_GROUPS))
    A = draw(graded_objects("A", group=group, min_dim=1, max_dim=2, symmetric=True))
    H = draw(graded_objects("H", group=group, min_dim=1, max_dim=2, symmetric=True))

    def lie(o):
        C = graded.braiding(o, o)
        br = draw(morphisms((o, o), (o,)))
        cb = draw(morphisms((o,), (o, o)))
        return BraidedLieBialgebra(o, br - graded.compose(br, C), cb - graded.compose(C, cb))

    maps = ActionData(*(draw(morphisms(*map_signature(n, A, H))) for n in MAP_NAMES))
    return PairBundle(lie(A), lie(H), maps)


def block(residual, ds, ins, outs):
    return compose_all(tensor(*(ds.proj(k) for k in outs)), residual, tensor(*(ds.inj(k) for k in ins)))


@given(bundles())
def test_pair_axioms_are_blocks_of_the_double(b):
    res = build_double_bicrosssum(DoubleBicrosssumSpec(b.A, b.H, b.maps))
    on_D = {a: check_axiom(res.D, a).residual for a in ("LB", "L2", "CL2")}
    for name, ax, ins, outs, sign in BLOCKS:
        blk = block(on_D[ax], res.summands, ins, outs)
        pair = check_axiom(b, name).residual
        assert blk == pair.scale(sign), name


@pytest.mark.parametrize("name, ax, ins, outs, sign", BLOCKS)
def test_block_table_signatures(name, ax, ins, outs, sign):
    from braidlie.registry import axiom
    from braidlie.diagram import infer_signature
    from braidlie.registry import definitions

    dom, cod = infer_signature(axiom(name).lhs, definitions=definitions())
    roles = ("A", "H")
    assert dom == tuple(roles[k] for k in ins)
    assert cod == tuple(roles[k] for k in outs)
