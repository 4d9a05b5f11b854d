import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicfq.canon import CanonicalSpec, build
from cubicfq.ecdh import (
    ByteStreamTransport,
    DecodeError,
    EcdhError,
    InMemoryTransport,
    Party,
    SessionParams,
    WireMessage,
    default_base,
    derive,
    eavesdrop,
    find_mismatch,
    frame,
    keygen,
    run_session,
    shared_point,
)
from cubicfq.plane import ProjPoint
from oracle import weierstrass_affine_add

O_INF = ProjPoint(0, 1, 0)


def params_for(q, c, d, identity=O_INF):
    C = build(CanonicalSpec.make("weierstrass", c=c, d=d), q)
    return SessionParams(C, default_base(C, identity), identity)


class FixedRng:
    def __init__(self, value):
        self.value = value

    def randrange(self, a, b):
        return self.value


def test_secret_one_and_inverse():
    params = params_for(5, 0, 1)
    G = params.group
    assert keygen(params, FixedRng(1))[1] == params.base
    assert keygen(params, FixedRng(params.order - 1))[1] == G.neg(params.base)


def test_doubling_on_f5_matches_affine_formula():
    params = params_for(5, 0, 1)
    assert params.order == 6
    P = params.base
    _, public = keygen(params, FixedRng(2))
    x, y = P[0] * pow(P[2], -1, 5) % 5, P[1] * pow(P[2], -1, 5) % 5
    want = weierstrass_affine_add(5, 0, (x, y), (x, y))
    assert (public[0] * pow(public[2], -1, 5) % 5, public[1] * pow(public[2], -1, 5) % 5) == want


def test_both_sides_derive_the_same_point():
    params = params_for(5, 0, 1)
    G = params.group
    a, b = 2, 3
    A, B = G.scalar_mul(a, params.base), G.scalar_mul(b, params.base)
    assert shared_point(a, B, params) == shared_point(b, A, params) == G.scalar_mul(6, params.base)
    assert derive(a, B, params) == str(G.O).encode("ascii")


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 20), st.integers(1, 20))
def test_scalar_commutativity(a, b):
    params = params_for(7, 1, 3)
    G = params.group
    assert G.scalar_mul(a, G.scalar_mul(b, params.base)) == G.scalar_mul(b, G.scalar_mul(a, params.base))


def test_peer_point_off_curve_is_rejected():
    params = params_for(5, 0, 1)
    with pytest.raises(EcdhError):
        shared_point(2, ProjPoint(1, 1, 1), params)


def test_wire_round_trip():
    msg = WireMessage(7, ProjPoint(1, 2, 2))
    assert msg.encode() == b"ECDH1|q=7|pt=1:2:2"
    assert WireMessage.decode(msg.encode()) == msg
    assert frame(b"abc") == b"\x00\x00\x00\x03abc"
    for bad in (b"ECDH2|q=7|pt=1:2:2", b"ECDH1|q=7|pt=1:2", b"ECDH1|q=7|pt=0:0:0",
                b"ECDH1|q=7|pt=9:1:1", b"\xff", b"ECDH1|q=x|pt=1:1:1"):
        with pytest.raises(DecodeError):
            WireMessage.decode(bad)


def test_party_state_machine():
    params = params_for(5, 0, 1)
    a, b = InMemoryTransport().endpoints()
    p = Party("A", params, random.Random(0))
    with pytest.raises(EcdhError):
        p.receive(a)
    p.send_public(a)
    assert p.state == "sent-public"
    with pytest.raises(EcdhError):
        p.send_public(a)


def test_field_mismatch_is_rejected():
    params = params_for(5, 0, 1)
    a, b = InMemoryTransport().endpoints()
    p = Party("A", params, random.Random(0))
    p.send_public(a)
    b.send(WireMessage(7, ProjPoint(0, 1, 0)).encode())
    with pytest.raises(EcdhError):
        p.receive(a)


def test_sessions_over_sockets():
    params = params_for(7, 1, 3)
    transport = ByteStreamTransport()
    try:
        t = run_session(params, random.Random(1), transport)
    finally:
        transport.close()
    assert t.agreed and len(t.messages) == 2
    assert t.lines()[-1] == "agreed=yes"


def test_seeded_sessions_are_reproducible():
    params = params_for(11, 2, 5)
    t1 = run_session(params, random.Random(9))
    t2 = run_session(params, random.Random(9))
    assert t1.messages == t2.messages and t1.key_a == t2.key_a


def test_documented_mismatch_on_f7():
    params = params_for(7, 1, 3)
    assert params.base == ProjPoint(1, 2, 2) and params.order == 6
    wrong = ProjPoint(1, 0, 3)
    m = find_mismatch(params, wrong)
    assert (m.alpha, m.beta) == (2, 1)
    assert m.honest == ProjPoint(1, 1, 6) and m.eavesdropper == ProjPoint(1, 5, 2)


@pytest.mark.parametrize("alpha", range(1, 8))
def test_wrong_identity_shifts_by_a_multiple_of_the_offset(alpha):
    # the O'-law is P + Q - O' in the O-law
    params = params_for(7, 1, 3)
    G = params.group
    wrong = ProjPoint(1, 0, 3)
    B = G.scalar_mul(3, params.base)
    want = G.sub(G.scalar_mul(alpha, B), G.scalar_mul(alpha - 1, wrong))
    assert eavesdrop(params, wrong, alpha, B) == want


def test_base_must_have_order_at_least_two():
    C = build(CanonicalSpec.make("weierstrass", c=0, d=1), 5)
    with pytest.raises(EcdhError):
        SessionParams(C, O_INF, O_INF)
    with pytest.raises(EcdhError):
        SessionParams(C, ProjPoint(1, 1, 1), O_INF)
