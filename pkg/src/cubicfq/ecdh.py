"""Diffie-Hellman on a cubic whose group identity O is a shared secret.

This is a simulator for studying the scheme on toy fields.  There is no
constant-time arithmetic and no key derivation: the key is the text of the
shared point.  Do not use it to protect anything.
"""

from __future__ import annotations

import queue
import random
import struct
from dataclasses import dataclass, field
from functools import cached_property

from .cubic import CubicCurve
from .group import CurveGroup, GroupError
from .plane import ProjPoint, normalize

TAG = "ECDH1"


class EcdhError(ValueError):
    pass


class DecodeError(EcdhError):
    pass


@dataclass
class SessionParams:
    curve: CubicCurve
    base: ProjPoint
    identity: ProjPoint  # secret, agreed out of band

    def __post_init__(self):
        F = self.curve.spec
        self.base = normalize(F, self.base)
        self.identity = normalize(F, self.identity)
        try:
            self.group._check(self.base)
        except GroupError as exc:
            raise EcdhError(f"base point: {exc}") from exc
        if self.order < 2:
            raise EcdhError("base point has order 1 in this group")

    @cached_property
    def group(self) -> CurveGroup:
        return CurveGroup(self.curve, self.identity)

    @property
    def N(self) -> ProjPoint:
        return self.group.N

    @cached_property
    def order(self) -> int:
        return self.group.order(self.base)


def default_base(curve: CubicCurve, identity) -> ProjPoint:
    """First point (enumeration order) of largest order in the O-group."""
    G = CurveGroup(curve, identity)
    best, best_order = None, 0
    for P in G.elements:
        o = G.order(P)
        if o > best_order:
            best, best_order = P, o
    return best


def keygen(params: SessionParams, rng: random.Random) -> tuple[int, ProjPoint]:
    secret = rng.randrange(1, params.order)
    return secret, params.group.scalar_mul(secret, params.base)


def shared_point(secret: int, peer_public, params: SessionParams) -> ProjPoint:
    try:
        return params.group.scalar_mul(secret, peer_public)
    except GroupError as exc:
        raise EcdhError(f"peer point rejected: {exc}") from exc


def derive(secret: int, peer_public, params: SessionParams) -> bytes:
    return str(shared_point(secret, peer_public, params)).encode("ascii")


# -- wire format --------------------------------------------------------------

@dataclass(frozen=True)
class WireMessage:
    q: int
    point: ProjPoint

    def encode(self) -> bytes:
        x, y, z = self.point
        return f"{TAG}|q={self.q}|pt={x}:{y}:{z}".encode("ascii")

    @classmethod
    def decode(cls, data: bytes) -> "WireMessage":
        try:
            text = data.decode("ascii")
            tag, qpart, ppart = text.split("|")
            if tag != TAG or not qpart.startswith("q=") or not ppart.startswith("pt="):
                raise ValueError
            q = int(qpart[2:])
            coords = tuple(int(v) for v in ppart[3:].split(":"))
            if len(coords) != 3 or not any(coords) or min(coords) < 0 or max(coords) >= q:
                raise ValueError
        except (UnicodeDecodeError, ValueError) as exc:
            raise DecodeError(f"malformed message {data!r}") from exc
        return cls(q, ProjPoint(*coords))


def frame(payload: bytes) -> bytes:
    return struct.pack(">I", len(payload)) + payload


def read_frame(stream) -> bytes:
    head = _read_exact(stream, 4)
    (length,) = struct.unpack(">I", head)
    return _read_exact(stream, length)


def _read_exact(stream, n: int) -> bytes:
    buf = b""
    while len(buf) < n:
        chunk = stream.read(n - len(buf))
        if not chunk:
            raise DecodeError("stream closed mid-frame")
        buf += chunk
    return buf


# -- transports ---------------------------------------------------------------

class Endpoint:
    def __init__(self, inbox: queue.Queue, outbox: queue.Queue):
        self._in, self._out = inbox, outbox

    def send(self, data: bytes):
        self._out.put(data)

    def recv(self) -> bytes:
        return self._in.get(timeout=5)


class InMemoryTransport:
    """Ordered, reliable duplex channel between two endpoints."""

    def __init__(self):
        ab, ba = queue.Queue(), queue.Queue()
        self.a = Endpoint(ba, ab)
        self.b = Endpoint(ab, ba)

    def endpoints(self):
        return self.a, self.b


class StreamEndpoint:
    """Length-prefixed frames over a pair of binary streams."""

    def __init__(self, reader, writer):
        self.reader, self.writer = reader, writer

    def send(self, data: bytes):
        self.writer.write(frame(data))
        self.writer.flush()

    def recv(self) -> bytes:
        return read_frame(self.reader)


class ByteStreamTransport:
    """Two endpoints joined by a connected socket pair."""

    def __init__(self):
        import socket

        self._socks = socket.socketpair()
        s1, s2 = self._socks
        self.a = StreamEndpoint(s1.makefile("rb"), s1.makefile("wb"))
        self.b = StreamEndpoint(s2.makefile("rb"), s2.makefile("wb"))

    def endpoints(self):
        return self.a, self.b

    def close(self):
        for s in self._socks:
            s.close()


# -- parties ------------------------------------------------------------------

class Party:
    def __init__(self, name: str, params: SessionParams, rng: random.Random, secret: int | None = None):
        self.name = name
        self.params = params
        self.rng = rng
        self.state = "init"
        self._secret = secret
        self.public: ProjPoint | None = None
        self.peer_public: ProjPoint | None = None
        self.key: bytes | None = None

    def send_public(self, endpoint) -> bytes:
        if self.state != "init":
            raise EcdhError(f"{self.name}: cannot send in state {self.state}")
        if self._secret is None:
            self._secret, self.public = keygen(self.params, self.rng)
        else:
            self.public = self.params.group.scalar_mul(self._secret, self.params.base)
        msg = WireMessage(self.params.curve.spec.q, self.public).encode()
        endpoint.send(msg)
        self.state = "sent-public"
        return msg

    def receive(self, endpoint) -> bytes:
        if self.state != "sent-public":
            raise EcdhError(f"{self.name}: cannot receive in state {self.state}")
        data = endpoint.recv()
        msg = WireMessage.decode(data)
        if msg.q != self.params.curve.spec.q:
            raise EcdhError(f"{self.name}: field mismatch, got q={msg.q}")
        self.peer_public = msg.point
        self.key = derive(self._secret, msg.point, self.params)
        self.state = "derived"
        return data

    @property
    def secret(self) -> int | None:
        return self._secret


@dataclass
class Transcript:
    messages: list = field(default_factory=list)  # (sender, bytes)
    secrets: tuple = ()
    key_a: bytes = b""
    key_b: bytes = b""

    @property
    def agreed(self) -> bool:
        return self.key_a == self.key_b

    def lines(self) -> list[str]:
        out = []
        for sender, data in self.messages:
            out.append(f"message from={sender} frame={data.decode('ascii')}")
        out.append(f"key_a={self.key_a.decode('ascii')} key_b={self.key_b.decode('ascii')}")
        out.append(f"agreed={'yes' if self.agreed else 'no'}")
        return out


def run_session(params: SessionParams, rng: random.Random | None = None, transport=None,
                secrets: tuple | None = None) -> Transcript:
    rng = rng or random.SystemRandom()
    transport = transport or InMemoryTransport()
    end_a, end_b = transport.endpoints()
    sa, sb = secrets if secrets else (None, None)
    alice = Party("A", params, rng, sa)
    bob = Party("B", params, rng, sb)
    t = Transcript()
    t.messages.append(("A", alice.send_public(end_a)))
    t.messages.append(("B", bob.send_public(end_b)))
    alice.receive(end_a)
    bob.receive(end_b)
    t.secrets = (alice.secret, bob.secret)
    t.key_a, t.key_b = alice.key, bob.key
    if not t.agreed:
        raise AssertionError("honest parties derived different keys")
    return t


@dataclass(frozen=True)
class Mismatch:
    identity: ProjPoint
    wrong_identity: ProjPoint
    alpha: int
    beta: int
    honest: ProjPoint
    eavesdropper: ProjPoint


def eavesdrop(params: SessionParams, wrong_identity, alpha: int, beta_public) -> ProjPoint:
    """What someone knowing alpha but assuming identity O' derives from beta P."""
    G2 = CurveGroup(params.curve, wrong_identity)
    return G2.scalar_mul(alpha, beta_public)


def find_mismatch(params: SessionParams, wrong_identity, limit: int = 20) -> Mismatch | None:
    G = params.group
    O2 = normalize(params.curve.spec, wrong_identity)
    for alpha in range(1, limit + 1):
        for beta in range(1, limit + 1):
            beta_pub = G.scalar_mul(beta, params.base)
            honest = G.scalar_mul(alpha, beta_pub)
            guess = eavesdrop(params, O2, alpha, beta_pub)
            if guess != honest:
                return Mismatch(params.identity, O2, alpha, beta, honest, guess)
    return None
