"""Binary-string encoding of a W-symbol alphabet with one-flip reconfigurability.

A string s in {T,F}^W encodes symbol index 1 when every entry is F, and
otherwise the largest index holding T.  Between any two strings there is a
one-flip path whose intermediate strings all decode to one of the two
endpoint values; enc_path constructs it.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from ..errors import DomainError

Bits = tuple  # of bool, True = T


def enc(s: Sequence[bool]) -> int:
    """Decode a binary string to a symbol index in 1..W."""
    if len(s) < 1:
        raise DomainError("enc needs a string of length >= 1")
    for i in range(len(s) - 1, -1, -1):
        if s[i]:
            return i + 1
    return 1


def enc_preimages(alpha: int, w: int) -> list:
    """All strings decoding to alpha, in lexicographic order (F before T)."""
    if not 1 <= alpha <= w:
        raise DomainError(f"symbol index {alpha} outside 1..{w}")
    out = []
    for prefix in product((False, True), repeat=alpha - 1):
        out.append(prefix + (True,) + (False,) * (w - alpha))
    if alpha == 1:
        out.append((False,) * w)
    return sorted(out)


def lex_smallest_preimage(alpha: int, w: int) -> Bits:
    return enc_preimages(alpha, w)[0]


def enc_path(s: Sequence[bool], t: Sequence[bool]) -> list:
    """One-flip path from s to t through the two endpoint code classes.

    Consecutive strings differ in exactly one entry and every string decodes
    to enc(s) or enc(t).  Deterministic: differing entries are flipped in
    ascending index order within each phase.
    """
    s, t = tuple(s), tuple(t)
    if len(s) != len(t):
        raise DomainError("strings must have equal length")
    w = len(s)
    if s == t:
        return [s]
    a, b = enc(s), enc(t)
    if a < w and b < w:
        # last entry is F on both sides; recurse on the prefixes
        inner = enc_path(s[:-1], t[:-1])
        return [u + (False,) for u in inner]
    if a == w and b == w:
        # entry w stays T, so every intermediate decodes to w
        path = [s]
        cur = list(s)
        for i in range(w - 1):
            if cur[i] != t[i]:
                cur[i] = t[i]
                path.append(tuple(cur))
        return path
    if a == w and b < w:
        # align the prefix with t while entry w holds T, then drop entry w
        path = [s]
        cur = list(s)
        for i in range(w - 1):
            if cur[i] != t[i]:
                cur[i] = t[i]
                path.append(tuple(cur))
        cur[w - 1] = False
        path.append(tuple(cur))
        return path
    return list(reversed(enc_path(t, s)))
