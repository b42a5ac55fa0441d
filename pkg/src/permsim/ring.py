"""Ring selection: prime fields Z_p or exact integers."""

from __future__ import annotations

from dataclasses import dataclass

MERSENNE_61 = (1 << 61) - 1

# Deterministic Miller-Rabin witnesses, sufficient for every n < 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for ``n < 2**64``."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= 1 << 64:
        raise ValueError("primality test is only deterministic below 2**64")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingConfig:
    """Either ``Z_p`` (``p`` prime) or the exact integers (``p is None``)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @classmethod
    def mod(cls, p: int = MERSENNE_61) -> "RingConfig":
        return cls(p)

    @classmethod
    def exact(cls) -> "RingConfig":
        return cls(None)

    @property
    def is_exact(self) -> bool:
        return self.p is None

    def reduce(self, x: int) -> int:
        return int(x) if self.p is None else int(x) % self.p

    def __str__(self) -> str:
        return "ZZ" if self.p is None else f"GF({self.p})"


EXACT = RingConfig.exact()
