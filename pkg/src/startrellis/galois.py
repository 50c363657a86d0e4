"""Arithmetic in GF(2^m) and in polynomial rings over it.

Field elements are plain integers in [0, 2^m).  Bit i of the integer holds
the coefficient of alpha^i, so the constant term sits in the least
significant bit.  Polynomials over the field are Python lists of element
integers with the constant term first; the zero polynomial is the empty
list and has degree ``NEG_INF``.
"""

from __future__ import annotations

NEG_INF = float("-inf")

# Default primitive polynomial per extension degree, LSB = constant term.
PRIMITIVE_POLYS = {
    2: 0b111,                  # x^2 + x + 1
    3: 0b1011,                 # x^3 + x + 1
    4: 0b10011,                # x^4 + x + 1
    5: 0b100101,               # x^5 + x^2 + 1
    6: 0b1000011,              # x^6 + x + 1
    7: 0b10001001,             # x^7 + x^3 + 1
    8: 0b100011101,            # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,           # x^9 + x^4 + 1
    10: 0b10000001001,         # x^10 + x^3 + 1
    11: 0b100000000101,        # x^11 + x^2 + 1
    12: 0b1000001010011,       # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,      # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,     # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,    # x^15 + x + 1
    16: 0b10001000000001011,   # x^16 + x^12 + x^3 + x + 1
}


class NonPrimitivePolynomialError(ValueError):
    """The modulus polynomial does not make x generate the whole multiplicative group."""


class GF:
    """GF(2^m) with log/antilog tables; immutable after construction.

    Safe to share between threads and processes: every method is pure.
    """

    def __init__(self, m: int, primitive_poly: int | None = None):
        if not 2 <= m <= 16:
            raise ValueError(f"extension degree m={m} outside supported range [2, 16]")
        if primitive_poly is None:
            primitive_poly = PRIMITIVE_POLYS[m]
        if primitive_poly.bit_length() != m + 1:
            raise ValueError(f"modulus degree {primitive_poly.bit_length() - 1} != m={m}")
        self.m = m
        self.q = 1 << m
        self.primitive_poly = primitive_poly

        # x must be a unit mod the polynomial, i.e. the constant term is 1.
        if not primitive_poly & 1:
            raise NonPrimitivePolynomialError(
                f"polynomial {primitive_poly:#b} is divisible by x"
            )

        exp = [0] * (2 * (self.q - 1))
        log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            if x == 1 and i > 0:
                raise NonPrimitivePolynomialError(
                    f"x has order {i} < {self.q - 1} modulo {primitive_poly:#b}"
                )
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.q:
                x ^= primitive_poly
        if x != 1:
            raise NonPrimitivePolynomialError(
                f"x does not return to 1 after {self.q - 1} steps modulo {primitive_poly:#b}"
            )
        for i in range(self.q - 1, 2 * (self.q - 1)):
            exp[i] = exp[i - (self.q - 1)]
        self.exp_table = tuple(exp)
        self.log_table = tuple(log)

    def __repr__(self) -> str:
        return f"GF(2^{self.m}, poly={self.primitive_poly:#b})"

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.exp_table[self.q - 1 - self.log_table[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by 0 in GF(2^m)")
        if a == 0:
            return 0
        return self.exp_table[self.log_table[a] - self.log_table[b] + self.q - 1]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 raised to a negative power")
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def alpha_pow(self, i: int) -> int:
        """alpha^i for any integer i (exponent taken mod 2^m - 1)."""
        return self.exp_table[i % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)


# ----------------------------------------------------------------------------
# Polynomials, constant term first.  Helpers keep results trimmed so that
# len(p) == degree + 1 for nonzero p and the zero polynomial is [].


def poly_trim(p: list[int]) -> list[int]:
    d = len(p)
    while d > 0 and p[d - 1] == 0:
        d -= 1
    return list(p[:d])


def poly_degree(p: list[int]) -> int | float:
    p = poly_trim(p)
    return len(p) - 1 if p else NEG_INF


def poly_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return poly_trim(out)


def poly_scale(field: GF, p: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return poly_trim([field.mul(x, c) for x in p])


def poly_mul(field: GF, a: list[int], b: list[int]) -> list[int]:
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] ^= field.mul(x, y)
    return poly_trim(out)


def poly_divmod(field: GF, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder with a = q*b + r and deg r < deg b."""
    a, b = poly_trim(a), poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    rem = list(a)
    quo = [0] * (len(a) - len(b) + 1)
    lead_inv = field.inv(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        coef = field.mul(rem[i + len(b) - 1], lead_inv)
        quo[i] = coef
        if coef:
            for j, y in enumerate(b):
                if y:
                    rem[i + j] ^= field.mul(coef, y)
    return poly_trim(quo), poly_trim(rem)


def poly_eval(field: GF, p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(poly_trim(p)):
        acc = field.mul(acc, x) ^ c
    return acc


def poly_deriv(p: list[int]) -> list[int]:
    """Formal derivative in characteristic 2: even-power terms vanish."""
    return poly_trim([p[i] if i % 2 == 1 else 0 for i in range(1, len(p))])


def poly_from_roots(field: GF, roots: list[int]) -> list[int]:
    """Monic product of (x - r) over the given roots."""
    out = [1]
    for r in roots:
        out = poly_mul(field, out, [r, 1])
    return out


def cyclotomic_coset(j: int, m: int) -> set[int]:
    """Orbit of j under doubling mod 2^m - 1."""
    mod = (1 << m) - 1
    if not 0 <= j < mod:
        raise ValueError(f"coset representative {j} outside [0, {mod})")
    coset = set()
    x = j
    while x not in coset:
        coset.add(x)
        x = (2 * x) % mod
    return coset


def minimal_polynomial(field: GF, beta: int) -> list[int]:
    """Minimal polynomial of beta over GF(2), as a binary coefficient list."""
    if beta == 0:
        return [0, 1]
    j = field.log_table[beta]
    roots = [field.alpha_pow(e) for e in sorted(cyclotomic_coset(j, field.m))]
    p = poly_from_roots(field, roots)
    assert all(c in (0, 1) for c in p), "conjugate product is not binary"
    return p
