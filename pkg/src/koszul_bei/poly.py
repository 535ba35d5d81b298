"""Sparse polynomials over the rationals, lex orders and Buchberger's algorithm.

Monomials are dense exponent tuples indexed by the variables of a
:class:`Ring`; a :class:`MonomialOrder` permutes those tuples so that lex
comparison becomes plain tuple comparison.
"""

import os
import re
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, CostGuardError

X, Y, AUX = "x", "y", "t"

DEFAULT_GB_SECONDS = 60.0
SELECTIONS = ("normal", "fifo", "lifo")


@dataclass(frozen=True, order=True)
class VarId:
    kind: str
    index: int = 0

    def __str__(self):
        return AUX if self.kind == AUX else f"{self.kind}{self.index}"


def parse_var(name):
    if name == AUX:
        return VarId(AUX, 0)
    m = re.fullmatch(r"([xy])(\d+)", name)
    if not m:
        raise ValueError(f"unknown variable {name!r}")
    return VarId(m.group(1), int(m.group(2)))


class Ring:
    """Polynomial ring over Q on an ordered tuple of variables."""

    __slots__ = ("variables", "index")

    def __init__(self, variables):
        self.variables = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        if len(self.index) != len(self.variables):
            raise ValueError("duplicate ring variables")
        if sum(v.kind == AUX for v in self.variables) > 1:
            raise ValueError("at most one auxiliary variable per ring")

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"Ring({', '.join(map(str, self.variables))})"

    def var(self, v):
        if isinstance(v, str):
            v = parse_var(v)
        exp = [0] * self.nvars
        exp[self.index[v]] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: Fraction(1)})

    def zero(self):
        return Polynomial(self, {})

    def with_aux(self):
        """This ring with the auxiliary variable t prepended."""
        if any(v.kind == AUX for v in self.variables):
            return self
        return Ring((VarId(AUX, 0),) + self.variables)

    def without(self, drop):
        drop = set(drop)
        return Ring(v for v in self.variables if v not in drop)

    def default_order(self):
        return MonomialOrder(self, self.variables)

    def parse(self, text):
        return parse_polynomial(text, self)


def bei_ring(n, aux=False):
    """Q[x_1..x_n, y_1..y_n], optionally with t in front."""
    r = Ring([VarId(X, i) for i in range(1, n + 1)] + [VarId(Y, i) for i in range(1, n + 1)])
    return r.with_aux() if aux else r


def _frac(c):
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Immutable polynomial: mapping exponent tuple -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {m: _frac(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * ring.nvars: c})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        c = _frac(c)
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return {self.ring.variables[i] for i in used}

    def to_ring(self, ring):
        """Embed into (or restrict to) a ring sharing the used variables."""
        idx = [ring.index.get(v) for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    if idx[i] is None:
                        raise ValueError(f"variable {self.ring.variables[i]} missing from target ring")
                    new[idx[i]] = e
            out[tuple(new)] = c
        return Polynomial(ring, out)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def scale(f, c):
    return f.scale(c)


# --- text form -----------------------------------------------------------


def format_monomial(ring, m):
    parts = []
    for v, e in zip(ring.variables, m):
        if e == 1:
            parts.append(str(v))
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(f, order=None):
    """Render as e.g. ``x1*y2 - x2*y1``; terms descend in ``order`` (ring order by default)."""
    if not f.terms:
        return "0"
    order = order or f.ring.default_order()
    out = []
    for m in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[m]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(f.ring, m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_polynomial(text, ring):
    """Inverse of :func:`format_polynomial`; accepts integer or p/q coefficients."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return ring.zero()
    pos = 0
    total = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (m.group(1) is None and not first):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        exp = [0] * ring.nvars
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            v = parse_var(name.strip())
            if v not in ring.index:
                raise ValueError(f"variable {v} not in ring")
            exp[ring.index[v]] += int(power) if power else 1
        key = tuple(exp)
        total[key] = total.get(key, 0) + coeff
        pos = m.end()
    return Polynomial(ring, total)


# --- monomial orders -----------------------------------------------------


class MonomialOrder:
    """Pure lex order given by a priority sequence of ring variables (highest first)."""

    __slots__ = ("ring", "priority", "perm", "inverse")

    def __init__(self, ring, priority):
        priority = tuple(parse_var(v) if isinstance(v, str) else v for v in priority)
        if sorted(priority) != sorted(ring.variables):
            raise ValueError("priority must be a permutation of the ring variables")
        self.ring = ring
        self.priority = priority
        self.perm = tuple(ring.index[v] for v in priority)
        inv = [0] * len(self.perm)
        for k, i in enumerate(self.perm):
            inv[i] = k
        self.inverse = tuple(inv)

    def key(self, m):
        return tuple(m[i] for i in self.perm)

    def unkey(self, k):
        return tuple(k[j] for j in self.inverse)

    def leading_monomial(self, f):
        return max(f.terms, key=self.key)

    def leading_term(self, f):
        m = self.leading_monomial(f)
        return m, f.terms[m]

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.ring == other.ring and self.priority == other.priority

    def __hash__(self):
        return hash((self.ring, self.priority))

    def __repr__(self):
        return " > ".join(map(str, self.priority))


# --- internal arithmetic on order-permuted exponent tuples ---------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _addm(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _to_internal(f, order):
    return {order.key(m): c for m, c in f.terms.items()}


def _from_internal(d, order):
    return Polynomial(order.ring, {order.unkey(k): c for k, c in d.items()})


def _monic(d):
    lc = d[max(d)]
    if lc == 1:
        return d
    inv = 1 / lc
    return {m: c * inv for m, c in d.items()}


def _reduce(f, basis):
    """Full reduction of internal poly ``f`` by internal monic ``basis`` (list of (lm, poly)).

    The largest remaining monomial is always treated next, reduced by the
    first basis element whose leading monomial divides it.
    """
    f = dict(f)
    rem = {}
    while f:
        m = max(f)
        c = f.pop(m)
        for lm, g in basis:
            if _divides(lm, m):
                q = _sub(m, lm)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    nm = _addm(gm, q)
                    v = f.get(nm, 0) - c * gc
                    if v:
                        f[nm] = v
                    else:
                        f.pop(nm, None)
                break
        else:
            rem[m] = c
    return rem


def _spoly(f, g, lf, lg):
    l = _lcm(lf, lg)
    qf, qg = _sub(l, lf), _sub(l, lg)
    out = {}
    for m, c in f.items():
        if m != lf:
            out[_addm(m, qf)] = c
    for m, c in g.items():
        if m != lg:
            k = _addm(m, qg)
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _gb_deadline():
    raw = os.environ.get("KOSZUL_MAX_GB_SECONDS")
    seconds = float(raw) if raw else DEFAULT_GB_SECONDS
    if seconds <= 0:
        raise ValueError("KOSZUL_MAX_GB_SECONDS must be positive")
    return time.monotonic() + seconds, seconds


def _buchberger_internal(polys, selection="normal"):
    deadline, budget = _gb_deadline()
    G = []  # list of (lm, monic poly)
    pairs = set()
    for p in polys:
        if p:
            p = _monic(p)
            G.append((max(p), p))
    for j in range(len(G)):
        for i in range(j):
            pairs.add((i, j))

    def pick():
        if selection == "normal":
            return min(pairs, key=lambda ij: (sum(_lcm(G[ij[0]][0], G[ij[1]][0])), _lcm(G[ij[0]][0], G[ij[1]][0]), ij))
        if selection == "fifo":
            return min(pairs, key=lambda ij: (ij[1], ij[0]))
        if selection == "lifo":
            return max(pairs, key=lambda ij: (ij[1], ij[0]))
        raise ValueError(f"unknown selection strategy {selection!r}")

    while pairs:
        if time.monotonic() > deadline:
            raise CostGuardError(f"Groebner basis computation exceeded {budget:g} s")
        i, j = pick()
        pairs.discard((i, j))
        li, lj = G[i][0], G[j][0]
        l = _lcm(li, lj)
        # first criterion: coprime leading monomials
        if l == _addm(li, lj):
            continue
        # second (chain) criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not _divides(G[k][0], l):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        h = _reduce(_spoly(G[i][1], G[j][1], li, lj), G)
        if h:
            h = _monic(h)
            G.append((max(h), h))
            n = len(G) - 1
            for k in range(n):
                pairs.add((k, n))
    return _interreduce(G)


def _interreduce(G):
    # drop elements whose leading monomial is divisible by another's
    kept = []
    for idx, (lm, p) in enumerate(G):
        dominated = False
        for jdx, (lm2, _) in enumerate(G):
            if jdx == idx:
                continue
            if _divides(lm2, lm) and (lm2 != lm or jdx < idx):
                dominated = True
                break
        if not dominated:
            kept.append((lm, p))
    out = []
    for idx, (lm, p) in enumerate(kept):
        others = [q for jdx, q in enumerate(kept) if jdx != idx]
        tail = _reduce({m: c for m, c in p.items() if m != lm}, others)
        tail[lm] = p[lm]
        out.append((lm, _monic(tail)))
    out.sort(key=lambda t: t[0], reverse=True)
    return out


# --- public Groebner API -------------------------------------------------


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by decreasing leading monomial."""

    order: MonomialOrder
    elements: list

    @property
    def ring(self):
        return self.order.ring

    def leading_monomials(self):
        return [self.order.leading_monomial(g) for g in self.elements]

    def max_degree(self):
        return max((g.degree() for g in self.elements), default=0)

    def reduce(self, f):
        return normal_form(f, self.elements, self.order)

    def contains(self, f):
        return self.reduce(f).is_zero()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self):
        return {
            "order": [str(v) for v in self.order.priority],
            "gb": [format_polynomial(g, self.order) for g in self.elements],
            "initial_ideal": [format_monomial(self.ring, m) for m in self.leading_monomials()],
            "max_degree": self.max_degree(),
        }


def _check_ring(polys, ring):
    for p in polys:
        if p.ring != ring:
            raise ValueError("ring mismatch")


def normal_form(f, basis, order):
    """Remainder of f on division by ``basis`` (made monic internally) in ``order``."""
    _check_ring([f, *basis], order.ring)
    internal = []
    for g in basis:
        if g.is_zero():
            raise ValueError("basis elements must be nonzero")
        d = _monic(_to_internal(g, order))
        internal.append((max(d), d))
    return _from_internal(_reduce(_to_internal(f, order), internal), order)


def buchberger(gens, order, selection="normal"):
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    if selection not in SELECTIONS:
        raise ValueError(f"unknown selection strategy {selection!r}")
    gens = list(gens)
    _check_ring(gens, order.ring)
    G = _buchberger_internal([_to_internal(g, order) for g in gens if g], selection)
    return GroebnerBasis(order, [_from_internal(p, order) for _, p in G])


def initial_ideal(gb):
    """Minimal generators of the initial ideal, as monic monomials."""
    ring = gb.ring
    return [Polynomial(ring, {m: 1}) for m in gb.leading_monomials()]


def ideal_membership(f, gb):
    return gb.contains(f)


def eliminate(gens, drop_vars, rest_order=None):
    """Groebner basis of (gens) ∩ Q[remaining variables].

    Uses lex with ``drop_vars`` first, followed by ``rest_order`` (the ring
    order of the remaining variables by default).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("eliminate needs at least one generator (to fix the ring)")
    ring = gens[0].ring
    drop = [parse_var(v) if isinstance(v, str) else v for v in drop_vars]
    sub = ring.without(drop)
    rest = rest_order.priority if rest_order is not None else sub.variables
    full = MonomialOrder(ring, list(drop) + list(rest))
    gb = buchberger(gens, full)
    keep = [g for g in gb.elements if not (g.variables() & set(drop))]
    sub_order = MonomialOrder(sub, rest)
    return GroebnerBasis(sub_order, sorted((g.to_ring(sub) for g in keep), key=lambda g: sub_order.key(sub_order.leading_monomial(g)), reverse=True))


def divide_exact(h, f, order):
    """Quotient h / f, requiring a zero remainder."""
    q = {}
    hd = _to_internal(h, order)
    fd = _to_internal(f, order)
    lf = max(fd)
    cf = fd[lf]
    while hd:
        m = max(hd)
        if not _divides(lf, m):
            raise ConsistencyError("polynomial is not divisible", dividend=str(h), divisor=str(f))
        c = hd[m] / cf
        s = _sub(m, lf)
        q[s] = q.get(s, 0) + c
        for fm, fc in fd.items():
            k = _addm(fm, s)
            v = hd.get(k, 0) - c * fc
            if v:
                hd[k] = v
            else:
                hd.pop(k, None)
    return _from_internal(q, order)


def intersect_principal(gens, f):
    """Generators of (gens) ∩ (f) via t*gens + (1 - t)*f, eliminating t."""
    ring = f.ring
    _check_ring(gens, ring)
    rt = ring.with_aux()
    t = rt.var(VarId(AUX, 0))
    lifted = [t * g.to_ring(rt) for g in gens if g] + [(1 - t) * f.to_ring(rt)]
    return eliminate(lifted, [VarId(AUX, 0)], ring.default_order())


def colon_by_element(gens, f, order=None):
    """Reduced Groebner basis of (gens : f), in ``order`` (ring order by default)."""
    if f.is_zero():
        raise ValueError("colon by zero is undefined here")
    ring = f.ring
    gens = [g for g in gens if g]
    order = order or ring.default_order()
    if not gens:
        return GroebnerBasis(order, [])
    inter = intersect_principal(gens, f)
    quotients = [divide_exact(h.to_ring(ring), f, ring.default_order()) for h in inter.elements]
    return buchberger(quotients, order)


def ideal_equal(gens_a, gens_b, order=None):
    """Equality of ideals by mutual generator membership, cross-checked against reduced bases."""
    gens_a = [g for g in gens_a if g]
    gens_b = [g for g in gens_b if g]
    ring = (gens_a or gens_b)[0].ring if (gens_a or gens_b) else None
    if ring is None:
        return True
    order = order or ring.default_order()
    ga = buchberger(gens_a, order)
    gb = buchberger(gens_b, order)
    mutual = all(gb.contains(g) for g in gens_a) and all(ga.contains(g) for g in gens_b)
    same = sorted(map(str, ga.elements)) == sorted(map(str, gb.elements))
    if mutual != same:
        raise ConsistencyError("ideal-equality routes disagree", mutual=mutual, same_reduced_basis=same)
    return mutual
