"""Graded state spaces with exact inner products.

Covers fermionic Fock spaces, Verma modules for the Virasoro and
Neveu-Schwarz algebras, induced modules of affine Lie algebras with a
highest-weight floor, tensor products of an affine module with a Fock
space, and Gram-kernel quotients of any of these.

Conventions.  Mode indices are stored doubled (``n2 = 2n``) so
half-integers stay integral.  A basis word lists creation modes sorted
by decreasing ``|index|``, ties broken by kind then color; repeated
entries are allowed only for even modes.  The Hermitian pairing is
linear in the first slot and conjugate-linear in the second, with the
floor normalized to norm 1 (or to the invariant diagonal form on a spin
floor).  Adjoints send an index to its negative.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .liealg import LieAlgebra, sl2, sl2_floor
from .linalg import inertia_with_witness, kernel_basis, row_reduce
from .scalars import ONE, ZERO, I, Scalar

KIND_RANK = {"x": 0, "L": 1, "G": 2, "psi": 3}
ODD_KINDS = frozenset({"psi", "G"})


class Mode(NamedTuple):
    """A single raising/lowering operator; n2 is twice the index."""

    kind: str
    color: int
    n2: int

    def __str__(self):
        idx = Fraction(self.n2, 2)
        name = self.kind if self.kind in ("L", "G") else f"{self.kind}{self.color + 1}"
        return f"{name}({idx})"


def mode_parity(kind: str) -> int:
    return 1 if kind in ODD_KINDS else 0


def mode_key(m: Mode) -> tuple:
    return (abs(m.n2), KIND_RANK[m.kind], m.color)


def adjoint_mode(m: Mode) -> Mode:
    return Mode(m.kind, m.color, -m.n2)


class BasisState(NamedTuple):
    word: tuple
    floor: int

    def __str__(self):
        if not self.word:
            core = "Ω"
        else:
            core = " ".join(str(m) for m in self.word) + " Ω"
        return core if self.floor == 0 else f"{core}[{self.floor}]"


def state_grade2(state: BasisState) -> int:
    return sum(-m.n2 for m in state.word)


def state_parity(state: BasisState) -> int:
    return sum(mode_parity(m.kind) for m in state.word) & 1


def grade_str(n2: int) -> str:
    return str(Fraction(n2, 2))


def _acc(d: dict, state: BasisState, coeff: Scalar):
    cur = d.get(state)
    cur = coeff if cur is None else cur + coeff
    if cur:
        d[state] = cur
    elif state in d:
        del d[state]


class StateVector:
    """A finite linear combination of basis states."""

    __slots__ = ("_d",)

    def __init__(self, data=None):
        self._d = {}
        if data:
            for state, coeff in (data.items() if isinstance(data, dict) else data):
                _acc(self._d, state, Scalar.of(coeff))

    @staticmethod
    def basis(state: BasisState) -> "StateVector":
        return StateVector({state: ONE})

    @staticmethod
    def _wrap(d: dict) -> "StateVector":
        v = StateVector.__new__(StateVector)
        v._d = d
        return v

    @property
    def data(self) -> dict:
        return self._d

    def items(self):
        return self._d.items()

    def coefficient(self, state: BasisState) -> Scalar:
        return self._d.get(state, ZERO)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    def __add__(self, other):
        d = dict(self._d)
        for s, c in other._d.items():
            _acc(d, s, c)
        return StateVector._wrap(d)

    def __sub__(self, other):
        d = dict(self._d)
        for s, c in other._d.items():
            _acc(d, s, -c)
        return StateVector._wrap(d)

    def __neg__(self):
        return StateVector._wrap({s: -c for s, c in self._d.items()})

    def scaled(self, coeff) -> "StateVector":
        coeff = Scalar.of(coeff)
        if not coeff:
            return StateVector._wrap({})
        return StateVector._wrap({s: c * coeff for s, c in self._d.items()})

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self._d == other._d

    def sorted_items(self):
        return sorted(self._d.items(), key=lambda sc: (state_grade2(sc[0]), sc[0]))

    def __str__(self):
        if not self._d:
            return "0"
        parts = []
        for state, coeff in self.sorted_items():
            parts.append(f"({coeff})·{state}")
        return " + ".join(parts)

    __repr__ = __str__


class Module:
    """Shared machinery: normal ordering, pairings, Gram analysis."""

    kinds: frozenset

    def __init__(self):
        self._apply_cache = {}
        self._inner_cache = {}
        self._basis_cache = {}

    # -- interface supplied by concrete modules -------------------------

    def floor_dim(self) -> int:
        return 1

    def floor_pairing(self, i: int, j: int) -> Scalar:
        return ONE if i == j else ZERO

    def floor_action0(self, mode: Mode, floor: int) -> list:
        """Action of an index-zero mode on a floor vector: [(coeff, floor')]."""
        raise ValueError(f"no index-zero action for {mode} on {type(self).__name__}")

    def bracket(self, m1: Mode, m2: Mode) -> list:
        """Graded bracket [m1, m2] as [(coeff, Mode | None)]; None is the identity."""
        raise NotImplementedError

    def creation_modes(self, max_n2: int) -> list:
        raise NotImplementedError

    def translation_floor(self, floor: int) -> dict:
        """T applied to a floor vector, as a state dict."""
        return {}

    # -- states ----------------------------------------------------------

    def vacuum(self, floor: int = 0) -> StateVector:
        return StateVector.basis(BasisState((), floor))

    def check_mode(self, mode: Mode):
        if mode.kind not in self.kinds:
            raise ValueError(f"{type(self).__name__} has no {mode.kind} modes")
        want_odd = 1 if mode.kind in ("psi", "G") else 0
        if abs(mode.n2) % 2 != want_odd:
            raise ValueError(f"index parity mismatch for {mode}")

    def level_basis(self, n2: int) -> list:
        if n2 < 0:
            return []
        cached = self._basis_cache.get(n2)
        if cached is None:
            modes = sorted(self.creation_modes(n2), key=mode_key, reverse=True)
            words = []

            def rec(start, remaining, acc):
                if remaining == 0:
                    words.append(tuple(acc))
                    return
                for j in range(start, len(modes)):
                    m = modes[j]
                    if -m.n2 > remaining:
                        continue
                    acc.append(m)
                    rec(j + 1 if mode_parity(m.kind) else j, remaining + m.n2, acc)
                    acc.pop()

            rec(0, n2, [])
            cached = [BasisState(w, fl) for w in words for fl in range(self.floor_dim())]
            self._basis_cache[n2] = cached
        return cached

    def dims(self, depth2: int) -> list:
        return [len(self.level_basis(n2)) for n2 in range(depth2 + 1)]

    # -- mode application ------------------------------------------------

    def apply_to_basis(self, mode: Mode, state: BasisState) -> dict:
        """mode . state as a frozen dict; callers must not mutate the result."""
        key = (mode, state)
        out = self._apply_cache.get(key)
        if out is None:
            out = self._apply_uncached(mode, state)
            self._apply_cache[key] = out
        return out

    def _apply_uncached(self, mode: Mode, state: BasisState) -> dict:
        self.check_mode(mode)
        if mode.n2 > state_grade2(state):
            return {}
        word = state.word
        if not word:
            if mode.n2 > 0:
                return {}
            if mode.n2 == 0:
                out = {}
                for coeff, fl in self.floor_action0(mode, state.floor):
                    _acc(out, BasisState((), fl), coeff)
                return out
            return {BasisState((mode,), state.floor): ONE}
        head = word[0]
        if mode.n2 < 0:
            k, k1 = mode_key(mode), mode_key(head)
            if k > k1 or (k == k1 and not mode_parity(mode.kind)):
                return {BasisState((mode,) + word, state.floor): ONE}
            if k == k1:
                # square of an odd mode: m^2 = (1/2)[m, m]_+
                rest = BasisState(word[1:], state.floor)
                out = {}
                for coeff, bmode in self.bracket(mode, head):
                    half = coeff * Fraction(1, 2)
                    if bmode is None:
                        _acc(out, rest, half)
                    else:
                        for st, c in self.apply_to_basis(bmode, rest).items():
                            _acc(out, st, half * c)
                return out
        rest = BasisState(word[1:], state.floor)
        sign = -1 if mode_parity(mode.kind) and mode_parity(head.kind) else 1
        out = {}
        for st, c in self.apply_to_basis(mode, rest).items():
            if sign < 0:
                c = -c
            for st2, c2 in self.apply_to_basis(head, st).items():
                _acc(out, st2, c * c2)
        for coeff, bmode in self.bracket(mode, head):
            if bmode is None:
                _acc(out, rest, coeff)
            else:
                for st, c in self.apply_to_basis(bmode, rest).items():
                    _acc(out, st, coeff * c)
        return out

    def apply(self, mode: Mode, vec: StateVector) -> StateVector:
        out = {}
        for state, coeff in vec.items():
            for st, c in self.apply_to_basis(mode, state).items():
                _acc(out, st, coeff * c)
        return StateVector._wrap(out)

    def apply_word(self, modes, vec: StateVector) -> StateVector:
        """Apply a sequence of modes, rightmost first."""
        for mode in reversed(list(modes)):
            vec = self.apply(mode, vec)
        return vec

    # -- inner products --------------------------------------------------

    def inner_basis(self, b1: BasisState, b2: BasisState) -> Scalar:
        if state_grade2(b1) != state_grade2(b2):
            return ZERO
        key = (b1, b2)
        out = self._inner_cache.get(key)
        if out is None:
            if not b1.word:
                if not b2.word:
                    out = self.floor_pairing(b1.floor, b2.floor)
                else:
                    out = self.inner_basis(b2, b1).conjugate()
            else:
                head, rest = b1.word[0], BasisState(b1.word[1:], b1.floor)
                out = ZERO
                moved = self.apply_to_basis(adjoint_mode(head), b2)
                for t, c in moved.items():
                    out = out + c.conjugate() * self.inner_basis(rest, t)
            self._inner_cache[key] = out
        return out

    def inner(self, u: StateVector, v: StateVector) -> Scalar:
        out = ZERO
        for b1, c1 in u.items():
            for b2, c2 in v.items():
                val = self.inner_basis(b1, b2)
                if val:
                    out = out + c1 * c2.conjugate() * val
        return out

    def gram(self, n2: int) -> tuple:
        basis = self.level_basis(n2)
        matrix = [[self.inner_basis(b1, b2) for b2 in basis] for b1 in basis]
        return basis, matrix

    def kernel_vectors(self, n2: int) -> list:
        basis, matrix = self.gram(n2)
        if not basis:
            return []
        # null vectors of the pairing: v with <w, v> = 0 for all w; the
        # Gram columns are conjugate-linear in v, so solve with the
        # conjugated matrix (real Grams are unaffected)
        conj = [[x.conjugate() for x in row] for row in matrix]
        out = []
        for coeffs in kernel_basis(conj):
            out.append(StateVector({b: c for b, c in zip(basis, coeffs) if c}))
        return out

    def irreducible_dims(self, depth2: int) -> list:
        dims = []
        for n2 in range(depth2 + 1):
            basis = self.level_basis(n2)
            dims.append(len(basis) - len(self.kernel_vectors(n2)) if basis else 0)
        return dims

    def ghost_report(self, depth2: int) -> dict:
        levels = []
        first_negative = None
        for n2 in range(depth2 + 1):
            basis, matrix = self.gram(n2)
            if not basis:
                levels.append({"grade": grade_str(n2), "dim": 0,
                               "positive": 0, "zero": 0, "negative": 0})
                continue
            pos, zero, neg, witness = inertia_with_witness(matrix)
            entry = {"grade": grade_str(n2), "dim": len(basis),
                     "positive": pos, "zero": zero, "negative": neg}
            if witness is not None:
                entry["witness"] = StateVector(
                    {b: Scalar.of(c) for b, c in zip(basis, witness) if c})
            if neg and first_negative is None:
                first_negative = grade_str(n2)
            levels.append(entry)
        return {"levels": levels,
                "has_ghost": first_negative is not None,
                "first_negative_grade": first_negative}

    # -- grading operators ----------------------------------------------

    def operator_D(self, vec: StateVector) -> StateVector:
        out = {}
        for state, coeff in vec.items():
            g2 = state_grade2(state)
            if g2:
                _acc(out, state, coeff * Fraction(g2, 2))
        return StateVector._wrap(out)

    def operator_T(self, vec: StateVector) -> StateVector:
        out = {}
        for state, coeff in vec.items():
            for st, c in self._translate_basis(state).items():
                _acc(out, st, coeff * c)
        return StateVector._wrap(out)

    def _translate_basis(self, state: BasisState) -> dict:
        if not state.word:
            return self.translation_floor(state.floor)
        head, rest = state.word[0], BasisState(state.word[1:], state.floor)
        out = {}
        for st, c in self._translate_basis(rest).items():
            for st2, c2 in self.apply_to_basis(head, st).items():
                _acc(out, st2, c * c2)
        kappa = _translation_coeff(head)
        if kappa:
            shifted = Mode(head.kind, head.color, head.n2 - 2)
            for st, c in self.apply_to_basis(shifted, rest).items():
                _acc(out, st, c * kappa)
        return out


def _translation_coeff(mode: Mode) -> Fraction:
    """[T, A_{-a}] = (a - w + 1) A_{-a-1} for a mode of a weight-w field;
    w = 1/2, 1, 3/2, 2 for psi, x, G, L."""
    a2 = -mode.n2
    if mode.kind == "psi":
        return Fraction(a2 + 1, 2)
    if mode.kind == "G":
        return Fraction(a2 - 1, 2)
    if mode.kind == "x":
        return Fraction(a2, 2)
    return Fraction(a2 - 2, 2)


class FermionFock(Module):
    """Neveu-Schwarz Fock space of `colors` free fermions.

    psi^a_m with m in Z + 1/2, {psi^a_m, psi^b_n} = delta_ab delta_{m+n},
    psi^a_m* = psi^a_{-m}.
    """

    kinds = frozenset({"psi"})

    def __init__(self, colors: int = 1):
        super().__init__()
        if colors < 1:
            raise ValueError("need at least one fermion")
        self.colors = colors

    def bracket(self, m1: Mode, m2: Mode) -> list:
        if m1.color == m2.color and m1.n2 + m2.n2 == 0:
            return [(ONE, None)]
        return []

    def creation_modes(self, max_n2: int) -> list:
        return [Mode("psi", a, -m2)
                for m2 in range(1, max_n2 + 1, 2)
                for a in range(self.colors)]


class VermaModule(Module):
    """Verma module V(c, h) of the Virasoro or Neveu-Schwarz algebra.

    algebra="virasoro" uses L modes only; algebra="ns" adds the odd
    G modes of the super extension, indexed by Z + 1/2.
    """

    def __init__(self, algebra: str, c, h):
        super().__init__()
        if algebra not in ("virasoro", "ns"):
            raise ValueError(f"unknown algebra {algebra!r}")
        self.algebra = algebra
        self.kinds = frozenset({"L"}) if algebra == "virasoro" else frozenset({"L", "G"})
        self.c = Scalar.of(c)
        self.h = Scalar.of(h)

    def floor_action0(self, mode: Mode, floor: int) -> list:
        if mode.kind == "L":
            return [(self.h, floor)] if self.h else []
        raise ValueError(f"no index-zero action for {mode}")

    def bracket(self, m1: Mode, m2: Mode) -> list:
        k1, k2 = m1.kind, m2.kind
        if k1 == "L" and k2 == "L":
            m, n = m1.n2 // 2, m2.n2 // 2
            out = []
            if m != n:
                out.append((Scalar.of(m - n), Mode("L", 0, m1.n2 + m2.n2)))
            if m + n == 0 and m ** 3 - m:
                out.append((self.c * Fraction(m ** 3 - m, 12), None))
            return out
        if k1 == "G" and k2 == "L":
            coeff = Fraction(2 * m1.n2 - m2.n2, 4)
            if not coeff:
                return []
            return [(Scalar.of(coeff), Mode("G", 0, m1.n2 + m2.n2))]
        if k1 == "L" and k2 == "G":
            return [(-c, mode) for (c, mode) in self.bracket(m2, m1)]
        # G, G anticommutator
        out = [(Scalar.of(2), Mode("L", 0, m1.n2 + m2.n2))]
        if m1.n2 + m2.n2 == 0:
            central = self.c * Fraction(m1.n2 * m1.n2 - 1, 12)
            if central:
                out.append((central, None))
        return out

    def creation_modes(self, max_n2: int) -> list:
        modes = [Mode("L", 0, -m2) for m2 in range(2, max_n2 + 1, 2)]
        if self.algebra == "ns":
            modes += [Mode("G", 0, -m2) for m2 in range(1, max_n2 + 1, 2)]
        return modes

    def translation_floor(self, floor: int) -> dict:
        return {BasisState((Mode("L", 0, -2),), floor): ONE}


class AffineModule(Module):
    """Module of an affine Lie algebra induced from a floor representation.

    [X^a_m, X^b_n] = i sum_c Gamma_ab^c X^c_{m+n} + m delta_ab
    delta_{m+n} * level, with X^a_m* = X^a_{-m}; positive modes kill the
    floor and X^a_0 acts there by the floor matrices.
    """

    kinds = frozenset({"x"})

    def __init__(self, lie: LieAlgebra, level: int, spin2: int = 0):
        super().__init__()
        self.lie = lie
        self.level = int(level)
        if self.level < 0:
            raise ValueError("level must be nonnegative")
        self.spin2 = spin2
        if spin2:
            if lie.name != "sl2":
                raise ValueError("spin floors are available for sl2 only")
            self._floor_dim, self._floor_mats, self._floor_gram = sl2_floor(spin2)
        else:
            self._floor_dim = 1
            self._floor_mats = [dict() for _ in range(lie.dim)]
            self._floor_gram = [ONE]

    def floor_dim(self) -> int:
        return self._floor_dim

    def floor_pairing(self, i: int, j: int) -> Scalar:
        return self._floor_gram[i] if i == j else ZERO

    def floor_action0(self, mode: Mode, floor: int) -> list:
        mat = self._floor_mats[mode.color]
        return [(val, r) for (r, c), val in mat.items() if c == floor]

    def bracket(self, m1: Mode, m2: Mode) -> list:
        out = []
        for c, coeff in self.lie.bracket_coeffs(m1.color, m2.color):
            out.append((I * coeff, Mode("x", c, m1.n2 + m2.n2)))
        if m1.color == m2.color and m1.n2 + m2.n2 == 0:
            m = m1.n2 // 2
            if m and self.level:
                out.append((Scalar.of(m * self.level), None))
        return out

    def creation_modes(self, max_n2: int) -> list:
        return [Mode("x", a, -m2)
                for m2 in range(2, max_n2 + 1, 2)
                for a in range(self.lie.dim)]


class TensorModule(Module):
    """Tensor product of an affine module (even) with a fermionic Fock space.

    Words mix current and fermion creation modes; the factors commute, so
    no Koszul signs cross the tensor sign.
    """

    def __init__(self, left: AffineModule, right: FermionFock):
        super().__init__()
        self.left = left
        self.right = right
        self.kinds = left.kinds | right.kinds

    def floor_dim(self) -> int:
        return self.left.floor_dim()

    def floor_pairing(self, i: int, j: int) -> Scalar:
        return self.left.floor_pairing(i, j)

    def floor_action0(self, mode: Mode, floor: int) -> list:
        if mode.kind == "x":
            return self.left.floor_action0(mode, floor)
        raise ValueError(f"no index-zero action for {mode}")

    def bracket(self, m1: Mode, m2: Mode) -> list:
        if m1.kind == "x" and m2.kind == "x":
            return self.left.bracket(m1, m2)
        if m1.kind == "psi" and m2.kind == "psi":
            return self.right.bracket(m1, m2)
        return []

    def creation_modes(self, max_n2: int) -> list:
        return self.left.creation_modes(max_n2) + self.right.creation_modes(max_n2)


class QuotientModule(Module):
    """A module modulo the kernel of its Hermitian pairing.

    The kernel is an invariant submodule, so mode actions descend; states
    are represented by base basis states away from kernel pivots, and
    every application reduces its output modulo the kernel at the output
    grade.
    """

    def __init__(self, base: Module):
        super().__init__()
        self.base = base
        self.kinds = base.kinds
        self._level_data = {}

    def _level(self, n2: int):
        data = self._level_data.get(n2)
        if data is None:
            basis = self.base.level_basis(n2)
            kernel = self.base.kernel_vectors(n2)
            rows = [[vec.coefficient(b) for b in basis] for vec in kernel]
            reduced, pivots = row_reduce(rows) if rows else ([], [])
            reducers = {}
            for row, p in zip(reduced, pivots):
                reducers[basis[p]] = [(basis[j], row[j]) for j in range(len(basis))
                                      if row[j] and j != p]
            reps = [b for j, b in enumerate(basis) if j not in pivots]
            data = (reps, reducers)
            self._level_data[n2] = data
        return data

    def reduce(self, d: dict) -> dict:
        out = {}
        grades = {state_grade2(s) for s in d}
        reducers = {}
        for g2 in grades:
            reducers.update(self._level(g2)[1])
        for state, coeff in d.items():
            red = reducers.get(state)
            if red is None:
                _acc(out, state, coeff)
            else:
                for rep_state, rc in red:
                    _acc(out, rep_state, -coeff * rc)
        return out

    def level_basis(self, n2: int) -> list:
        if n2 < 0:
            return []
        return self._level(n2)[0]

    def floor_dim(self) -> int:
        return self.base.floor_dim()

    def floor_pairing(self, i, j):
        return self.base.floor_pairing(i, j)

    def check_mode(self, mode: Mode):
        self.base.check_mode(mode)

    def _apply_uncached(self, mode: Mode, state: BasisState) -> dict:
        return self.reduce(self.base.apply_to_basis(mode, state))

    def inner_basis(self, b1: BasisState, b2: BasisState) -> Scalar:
        return self.base.inner_basis(b1, b2)

    def bracket(self, m1, m2):
        return self.base.bracket(m1, m2)

    def creation_modes(self, max_n2: int):
        return self.base.creation_modes(max_n2)

    def translation_floor(self, floor: int) -> dict:
        return self.base.translation_floor(floor)


def _parse_spin2(value) -> int:
    if isinstance(value, str):
        spin = Fraction(value)
    else:
        spin = Fraction(value)
    spin2 = spin * 2
    if spin2.denominator != 1 or spin2 < 0:
        raise ValueError(f"spin must be a nonnegative half-integer, got {value!r}")
    return int(spin2)


def module_from_descriptor(desc: dict) -> Module:
    """Build a module from a JSON descriptor.

    Supported: {"type": "ns_verma", "c": ..., "h": ...} (and
    "virasoro_verma"), {"type": "affine", "algebra": "sl2", "level": n,
    "spin": j}, {"type": "fermion", "colors": n}, and {"type": "tensor",
    "factors": [affine, fermion]}.  Scalar entries accept the JSON term
    list, a bare integer, or a fraction string.
    """
    kind = desc.get("type")
    if kind == "ns_verma" or kind == "virasoro_verma":
        algebra = "ns" if kind == "ns_verma" else "virasoro"
        return VermaModule(algebra,
                           Scalar.from_json(desc["c"]),
                           Scalar.from_json(desc["h"]))
    if kind == "fermion":
        return FermionFock(int(desc.get("colors", 1)))
    if kind == "affine":
        name = desc.get("algebra", "sl2")
        if isinstance(name, dict):
            lie = LieAlgebra.from_json(name)
        elif name == "sl2":
            lie = sl2()
        else:
            raise ValueError(f"unknown algebra {name!r}")
        return AffineModule(lie, int(desc["level"]), _parse_spin2(desc.get("spin", 0)))
    if kind == "tensor":
        factors = [module_from_descriptor(f) for f in desc["factors"]]
        if len(factors) != 2 or not isinstance(factors[1], FermionFock) \
                or not isinstance(factors[0], AffineModule):
            raise ValueError("tensor descriptor needs [affine, fermion] factors")
        return TensorModule(factors[0], factors[1])
    raise ValueError(f"unknown module type {kind!r}")
